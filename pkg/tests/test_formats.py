import json

import pytest

from aiearth.repetition.constructions import color_cp2, color_tree3, TreeColoringParams
from aiearth.repetition.exception import FormatError
from aiearth.repetition.graphs import (
    ColoredGraph,
    dumps_graph,
    graph_from_dict,
    graph_to_dict,
    load_graph,
    loads_graph,
    to_dot,
)
from aiearth.repetition.utils.colormap import generate_color_code_list


def test_graph_json():
    g = color_cp2(6)
    text = dumps_graph(g)
    assert dumps_graph(loads_graph(text)) == text
    data = json.loads(text)
    assert data["k"] == 2
    assert data["vertices"][0] == {"color": 0, "id": 0, "parent": None, "tags": {"index": 0, "role": "backbone"}}
    back = graph_from_dict(graph_to_dict(g))
    assert back.parent == g.parent and back.colors == g.colors and back.tags == g.tags


def test_tags_survive(tmp_path):
    g = color_tree3(TreeColoringParams(4, 2))
    path = tmp_path / "tree.json"
    path.write_text(dumps_graph(g, indent=2))
    back = load_graph(str(path))
    assert back.tags[3]["gamma"] == g.tags[3]["gamma"]
    assert back.colors == g.colors


def test_uncolored_vertices_roundtrip():
    g = ColoredGraph([None, 0], 3, [None, 2])
    assert loads_graph(dumps_graph(g)).colors == [None, 2]


@pytest.mark.parametrize(
    "data,field",
    [
        ({"vertices": []}, "k"),
        ({"k": 2}, "vertices"),
        ({"k": 2, "vertices": [{"id": 0, "parent": None, "color": "red"}]}, "vertices[0].color"),
        ({"k": 2, "vertices": [{"id": 1, "parent": None}]}, "vertices[0].id"),
        ({"k": 2, "vertices": [{"id": 0, "parent": None, "color": 5}]}, "vertices"),
    ],
)
def test_graph_errors(data, field):
    with pytest.raises(FormatError) as e:
        graph_from_dict(data)
    assert e.value.field == field


def test_invalid_json():
    with pytest.raises(FormatError) as e:
        loads_graph("{\n  \"k\": 2,\n  oops")
    assert e.value.line == 3


def test_dot():
    g = color_cp2(4)
    source = to_dot(g)
    palette = generate_color_code_list(2)
    assert source.startswith("graph G {")
    assert "0 -- 1" in source
    assert palette[0] in source and palette[1] in source
    assert generate_color_code_list(300)[255] == generate_color_code_list(1)[0]
