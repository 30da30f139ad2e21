import json

import graphviz

from ..exception import FormatError, RepetitionException
from ..utils.colormap import generate_color_code_list
from .structures import ColoredGraph


def graph_to_dict(g: ColoredGraph):
    return {
        "k": g.k,
        "vertices": [
            {"id": v, "parent": g.parent[v], "color": g.colors[v], "tags": g.tags[v]}
            for v in range(g.vertex_count)
        ],
    }


def _int_or_none(value, field):
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError("expected an integer or null, got %r" % (value,), field=field)
    return value


def graph_from_dict(data) -> ColoredGraph:
    if not isinstance(data, dict):
        raise FormatError("graph JSON must be an object")
    if "k" not in data:
        raise FormatError("missing color count", field="k")
    k = _int_or_none(data["k"], "k")
    vertices = data.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise FormatError("expected a non-empty list", field="vertices")
    vertices = sorted(vertices, key=lambda x: x.get("id", -1) if isinstance(x, dict) else -1)
    parent, colors, tags = [], [], []
    for i, vertex in enumerate(vertices):
        where = "vertices[%d]" % i
        if not isinstance(vertex, dict):
            raise FormatError("expected an object", field=where)
        if vertex.get("id") != i:
            raise FormatError("vertex ids must be 0..n-1, got %r" % (vertex.get("id"),), field=where + ".id")
        parent.append(_int_or_none(vertex.get("parent"), where + ".parent"))
        colors.append(_int_or_none(vertex.get("color"), where + ".color"))
        vertex_tags = vertex.get("tags", {})
        if not isinstance(vertex_tags, dict):
            raise FormatError("expected an object", field=where + ".tags")
        tags.append(vertex_tags)
    try:
        return ColoredGraph(parent, k, colors, tags)
    except RepetitionException as e:
        raise FormatError(str(e), field="vertices")


def dumps_graph(g: ColoredGraph, indent=None):
    return json.dumps(graph_to_dict(g), sort_keys=True, indent=indent)


def loads_graph(text) -> ColoredGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError("invalid JSON: %s" % e.msg, line=e.lineno)
    return graph_from_dict(data)


def load_graph(path) -> ColoredGraph:
    with open(path, encoding="utf-8") as f:
        return loads_graph(f.read())


def to_dot(g: ColoredGraph, name="G"):
    palette = generate_color_code_list(g.k)
    dot = graphviz.Graph(name=name)
    for v in range(g.vertex_count):
        c = g.colors[v]
        if c is None:
            dot.node(str(v), label=str(v))
        else:
            dot.node(str(v), label="%d:%d" % (v, c), style="filled", fillcolor=palette[c])
    for p, v in g.edges():
        dot.edge(str(p), str(v))
    return dot.source
