import networkx as nx
import pytest

from aiearth.repetition.exception import RepetitionException
from aiearth.repetition.graphs import (
    Ball,
    CaterpillarSpec,
    ColoredGraph,
    EmbeddedBinaryTree,
    ball_size,
    build_caterpillar,
    build_structure,
    build_tree,
    distance,
)

from conftest import random_tree


def test_caterpillar_layout():
    g = build_caterpillar(CaterpillarSpec.full(3))
    assert g.parent == [None, 0, 1, 0, 1, 2]
    assert g.tags[1] == {"role": "backbone", "index": 1}
    assert g.tags[4] == {"role": "pendant", "of": 1}
    assert g.max_degree() == 3
    g = build_caterpillar(CaterpillarSpec.cyclic(4, (2, 0)))
    assert g.vertex_count == 4 + 4
    assert [t["of"] for t in g.tags[4:]] == [0, 0, 2, 2]
    assert build_caterpillar(CaterpillarSpec.star(5)).max_degree() == 5
    assert build_caterpillar(CaterpillarSpec.path(5)).edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_caterpillar_spec_validation():
    with pytest.raises(ValueError):
        CaterpillarSpec(0, ())
    with pytest.raises(ValueError):
        CaterpillarSpec(2, (1,))
    with pytest.raises(ValueError):
        CaterpillarSpec(2, (2, 0), max_degree_three=True)
    with pytest.raises(ValueError):
        CaterpillarSpec(1, (-1,))


def test_ball_sizes():
    assert [ball_size(3, r) for r in range(5)] == [1, 4, 10, 22, 46]
    assert ball_size(4, 2) == 17
    for r in range(4):
        g = build_tree(Ball(3, r))
        assert g.vertex_count == ball_size(3, r)
        assert g.max_degree() <= 3
    with pytest.raises(ValueError):
        Ball(2, 1)


def test_binary_tree():
    g = build_tree(EmbeddedBinaryTree(3))
    assert g.vertex_count == 15
    assert len(g.adjacency[g.root]) == 2
    assert g.max_degree() == 3
    assert [g.tags[v]["side"] for v in (1, 2)] == [0, 1]
    assert g.depths == [g.tags[v]["level"] for v in range(g.vertex_count)]


def test_colored_graph_validation():
    with pytest.raises(RepetitionException):
        ColoredGraph([None, None], 2)
    with pytest.raises(RepetitionException):
        ColoredGraph([None, 2, 1], 2)
    with pytest.raises(RepetitionException):
        ColoredGraph([None, 0], 2, [0, 2])
    with pytest.raises(RepetitionException):
        ColoredGraph([], 2)
    g = ColoredGraph([None, 0], 2)
    assert not g.is_fully_colored()
    assert g.with_colors([0, 1]).is_fully_colored()


def test_distances_match_networkx(rng):
    for _ in range(30):
        g = random_tree(rng, int(rng.randint(1, 20)), 2)
        h = g.to_networkx()
        lengths = dict(nx.all_pairs_shortest_path_length(h))
        for u in range(g.vertex_count):
            for v in range(g.vertex_count):
                assert distance(g, u, v) == lengths[u][v]
        assert g.depths == [lengths[g.root][v] for v in range(g.vertex_count)]


def test_build_structure_dispatch():
    assert build_structure(CaterpillarSpec.full(2), k=3).k == 3
    assert build_structure(Ball(3, 1)).vertex_count == 4
    with pytest.raises(TypeError):
        build_tree("ball")
