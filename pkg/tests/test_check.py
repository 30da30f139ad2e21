import networkx as nx
import pytest

from aiearth.repetition.constructions import TreeColoringParams, color_cp2, color_cp3_ternary, color_tree3
from aiearth.repetition.exception import UncoloredVertexError
from aiearth.repetition.graphs import (
    Ball,
    CaterpillarSpec,
    ColoredGraph,
    build_caterpillar,
    build_tree,
    check_colored,
    check_extension,
    close_vertex_set,
    distance,
    pigeonhole_certificate,
    pigeonhole_colors,
    same_color_within,
)
from aiearth.repetition.words import FreenessSpec

from conftest import naive_period, naive_tree_free, random_tree

SPECS = ["2/1", "2/1+", "3/2", "3/2+", "7/4+", "5/4", "3/1"]


def test_path_example():
    g = ColoredGraph([None, 0, 1], 2, [0, 1, 0])
    w = check_colored(g, FreenessSpec.parse("3/2"))
    assert w.vertices == (0, 1, 2)
    assert w.period == 2 and w.exponent == FreenessSpec.parse("3/2").bound
    assert check_colored(g, FreenessSpec.parse("3/2+")) is None


def test_uncolored():
    g = ColoredGraph([None, 0], 2, [0, None])
    with pytest.raises(UncoloredVertexError) as e:
        check_colored(g, FreenessSpec.parse("2/1"))
    assert e.value.vertex == 1


def test_witness_is_minimal():
    # a star whose leaves 1 and 3 share a color: the factor 1 0 3 reads "1 0 1"
    g = ColoredGraph([None, 0, 0, 0], 3, [0, 1, 2, 1])
    w = check_colored(g, FreenessSpec.parse("3/2"))
    assert w.vertices == (1, 0, 3)
    assert w.colors == (1, 0, 1)


def test_matches_brute_force(rng):
    for _ in range(150):
        n = int(rng.randint(1, 13))
        k = int(rng.randint(2, 4))
        g = random_tree(rng, n, k)
        spec = FreenessSpec.parse(SPECS[rng.randint(len(SPECS))])
        witness = check_colored(g, spec)
        assert (witness is None) == naive_tree_free(g, spec)
        if witness is not None:
            assert nx.is_simple_path(g.to_networkx(), list(witness.vertices))
            assert witness.period == naive_period(list(witness.colors))
            assert spec.forbids(witness.total_length, witness.period)


@pytest.mark.slow
def test_matches_brute_force_large(rng):
    for _ in range(500):
        n = int(rng.randint(1, 26))
        k = int(rng.randint(2, 5))
        g = random_tree(rng, n, k)
        spec = FreenessSpec.parse(SPECS[rng.randint(len(SPECS))])
        assert (check_colored(g, spec) is None) == naive_tree_free(g, spec)


def test_bounded_and_parallel(rng):
    spec = FreenessSpec.parse("7/4+")
    for _ in range(20):
        g = random_tree(rng, 20, 3)
        full = check_colored(g, spec)
        assert check_colored(g, spec, threads=2) == full
        bounded = check_colored(g, spec, max_factor_length=4)
        if bounded is not None:
            assert bounded.total_length <= 4
            assert full is not None


def test_cp2_with_weaker_spec():
    g = color_cp2(64)
    w = check_colored(g, FreenessSpec.parse("5/2"))
    assert w is not None and w.exponent >= FreenessSpec.parse("5/2").bound


def test_check_extension():
    g = ColoredGraph([None, 0, 1], 2, [0, 1, None])
    assert check_extension(g, 1, FreenessSpec.parse("2/1")) is None
    g = g.with_colors([0, 1, 0])
    w = check_extension(g, 2, FreenessSpec.parse("3/2"))
    assert w.vertices == (2, 1, 0)
    with pytest.raises(UncoloredVertexError):
        check_extension(ColoredGraph([None, 0], 2, [0, None]), 1, FreenessSpec.parse("2/1"))


def test_same_color_within():
    g = ColoredGraph([None, 0, 1, 2], 3, [0, 1, 2, 0])
    assert same_color_within(g, 2) is None
    assert same_color_within(g, 3) == (0, 3, 3)


def test_close_vertex_set():
    g = build_caterpillar(CaterpillarSpec.full(4))
    close = close_vertex_set(g, 3)
    assert len(close) == 6
    assert all(distance(g, u, v) <= 3 for u in close for v in close)


@pytest.mark.parametrize("degree,t,colors", [(3, 4, 9), (3, 6, 21), (4, 4, 16)])
def test_pigeonhole(degree, t, colors):
    assert pigeonhole_colors(degree, t) == colors
    cert = pigeonhole_certificate(degree, t)
    assert cert["holds"]
    assert cert["vertex_count"] == colors + 1
    assert cert["max_distance"] <= t


def _replay(g, spec, order):
    step = g.with_colors([None] * g.vertex_count)
    for v in order:
        step.colors[v] = g.colors[v]
        assert check_extension(step, v, spec) is None


def test_replay_clean_colorings(rng):
    cases = [
        (color_cp2(24), "3/1+"),
        (color_cp3_ternary(24, [2, 0, 1] * 8), "2/1+"),
        (color_tree3(TreeColoringParams(4, 4)), "5/4+"),
    ]
    for g, spec in cases:
        spec = FreenessSpec.parse(spec)
        assert check_colored(g, spec) is None
        _replay(g, spec, range(g.vertex_count))
        _replay(g, spec, [int(v) for v in rng.permutation(g.vertex_count)])


def test_replay_random_clean_trees(rng):
    spec = FreenessSpec.parse("3/2+")
    replayed = 0
    for _ in range(300):
        g = random_tree(rng, int(rng.randint(2, 12)), 4)
        if check_colored(g, spec) is None:
            _replay(g, spec, [int(v) for v in rng.permutation(g.vertex_count)])
            replayed += 1
    assert replayed > 0


@pytest.mark.parametrize("degree", [3, 4, 5])
@pytest.mark.parametrize("t", range(4, 11))
def test_pigeonhole_grid(degree, t):
    r = t // 2
    size = 1 + degree * ((degree - 1) ** r - 1) // (degree - 2)
    assert pigeonhole_colors(degree, t) == size - 1
    if degree == 3:
        assert pigeonhole_colors(degree, t) == 3 * (2 ** r - 1)
    ball = build_tree(Ball(degree, r))
    assert ball.vertex_count == size
    assert all(d <= t // 2 for d in nx.single_source_shortest_path_length(ball.to_networkx(), 0).values())
    assert pigeonhole_certificate(degree, t)["holds"]
