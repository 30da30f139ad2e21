from fractions import Fraction
from itertools import product

import networkx as nx
import numpy as np
import pytest

from aiearth.repetition.graphs import ColoredGraph, check_colored


def naive_period(f):
    for p in range(1, len(f) + 1):
        if all(f[i] == f[i + p] for i in range(len(f) - p)):
            return p


def naive_max_exponent(w):
    """(exponent, start, length) with the smallest start, then length, among the maxima."""
    best = (Fraction(1), 0, 1)
    for start in range(len(w)):
        for end in range(start + 1, len(w) + 1):
            e = Fraction(end - start, naive_period(w[start:end]))
            if e > best[0]:
                best = (e, start, end - start)
    return best


def naive_violation(w, spec):
    for start in range(len(w)):
        for end in range(start + 2, len(w) + 1):
            if spec.forbids(end - start, naive_period(w[start:end])):
                return start, end - start
    return None


def naive_tree_free(g, spec):
    """Every simple path of a tree joins two vertices; read it both ways."""
    h = g.to_networkx()
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            path = nx.shortest_path(h, u, v)
            word = [g.colors[x] for x in path]
            if spec.forbids(len(word), naive_period(word)):
                return False
    return True


def random_tree(rng, n, k):
    parent = [None] + [int(rng.randint(0, v)) for v in range(1, n)]
    colors = [int(c) for c in rng.randint(0, k, size=n)]
    return ColoredGraph(parent, k, colors)


def brute_force_colorable(g, k, spec):
    for colors in product(range(k), repeat=g.vertex_count):
        if check_colored(g.with_colors(colors, k=k), spec) is None:
            return True
    return False


@pytest.fixture
def rng():
    return np.random.RandomState(20240611)
