"""Repetition checks on colored trees.

A factor is the color word along a simple path. Every factor starts at some
vertex, so walking all simple paths outward from every start vertex while
keeping the failure table of the growing word visits each factor once per
direction and knows its smallest period at every step.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Tuple

import networkx as nx

from ..exception import UncoloredVertexError
from ..words.exponent import FreenessSpec, RationalExponent
from .structures import Ball, ColoredGraph, ball_size, build_tree


@dataclass(frozen=True)
class PathWitness:
    vertices: Tuple[int, ...]
    colors: Tuple[int, ...]
    period: int
    total_length: int = field(init=False)
    exponent: RationalExponent = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "total_length", len(self.vertices))
        object.__setattr__(self, "exponent", RationalExponent(len(self.vertices), self.period))

    def reversed(self):
        return PathWitness(self.vertices[::-1], self.colors[::-1], self.period)

    def to_dict(self):
        return {
            "vertices": list(self.vertices),
            "colors": list(self.colors),
            "period": self.period,
            "total_length": self.total_length,
            "exponent": str(self.exponent),
        }


def violation_from(adjacency, colors, start, spec, max_len=None, shortest=True):
    """Violating simple path starting at ``start`` as ``(path, period)``.

    Uncolored vertices are walls. With ``shortest`` the walk keeps going after
    a hit, looking only for strictly shorter factors, so the result is the
    first shortest violation in neighbour order.
    """
    c0 = colors[start]
    if c0 is None:
        return None
    num, den = spec.bound.numerator, spec.bound.denominator
    strict = spec.strict
    limit = len(colors) if max_len is None else max_len

    path = [start]
    word = [c0]
    fail = [0]
    came_from = [-1]
    iters = [iter(adjacency[start])]
    best = None
    while iters:
        depth = len(path)
        nxt = -1
        if depth < limit:
            back = came_from[-1]
            for u in iters[-1]:
                if u != back and colors[u] is not None:
                    nxt = u
                    break
        if nxt < 0:
            iters.pop()
            path.pop()
            word.pop()
            fail.pop()
            came_from.pop()
            continue
        c = colors[nxt]
        b = fail[-1]
        while b and c != word[b]:
            b = fail[b - 1]
        if c == word[b]:
            b += 1
        if b:
            length = depth + 1
            lhs, rhs = length * den, num * (length - b)
            if lhs > rhs or (not strict and lhs == rhs):
                best = (path + [nxt], length - b)
                if not shortest:
                    return best
                limit = length - 1
                continue
        came_from.append(path[-1])
        path.append(nxt)
        word.append(c)
        fail.append(b)
        iters.append(iter(adjacency[nxt]))
    return best


def _witness(g, found):
    path, period = found
    return PathWitness(path, g.color_word(path), period)


def _scan_starts(args):
    adjacency, colors, starts, spec, max_len = args
    for s in starts:
        found = violation_from(adjacency, colors, s, spec, max_len)
        if found is not None:
            return found
    return None


def check_colored(
    g: ColoredGraph, spec: FreenessSpec, max_factor_length: Optional[int] = None, threads=1
) -> Optional[PathWitness]:
    for v, c in enumerate(g.colors):
        if c is None:
            raise UncoloredVertexError(v)
    n = g.vertex_count
    if threads <= 1:
        found = _scan_starts((g.adjacency, g.colors, range(n), spec, max_factor_length))
        return None if found is None else _witness(g, found)

    chunk = -(-n // (threads * 4))
    tasks = [
        (g.adjacency, g.colors, range(lo, min(lo + chunk, n)), spec, max_factor_length)
        for lo in range(0, n, chunk)
    ]
    with ProcessPoolExecutor(max_workers=threads) as executor:
        results = list(executor.map(_scan_starts, tasks))
    # chunks are in start order, so the first hit has the least start id
    for found in results:
        if found is not None:
            return _witness(g, found)
    return None


def check_extension(
    g: ColoredGraph, v: int, spec: FreenessSpec, max_factor_length: Optional[int] = None
) -> Optional[PathWitness]:
    if g.colors[v] is None:
        raise UncoloredVertexError(v)
    found = violation_from(g.adjacency, g.colors, v, spec, max_factor_length)
    return None if found is None else _witness(g, found)


def distance(g: ColoredGraph, u: int, v: int) -> int:
    depth = g.depths
    d = 0
    while u != v:
        if depth[u] >= depth[v]:
            u = g.parent[u]
        else:
            v = g.parent[v]
        d += 1
    return d


def vertices_within(g: ColoredGraph, v: int, d: int):
    """Vertices at distance 1..d from ``v`` with their distances, BFS order."""
    seen = {v: 0}
    order = [v]
    for x in order:
        if seen[x] == d:
            continue
        for u in g.adjacency[x]:
            if u not in seen:
                seen[u] = seen[x] + 1
                order.append(u)
    return [(u, seen[u]) for u in order[1:]]


def same_color_within(g: ColoredGraph, d: int):
    """First pair (u, v, dist), u < v, of equal colors at distance <= d.

    Such a pair spans a factor of exponent (dist+1)/dist.
    """
    for u in range(g.vertex_count):
        cu = g.colors[u]
        if cu is None:
            continue
        for v, dist in vertices_within(g, u, d):
            if v > u and g.colors[v] == cu:
                return u, v, dist
    return None


def close_vertex_set(g: ColoredGraph, d: int):
    """Greedy set of vertices pairwise at distance <= d; any coloring without
    a repeated color at distance <= d needs at least its size colors."""
    best = []
    for seed in range(g.vertex_count):
        chosen = [seed]
        for v, _ in vertices_within(g, seed, d):
            if all(distance(g, v, u) <= d for u in chosen):
                chosen.append(v)
        if len(chosen) > len(best):
            best = sorted(chosen)
    return best


def pigeonhole_colors(degree: int, t: int) -> int:
    """Color count that cannot give a (1+1/t)-free coloring of trees of
    maximum degree ``degree``: the radius floor(t/2) ball has one more vertex
    and all of its vertices are pairwise at distance <= t."""
    if degree < 3 or t < 2:
        raise ValueError("need degree >= 3 and t >= 2")
    return ball_size(degree, t // 2) - 1


def pigeonhole_certificate(degree: int, t: int):
    colors = pigeonhole_colors(degree, t)
    ball = build_tree(Ball(degree, t // 2))
    diameter = nx.diameter(ball.to_networkx()) if ball.vertex_count > 1 else 0
    return {
        "degree": degree,
        "t": t,
        "colors": colors,
        "vertex_count": ball.vertex_count,
        "max_distance": diameter,
        "holds": ball.vertex_count == colors + 1 and diameter <= t,
    }
