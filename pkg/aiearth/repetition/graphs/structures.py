import abc
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..exception import RepetitionException


@dataclass(frozen=True)
class CaterpillarSpec:
    backbone_length: int
    pendant_counts: Tuple[int, ...]
    max_degree_three: bool = False

    def __post_init__(self):
        object.__setattr__(self, "pendant_counts", tuple(int(c) for c in self.pendant_counts))
        if self.backbone_length < 1:
            raise ValueError("backbone length must be at least 1")
        if len(self.pendant_counts) != self.backbone_length:
            raise ValueError(
                "expected %d pendant counts, got %d" % (self.backbone_length, len(self.pendant_counts))
            )
        if any(c < 0 for c in self.pendant_counts):
            raise ValueError("pendant counts must be non-negative")
        if self.max_degree_three and any(c > 1 for c in self.pendant_counts):
            raise ValueError("a caterpillar of maximum degree 3 has at most one pendant per backbone vertex")

    @classmethod
    def full(cls, n):
        """Every backbone vertex carries exactly one pendant."""
        return cls(n, (1,) * n, max_degree_three=True)

    @classmethod
    def path(cls, n):
        return cls(n, (0,) * n, max_degree_three=True)

    @classmethod
    def star(cls, leaves):
        return cls(1, (leaves,))

    @classmethod
    def cyclic(cls, n, pattern):
        pattern = tuple(pattern) or (0,)
        return cls(n, tuple(pattern[i % len(pattern)] for i in range(n)))


class TreeSpec(metaclass=abc.ABCMeta):
    pass


@dataclass(frozen=True)
class EmbeddedBinaryTree(TreeSpec):
    """The rooted tree where every vertex has a left and a right son,
    truncated at level ``depth``."""

    depth: int

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be non-negative")


@dataclass(frozen=True)
class Ball(TreeSpec):
    """All vertices within ``radius`` of a vertex of the infinite
    ``degree``-regular tree."""

    degree: int
    radius: int

    def __post_init__(self):
        if self.degree < 3:
            raise ValueError("ball degree must be at least 3")
        if self.radius < 0:
            raise ValueError("radius must be non-negative")


def ball_size(degree, radius):
    if radius == 0:
        return 1
    return 1 + degree * ((degree - 1) ** radius - 1) // (degree - 2)


@dataclass
class ColoredGraph:
    """A tree given by parent pointers, with an optional color per vertex.

    Vertex 0 is the root. Neighbour lists are sorted by id, which fixes every
    traversal order used by the checkers.
    """

    parent: List[Optional[int]]
    k: int
    colors: List[Optional[int]] = None
    tags: List[Dict] = None
    adjacency: List[List[int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.parent)
        if n == 0:
            raise RepetitionException("a graph needs at least one vertex")
        if self.k < 1:
            raise RepetitionException("color count must be positive")
        self.parent = list(self.parent)
        self.colors = [None] * n if self.colors is None else list(self.colors)
        self.tags = [{} for _ in range(n)] if self.tags is None else [dict(t) for t in self.tags]
        if len(self.colors) != n or len(self.tags) != n:
            raise RepetitionException("colors and tags must have one entry per vertex")
        roots = [v for v, p in enumerate(self.parent) if p is None]
        if len(roots) != 1:
            raise RepetitionException("expected exactly one root, found %d" % len(roots))
        adjacency = [[] for _ in range(n)]
        for v, p in enumerate(self.parent):
            if p is None:
                continue
            if not 0 <= p < n or p == v:
                raise RepetitionException("vertex %d has invalid parent %r" % (v, p))
            adjacency[v].append(p)
            adjacency[p].append(v)
        self.adjacency = [sorted(a) for a in adjacency]
        if not nx.is_tree(self.to_networkx()):
            raise RepetitionException("parent pointers do not form a tree")
        for v, c in enumerate(self.colors):
            if c is not None and not 0 <= c < self.k:
                raise RepetitionException("vertex %d has color %d outside 0..%d" % (v, c, self.k - 1))

    @property
    def vertex_count(self):
        return len(self.parent)

    @property
    def root(self):
        return self.parent.index(None)

    def edges(self):
        return [(p, v) for v, p in enumerate(self.parent) if p is not None]

    def is_fully_colored(self):
        return all(c is not None for c in self.colors)

    def with_colors(self, colors, k=None):
        return ColoredGraph(list(self.parent), self.k if k is None else k, list(colors), self.tags)

    def color_word(self, path):
        return tuple(self.colors[v] for v in path)

    def max_degree(self):
        return max(len(a) for a in self.adjacency)

    @cached_property
    def depths(self):
        depth = [0] * self.vertex_count
        order = [self.root]
        for v in order:
            for u in self.adjacency[v]:
                if u != self.parent[v]:
                    depth[u] = depth[v] + 1
                    order.append(u)
        return depth

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(len(self.parent)))
        g.add_edges_from((p, v) for v, p in enumerate(self.parent) if p is not None)
        return g


def build_caterpillar(spec: CaterpillarSpec, k=1) -> ColoredGraph:
    n = spec.backbone_length
    parent = [None] + list(range(n - 1))
    tags = [{"role": "backbone", "index": i} for i in range(n)]
    for i, count in enumerate(spec.pendant_counts):
        for _ in range(count):
            parent.append(i)
            tags.append({"role": "pendant", "of": i})
    return ColoredGraph(parent, k, tags=tags)


def build_tree(spec: TreeSpec, k=1) -> ColoredGraph:
    if isinstance(spec, EmbeddedBinaryTree):
        parent = [None]
        tags = [{"level": 0, "side": None}]
        frontier = 0
        while frontier < len(parent):
            level = tags[frontier]["level"]
            if level < spec.depth:
                for side in (0, 1):
                    parent.append(frontier)
                    tags.append({"level": level + 1, "side": side})
            frontier += 1
        return ColoredGraph(parent, k, tags=tags)
    if isinstance(spec, Ball):
        parent = [None]
        tags = [{"level": 0}]
        frontier = 0
        while frontier < len(parent):
            level = tags[frontier]["level"]
            if level < spec.radius:
                children = spec.degree if frontier == 0 else spec.degree - 1
                for _ in range(children):
                    parent.append(frontier)
                    tags.append({"level": level + 1})
            frontier += 1
        return ColoredGraph(parent, k, tags=tags)
    raise TypeError("unknown tree spec %r" % (spec,))


def build_structure(spec, k=1) -> ColoredGraph:
    if isinstance(spec, CaterpillarSpec):
        return build_caterpillar(spec, k)
    return build_tree(spec, k)
