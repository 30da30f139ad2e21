from dataclasses import dataclass
from typing import Callable, Dict

from ..graphs.structures import Ball, CaterpillarSpec, EmbeddedBinaryTree

FAMILIES: Dict[str, "Family"] = {}


@dataclass(frozen=True)
class Family:
    """Structures indexed by a size ``n``; instance n is a subtree of n+1."""

    name: str
    builder: Callable
    description: str = ""

    def build(self, n, **params):
        return self.builder(n, **params)


def register_family(name, description=""):
    def _register(builder):
        if name in FAMILIES:
            raise KeyError("family %s is already registered" % name)
        FAMILIES[name] = Family(name, builder, description)
        return builder

    return _register


def get_family(name) -> Family:
    if isinstance(name, Family):
        return name
    if name not in FAMILIES:
        raise KeyError("unknown family %r, expected one of %s" % (name, ", ".join(sorted(FAMILIES))))
    return FAMILIES[name]


def parse_pattern(pattern):
    if isinstance(pattern, str):
        return tuple(int(x) for x in pattern.replace(" ", "").split(",") if x)
    return tuple(pattern)


@register_family("cp3-full", "caterpillar with one pendant on every backbone vertex")
def _cp3_full(n):
    return CaterpillarSpec.full(n)


@register_family("path", "path on n vertices")
def _path(n):
    return CaterpillarSpec.path(n)


@register_family("cp-spec", "caterpillar whose pendant counts repeat a given pattern")
def _cp_spec(n, pattern="1"):
    return CaterpillarSpec.cyclic(n, parse_pattern(pattern))


@register_family("star", "one center with n leaves")
def _star(n):
    return CaterpillarSpec.star(n)


@register_family("cubic-ball", "ball of radius n in the tree where every vertex has degree 3")
def _cubic_ball(n, degree=3):
    return Ball(int(degree), n)


@register_family("binary-tree", "binary tree truncated at level n")
def _binary_tree(n):
    return EmbeddedBinaryTree(n)
