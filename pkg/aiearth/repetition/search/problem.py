from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

from ..graphs.formats import graph_to_dict
from ..graphs.structures import Ball, CaterpillarSpec, ColoredGraph, TreeSpec, build_structure
from ..vars import DEFAULT_CFG
from ..words.exponent import FreenessSpec, RationalExponent

AUTO = "auto"


def default_vertex_order(structure, graph: ColoredGraph):
    """Caterpillars: each backbone vertex followed by its pendants. Trees and
    balls: BFS from the root, which is id order."""
    if isinstance(structure, CaterpillarSpec):
        pendants = [[] for _ in range(structure.backbone_length)]
        for v in range(structure.backbone_length, graph.vertex_count):
            pendants[graph.tags[v]["of"]].append(v)
        order = []
        for i in range(structure.backbone_length):
            order.append(i)
            order.extend(pendants[i])
        return order
    return list(range(graph.vertex_count))


@dataclass
class SearchProblem:
    structure: Union[CaterpillarSpec, TreeSpec]
    k: int
    spec: FreenessSpec
    vertex_order: Optional[Sequence[int]] = None
    node_budget: Optional[int] = DEFAULT_CFG["search.node_budget"]
    max_factor_length: Union[int, None, str] = AUTO
    symmetry_breaking: bool = True
    progress_interval: int = DEFAULT_CFG["search.progress_interval"]
    graph: ColoredGraph = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("need at least one color")
        if self.node_budget is None:
            self.node_budget = DEFAULT_CFG["search.node_budget"]
        self.graph = build_structure(self.structure, self.k)
        if self.vertex_order is None:
            self.vertex_order = default_vertex_order(self.structure, self.graph)
        self.vertex_order = list(self.vertex_order)
        n = self.graph.vertex_count
        if sorted(self.vertex_order) != list(range(n)):
            raise ValueError("vertex order must be a permutation of the %d vertices" % n)
        seen = {self.vertex_order[0]}
        for v in self.vertex_order[1:]:
            if not any(u in seen for u in self.graph.adjacency[v]):
                raise ValueError("vertex %d is not adjacent to an earlier vertex of the order" % v)
            seen.add(v)

    @property
    def factor_length_limit(self):
        """Balls under a 1+1/t spec default to 4t; everything else to no limit."""
        if self.max_factor_length != AUTO:
            return self.max_factor_length
        if isinstance(self.structure, Ball) and self.spec.is_one_plus_reciprocal:
            return 4 * self.spec.bound.denominator
        return None

    def describe(self):
        return {
            "structure": describe_structure(self.structure),
            "k": self.k,
            "spec": str(self.spec),
            "vertex_count": self.graph.vertex_count,
            "max_factor_length": self.factor_length_limit,
            "node_budget": self.node_budget,
            "symmetry_breaking": self.symmetry_breaking,
        }


def describe_structure(structure):
    if isinstance(structure, CaterpillarSpec):
        return {
            "type": "caterpillar",
            "backbone_length": structure.backbone_length,
            "pendant_counts": list(structure.pendant_counts),
        }
    return dict(type=type(structure).__name__, **structure.__dict__)


class SearchOutcome:
    verdict = None

    def __init__(self, nodes_visited, task_nodes=None) -> None:
        self.nodes_visited = nodes_visited
        self.task_nodes = task_nodes

    def to_dict(self):
        ret = {"verdict": self.verdict, "nodes_visited": self.nodes_visited}
        if self.task_nodes is not None:
            ret["task_nodes"] = list(self.task_nodes)
        return ret

    def __repr__(self):
        return "%s(nodes_visited=%d)" % (self.__class__.__name__, self.nodes_visited)


class Unavoidable(SearchOutcome):
    verdict = "unavoidable"


class Inconclusive(SearchOutcome):
    verdict = "inconclusive"


class Colorable(SearchOutcome):
    verdict = "colorable"

    def __init__(self, coloring: ColoredGraph, nodes_visited, task_nodes=None) -> None:
        super().__init__(nodes_visited, task_nodes)
        self.coloring = coloring

    def to_dict(self):
        ret = super().to_dict()
        ret["graph"] = graph_to_dict(self.coloring)
        return ret


@dataclass
class ThresholdEvidence:
    family: str
    k: int
    bound: RationalExponent
    direction: str
    outcome: Optional[SearchOutcome] = None
    n: Optional[int] = None
    trail: List[dict] = field(default_factory=list)
    reference: Optional[str] = None

    @property
    def certified(self):
        if self.direction == "lower":
            return isinstance(self.outcome, Unavoidable)
        return isinstance(self.outcome, Colorable)

    def to_dict(self):
        return {
            "family": self.family,
            "k": self.k,
            "bound": str(self.bound),
            "direction": self.direction,
            "certified": self.certified,
            "n": self.n,
            "outcome": None if self.outcome is None else self.outcome.verdict,
            "nodes_visited": None if self.outcome is None else self.outcome.nodes_visited,
            "trail": self.trail,
            "reference": self.reference,
        }
