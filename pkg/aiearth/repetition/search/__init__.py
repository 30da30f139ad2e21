from .bracket import rt_bracket
from .families import FAMILIES, Family, get_family, register_family
from .ordering import ColorOrdering, RandomColorOrdering, SequentialColorOrdering
from .problem import (
    AUTO,
    Colorable,
    Inconclusive,
    SearchOutcome,
    SearchProblem,
    ThresholdEvidence,
    Unavoidable,
    default_vertex_order,
)
from .searcher import ExhaustiveSearcher, HeuristicSearcher, Searcher, backtrack, find_coloring, prove_unavoidable
