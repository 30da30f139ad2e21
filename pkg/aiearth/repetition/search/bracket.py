from typing import Optional

from ..utils import get_logger
from ..words.exponent import FreenessSpec
from .families import get_family
from .problem import AUTO, Inconclusive, SearchProblem, ThresholdEvidence, Unavoidable
from .searcher import prove_unavoidable

logger = get_logger("search.bracket")


def rt_bracket(
    family,
    k: int,
    spec: FreenessSpec,
    n_start: int,
    n_max: int,
    budget: Optional[int] = None,
    max_factor_length=AUTO,
    threads=1,
    confirm_next=False,
    **family_params,
) -> ThresholdEvidence:
    """Grow the instance until no ``spec``-free ``k``-coloring exists.

    The trail records the verdict at every size tried. A budget running out
    stops the bracket with an inconclusive outcome at that size.
    """
    family = get_family(family)
    evidence = ThresholdEvidence(family.name, k, spec.bound, "lower")

    def run(n):
        problem = SearchProblem(
            family.build(n, **family_params),
            k,
            spec,
            node_budget=budget,
            max_factor_length=max_factor_length,
        )
        outcome = prove_unavoidable(problem, threads)
        evidence.trail.append(
            {
                "n": n,
                "verdict": outcome.verdict,
                "nodes_visited": outcome.nodes_visited,
                "node_budget": problem.node_budget,
                "max_factor_length": problem.factor_length_limit,
            }
        )
        logger.info("%s n=%d k=%d %s: %s", family.name, n, k, spec, outcome.verdict)
        return outcome

    total = 0
    for n in range(n_start, n_max + 1):
        outcome = run(n)
        total += outcome.nodes_visited
        if isinstance(outcome, Unavoidable):
            evidence.outcome, evidence.n = outcome, n
            if confirm_next:
                follow = run(n + 1)
                if not isinstance(follow, Unavoidable):
                    logger.warning("%s n=%d is %s after n=%d was unavoidable", family.name, n + 1, follow.verdict, n)
            return evidence
        if isinstance(outcome, Inconclusive):
            evidence.outcome, evidence.n = outcome, n
            return evidence
    evidence.outcome = Inconclusive(total)
    return evidence
