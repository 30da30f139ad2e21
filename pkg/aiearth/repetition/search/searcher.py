"""Backtracking over colorings of a fixed vertex order.

Colors are assigned one vertex at a time; after each assignment the colored
region is checked for a violating factor starting at the new vertex. The
region stays connected, so every new factor passes through that vertex.
"""
import abc
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from ..exception import RepetitionException
from ..graphs.check import check_colored, violation_from
from ..utils import get_logger
from .ordering import ColorOrdering, RandomColorOrdering, SequentialColorOrdering
from .problem import Colorable, Inconclusive, SearchOutcome, SearchProblem, Unavoidable

logger = get_logger("search")

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET = "budget"

RESTART_BASE_BUDGET = 10**4


def backtrack(
    problem: SearchProblem,
    ordering: ColorOrdering,
    budget: Optional[int] = None,
    prefix: Sequence[int] = (),
):
    """Run the DFS below ``prefix``. Returns ``(status, colors, nodes)``.

    A node is one tentative color assignment. Completed colorings are checked
    without the factor length limit and rejected like any other dead end.
    """
    g = problem.graph
    adjacency = g.adjacency
    order = problem.vertex_order
    n = len(order)
    k = problem.k
    spec = problem.spec
    max_len = problem.factor_length_limit
    interval = problem.progress_interval
    canonical = problem.symmetry_breaking

    colors = [None] * n
    top = [-1] * (n + 1)
    depth = 0
    for c in prefix:
        v = order[depth]
        colors[v] = c
        if violation_from(adjacency, colors, v, spec, max_len, shortest=False) is not None:
            return EXHAUSTED, None, 0
        top[depth + 1] = max(top[depth], c)
        depth += 1
    base = depth
    if depth == n:
        if check_colored(g.with_colors(colors), spec) is None:
            return FOUND, colors, 0
        return EXHAUSTED, None, 0

    def candidates(d):
        allowed = min(k, top[d] + 2) if canonical else k
        return ordering.order(allowed)

    cand = [None] * n
    ptr = [0] * n
    cand[depth] = candidates(depth)
    nodes = 0
    started = time.time()
    while True:
        if ptr[depth] == len(cand[depth]):
            colors[order[depth]] = None
            if depth == base:
                return EXHAUSTED, None, nodes
            depth -= 1
            continue
        c = cand[depth][ptr[depth]]
        ptr[depth] += 1
        nodes += 1
        if budget is not None and nodes > budget:
            return BUDGET, None, nodes - 1
        if interval and nodes % interval == 0:
            logger.info("%d nodes, depth %d/%d, %.1fs", nodes, depth, n, time.time() - started)
        v = order[depth]
        colors[v] = c
        if violation_from(adjacency, colors, v, spec, max_len, shortest=False) is not None:
            continue
        top[depth + 1] = max(top[depth], c)
        if depth + 1 == n:
            if max_len is None or check_colored(g.with_colors(colors), spec) is None:
                return FOUND, colors, nodes
            continue
        depth += 1
        cand[depth] = candidates(depth)
        ptr[depth] = 0


def _run_prefix(args):
    problem, prefix = args
    return backtrack(problem, SequentialColorOrdering(), problem.node_budget, prefix)


def split_prefixes(problem: SearchProblem, levels=2):
    """Canonical color prefixes of the first ``levels`` vertices, in
    lexicographic order."""
    levels = min(levels, len(problem.vertex_order))
    prefixes = [((), -1)]
    for _ in range(levels):
        nxt = []
        for prefix, top in prefixes:
            allowed = min(problem.k, top + 2) if problem.symmetry_breaking else problem.k
            nxt.extend((prefix + (c,), max(top, c)) for c in range(allowed))
        prefixes = nxt
    return [p for p, _ in prefixes]


class Searcher(metaclass=abc.ABCMeta):
    def __init__(self, problem: SearchProblem) -> None:
        self.problem = problem

    @abc.abstractmethod
    def search(self) -> SearchOutcome:
        pass

    def _colorable(self, colors, nodes, task_nodes=None):
        coloring = self.problem.graph.with_colors(colors)
        # full re-check, independent of the factor length limit
        witness = check_colored(coloring, self.problem.spec)
        if witness is not None:
            raise RepetitionException("search returned a coloring with violation %r" % (witness,))
        return Colorable(coloring, nodes, task_nodes)


class ExhaustiveSearcher(Searcher):
    def __init__(self, problem: SearchProblem, threads=1) -> None:
        super().__init__(problem)
        self.threads = threads

    def search(self):
        p = self.problem
        logger.info("exhaustive search: %s", p.describe())
        if self.threads <= 1:
            status, colors, nodes = backtrack(p, SequentialColorOrdering(), p.node_budget)
            return self._outcome(status, colors, nodes)

        prefixes = split_prefixes(p)
        with ProcessPoolExecutor(max_workers=self.threads) as executor:
            results = list(executor.map(_run_prefix, [(p, prefix) for prefix in prefixes]))
        task_nodes = [nodes for _, _, nodes in results]
        total = sum(task_nodes)
        # prefixes are in canonical order, so the first hit is the least coloring
        for status, colors, _ in results:
            if status == FOUND:
                return self._colorable(colors, total, task_nodes)
        if all(status == EXHAUSTED for status, _, _ in results):
            return Unavoidable(total, task_nodes)
        return Inconclusive(total, task_nodes)

    def _outcome(self, status, colors, nodes):
        if status == FOUND:
            return self._colorable(colors, nodes)
        if status == EXHAUSTED:
            return Unavoidable(nodes)
        logger.warning("node budget of %d exhausted", self.problem.node_budget)
        return Inconclusive(nodes)


class HeuristicSearcher(Searcher):
    """Randomized restarts with doubling budgets. Without a seed this is a
    single sequential run. Never reports Unavoidable."""

    def __init__(self, problem: SearchProblem, seed=None, base_budget=RESTART_BASE_BUDGET) -> None:
        super().__init__(problem)
        self.seed = seed
        self.base_budget = base_budget

    def search(self):
        p = self.problem
        if self.seed is None:
            status, colors, nodes = backtrack(p, SequentialColorOrdering(), p.node_budget)
            if status == FOUND:
                return self._colorable(colors, nodes)
            return Inconclusive(nodes)

        ordering = RandomColorOrdering(self.seed)
        total = 0
        attempt_budget = self.base_budget
        attempt = 0
        while total < p.node_budget:
            budget = min(attempt_budget, p.node_budget - total)
            status, colors, nodes = backtrack(p, ordering, budget)
            total += nodes
            attempt += 1
            if status == FOUND:
                logger.info("coloring found on restart %d after %d nodes", attempt, total)
                return self._colorable(colors, total)
            if status == EXHAUSTED:
                # the whole tree was searched, but heuristic mode stays silent on that
                break
            attempt_budget *= 2
        return Inconclusive(total)


def prove_unavoidable(problem: SearchProblem, threads=1) -> SearchOutcome:
    return ExhaustiveSearcher(problem, threads).search()


def find_coloring(problem: SearchProblem, seed=None) -> SearchOutcome:
    return HeuristicSearcher(problem, seed).search()
