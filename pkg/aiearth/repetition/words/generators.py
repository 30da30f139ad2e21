"""Finite prefixes of the infinite words the constructions are built on."""
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..exception import BudgetExhausted, PreconditionError, RepetitionException
from ..utils.logger import get_logger
from ..vars import DEFAULT_CFG
from .exponent import FreenessSpec, RationalExponent
from .periods import has_suffix_violation, violates
from .word import BitWord, Word

_logger = get_logger("words.generators")

DEFAULT_NODE_BUDGET = DEFAULT_CFG["word.node_budget"]
RESTART_BASE_BUDGET = 10**4


def repetition_threshold(k) -> RationalExponent:
    if k < 2:
        raise ValueError("repetition threshold needs at least 2 letters")
    if k == 2:
        return RationalExponent(2)
    if k == 3:
        return RationalExponent(7, 4)
    if k == 4:
        return RationalExponent(7, 5)
    return RationalExponent(k, k - 1)


def thue_morse(n) -> Word:
    if n < 0:
        raise ValueError("length must be non-negative")
    tm = np.zeros(1, dtype=np.int8)
    while len(tm) < n:
        tm = np.concatenate([tm, 1 - tm])
    return Word(tm[:n].tolist(), 2)


@dataclass(frozen=True)
class GenRequest:
    alphabet_size: int
    target_length: int
    spec: FreenessSpec
    node_budget: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise ValueError("alphabet size must be at least 2")
        if self.target_length < 1:
            raise ValueError("target length must be at least 1")


class GenStatus(Enum):
    found = 0
    impossible = 1
    budget_exhausted = 2


@dataclass(frozen=True)
class GenResult:
    status: GenStatus
    word: Optional[Word]
    nodes_visited: int


def _dfs(req, prefix=(), budget=None, rng=None):
    k, n, spec = req.alphabet_size, req.target_length, req.spec
    letters = list(prefix)
    base = len(letters)
    if base >= n:
        return GenResult(GenStatus.found, Word(letters[:n], k), 0)

    def candidates():
        order = list(range(k))
        if rng is not None:
            rng.shuffle(order)
        return order

    cand = [None] * n
    ptr = [0] * n
    depth = base
    cand[depth] = candidates()
    nodes = 0
    while True:
        if ptr[depth] == len(cand[depth]):
            if depth == base:
                return GenResult(GenStatus.impossible, None, nodes)
            depth -= 1
            letters.pop()
            continue
        a = cand[depth][ptr[depth]]
        ptr[depth] += 1
        nodes += 1
        if budget is not None and nodes > budget:
            return GenResult(GenStatus.budget_exhausted, None, nodes - 1)
        letters.append(a)
        if has_suffix_violation(letters, spec):
            letters.pop()
            continue
        depth += 1
        if depth == n:
            return GenResult(GenStatus.found, Word(letters, k), nodes)
        cand[depth] = candidates()
        ptr[depth] = 0


def _prefix_task(args):
    req, first = args
    budget = req.node_budget if req.node_budget is not None else DEFAULT_NODE_BUDGET
    return _dfs(req, prefix=(first,), budget=budget)


def merge_prefix_results(results) -> GenResult:
    """Combine per-first-letter results, given in letter order.

    The first branch that is not impossible decides, as in the sequential
    search; a later branch never overrides an earlier one that ran out of budget.
    """
    nodes = sum(r.nodes_visited for r in results)
    for r in results:
        if r.status != GenStatus.impossible:
            return GenResult(r.status, r.word, nodes)
    return GenResult(GenStatus.impossible, None, nodes)


def _randomized(req, budget):
    rng = random.Random(req.seed)
    used = 0
    restart_budget = RESTART_BASE_BUDGET
    while used < budget:
        run_budget = min(restart_budget, budget - used)
        result = _dfs(req, budget=run_budget, rng=rng)
        used += result.nodes_visited
        if result.status != GenStatus.budget_exhausted:
            return GenResult(result.status, result.word, used)
        _logger.debug("restart after %d nodes", used)
        restart_budget *= 2
    return GenResult(GenStatus.budget_exhausted, None, used)


def search_word(req: GenRequest, threads=1) -> GenResult:
    """Depth-first search for a spec-free word of the requested length.

    Letters are tried in increasing order, so the first word found is the
    lexicographically least one. With ``req.seed`` set the order is shuffled
    and the search restarts with doubling budgets instead.
    """
    budget = req.node_budget if req.node_budget is not None else DEFAULT_NODE_BUDGET
    if req.seed is not None:
        result = _randomized(req, budget)
    elif threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(_prefix_task, [(req, a) for a in range(req.alphabet_size)]))
        result = merge_prefix_results(results)
    else:
        result = _dfs(req, budget=budget)

    if result.status == GenStatus.found and violates(result.word, req.spec) is not None:
        raise RepetitionException("generated word fails its own %s check" % req.spec)
    _logger.info(
        "word search k=%d n=%d %s: %s after %d nodes",
        req.alphabet_size, req.target_length, req.spec, result.status.name, result.nodes_visited,
    )
    return result


def backtrack_word(req: GenRequest, threads=1) -> Optional[Word]:
    """Return the word, ``None`` when no such word exists, or raise
    :class:`BudgetExhausted` when the budget ran out first."""
    result = search_word(req, threads=threads)
    if result.status == GenStatus.budget_exhausted:
        raise BudgetExhausted(result.nodes_visited)
    return result.word


def dejean_word(k, n, node_budget=None, threads=1) -> Word:
    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    if k == 2:
        return thue_morse(n)
    spec = FreenessSpec(repetition_threshold(k), strict=True)
    word = backtrack_word(GenRequest(k, n, spec, node_budget), threads=threads)
    if word is None:
        raise RepetitionException("no %s word of length %d over %d letters" % (spec, n, k))
    return word


def pansiot_code(w) -> BitWord:
    """p_i = 0 iff w_i = w_{i+4}; every window of 4 letters must be rainbow."""
    letters = list(w)
    if any(not 0 <= a < 5 for a in letters):
        raise PreconditionError("Pansiot code is defined for words over 5 letters")
    for i in range(len(letters) - 3):
        window = letters[i:i + 4]
        if len(set(window)) != 4:
            raise PreconditionError(
                "letters %d..%d are not pairwise distinct: %s" % (i, i + 3, window), window=i
            )
    return BitWord(0 if letters[i] == letters[i + 4] else 1 for i in range(len(letters) - 4))
