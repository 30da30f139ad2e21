"""Period and exponent analysis of finite words.

Everything here is exact: a factor's exponent is its length over its smallest
period, and comparisons against a bound are integer cross-multiplications.
"""
from typing import List, Optional, Sequence, Tuple

from ..exception import EmptyWordError
from .exponent import FreenessSpec, RationalExponent
from .word import RepetitionWitness


def _require_nonempty(w):
    if len(w) == 0:
        raise EmptyWordError()


def failure_table(w: Sequence[int]) -> List[int]:
    """Entry i is the length of the longest proper border of w[:i+1]."""
    n = len(w)
    fail = [0] * n
    b = 0
    for i in range(1, n):
        a = w[i]
        while b and a != w[b]:
            b = fail[b - 1]
        if a == w[b]:
            b += 1
        fail[i] = b
    return fail


def prefix_smallest_periods(w: Sequence[int]) -> List[int]:
    _require_nonempty(w)
    return [i + 1 - b for i, b in enumerate(failure_table(w))]


def smallest_period(w: Sequence[int]) -> int:
    _require_nonempty(w)
    return len(w) - failure_table(w)[-1]


def max_exponent(w: Sequence[int]) -> Tuple[RationalExponent, RepetitionWitness]:
    _require_nonempty(w)
    letters = list(w)
    n = len(letters)
    best_start, best_len, best_period = 0, 1, 1
    for start in range(n):
        periods = prefix_smallest_periods(letters[start:])
        for j, p in enumerate(periods):
            length = j + 1
            # strictly greater keeps the smallest start, then smallest length
            if length * best_period > best_len * p:
                best_start, best_len, best_period = start, length, p
    witness = RepetitionWitness(best_start, best_len, best_period)
    return witness.exponent, witness


def violates(w: Sequence[int], spec: FreenessSpec) -> Optional[RepetitionWitness]:
    letters = list(w)
    n = len(letters)
    for start in range(n):
        found = _first_forbidden_prefix(letters, start, n, spec)
        if found is not None:
            length, period = found
            return RepetitionWitness(start, length, period)
    return None


def _first_forbidden_prefix(letters, start, stop, spec):
    num, den = spec.bound.numerator, spec.bound.denominator
    strict = spec.strict
    fail = [0] * (stop - start)
    b = 0
    for i in range(1, stop - start):
        a = letters[start + i]
        while b and a != letters[start + b]:
            b = fail[b - 1]
        if a == letters[start + b]:
            b += 1
        fail[i] = b
        length = i + 1
        if b:
            lhs, rhs = length * den, num * (length - b)
            if lhs > rhs or (not strict and lhs == rhs):
                return length, length - b
    return None


def suffix_violation(
    w: Sequence[int], spec: FreenessSpec, max_total_length: Optional[int] = None
) -> Optional[RepetitionWitness]:
    """Violation among factors ending at the last letter; the longest one
    (minimal start) is reported."""
    _require_nonempty(w)
    n = len(w)
    rev = list(w)[::-1]
    limit = n if max_total_length is None else min(n, max_total_length)
    fail = failure_table(rev[:limit])
    found = None
    for i, b in enumerate(fail):
        length = i + 1
        if b and spec.forbids(length, length - b):
            found = (length, length - b)
    if found is None:
        return None
    length, period = found
    return RepetitionWitness(n - length, length, period)


def has_suffix_violation(letters, spec, max_total_length=None):
    """Fast boolean form of :func:`suffix_violation` used as a pruning test.

    For each period p the run of letters matching at distance p is measured
    backwards from the end; periods are tried while their shortest forbidden
    length still fits.
    """
    n = len(letters)
    limit = n if max_total_length is None else min(n, max_total_length)
    last = n - 1
    p = 1
    while p < limit:
        need = spec.min_forbidden_length(p)
        if need > limit:
            break
        run = 0
        i = last
        target = need - p
        while run < target and letters[i] == letters[i - p]:
            run += 1
            i -= 1
            if i - p < 0:
                break
        if run >= target:
            return True
        p += 1
    return False
