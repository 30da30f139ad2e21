import re
from dataclasses import dataclass
from fractions import Fraction

from ..exception import FormatError

_SPEC_RE = re.compile(r"^\s*(?P<num>\d+)\s*(?:/\s*(?P<den>\d+))?\s*(?P<plus>\+)?\s*$")


class RationalExponent(Fraction):
    """Exact exponent |pe|/|p|, always positive and in lowest terms.

    Comparisons and hashing are inherited from ``Fraction`` so they never go
    through floating point.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if self <= 0:
            raise ValueError("exponent must be positive, got %s" % Fraction(self))
        return self

    def __repr__(self):
        return "%s(%d, %d)" % (self.__class__.__name__, self.numerator, self.denominator)

    def __str__(self):
        return "%d/%d" % (self.numerator, self.denominator)

    @classmethod
    def parse(cls, text):
        try:
            return cls(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError("invalid exponent %r (%s)" % (text, e), field="exponent")


@dataclass(frozen=True)
class FreenessSpec:
    """``strict`` forbids exponents > bound (bound+-free), otherwise >= bound."""

    bound: RationalExponent
    strict: bool = False

    def __post_init__(self):
        if not isinstance(self.bound, RationalExponent):
            object.__setattr__(self, "bound", RationalExponent(self.bound))
        if self.bound <= 1:
            raise ValueError("freeness bound must be > 1, got %s" % self.bound)

    def forbids(self, total_length, period):
        lhs = total_length * self.bound.denominator
        rhs = self.bound.numerator * period
        return lhs > rhs if self.strict else lhs >= rhs

    def min_forbidden_length(self, period):
        """Shortest factor length whose exponent over ``period`` is forbidden."""
        num, den = self.bound.numerator, self.bound.denominator
        if self.strict:
            return num * period // den + 1
        return -(-num * period // den)

    @property
    def is_one_plus_reciprocal(self):
        return self.bound.numerator - self.bound.denominator == 1

    @classmethod
    def parse(cls, text):
        m = _SPEC_RE.match(text or "")
        if not m:
            raise FormatError("invalid exponent spec %r, expected a/b or a/b+" % text, field="exp")
        num = int(m.group("num"))
        den = int(m.group("den") or 1)
        if den == 0:
            raise FormatError("zero denominator in %r" % text, field="exp")
        try:
            return cls(RationalExponent(num, den), strict=m.group("plus") is not None)
        except ValueError as e:
            raise FormatError(str(e), field="exp")

    def __str__(self):
        return "%s%s" % (self.bound, "+" if self.strict else "")
