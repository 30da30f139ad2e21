from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Tuple

from ..exception import FormatError
from .exponent import RationalExponent


@dataclass(frozen=True)
class Word(Sequence):
    """A finite word over the dense alphabet 0..alphabet_size-1."""

    letters: Tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.alphabet_size < 1:
            raise ValueError("alphabet size must be positive")
        for i, a in enumerate(self.letters):
            if not 0 <= a < self.alphabet_size:
                raise ValueError(
                    "letter %d at position %d is outside the alphabet of size %d"
                    % (a, i, self.alphabet_size)
                )

    @classmethod
    def of(cls, letters, alphabet_size=None):
        letters = tuple(letters)
        if alphabet_size is None:
            alphabet_size = max(letters) + 1 if letters else 1
        return cls(letters, alphabet_size)

    @classmethod
    def parse(cls, text, alphabet_size=None, symbols=False, line=None):
        """Read a line of space-separated letters.

        With ``symbols`` any tokens are accepted and numbered 0, 1, ... in order
        of first appearance; the mapping is returned alongside the word.
        """
        tokens = text.split()
        if symbols:
            mapping = {}
            for tok in tokens:
                mapping.setdefault(tok, len(mapping))
            word = cls.of([mapping[tok] for tok in tokens], alphabet_size or max(len(mapping), 1))
            return word, mapping
        letters = []
        for i, tok in enumerate(tokens):
            if not tok.isdigit():
                raise FormatError("letter %r is not a non-negative integer" % tok, line=line, field="letter %d" % i)
            letters.append(int(tok))
        try:
            return cls.of(letters, alphabet_size)
        except ValueError as e:
            raise FormatError(str(e), line=line)

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.alphabet_size)
        return self.letters[index]

    def reversed(self):
        return Word(self.letters[::-1], self.alphabet_size)

    def permuted(self, mapping):
        return Word(tuple(mapping[a] for a in self.letters), self.alphabet_size)

    def __str__(self):
        return " ".join(str(a) for a in self.letters)


@dataclass(frozen=True)
class BitWord(Sequence):
    bits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bit words only hold 0 and 1")

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BitWord(self.bits[index])
        return self.bits[index]

    def __str__(self):
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class RepetitionWitness:
    """Factor ``word[start:start+total_length]`` of period ``period``.

    The excess is the suffix of length ``total_length - period``; it is also a
    prefix of the factor.
    """

    start: int
    total_length: int
    period: int
    exponent: RationalExponent = field(init=False)

    def __post_init__(self):
        if not 1 <= self.period <= self.total_length:
            raise ValueError("need 1 <= period <= total_length")
        object.__setattr__(self, "exponent", RationalExponent(self.total_length, self.period))

    @property
    def end(self):
        return self.start + self.total_length

    @property
    def excess_length(self):
        return self.total_length - self.period

    def factor(self, word):
        return tuple(word[self.start:self.end])
