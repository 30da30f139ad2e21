from .exponent import RationalExponent, FreenessSpec
from .word import Word, BitWord, RepetitionWitness
from .periods import (
    failure_table,
    smallest_period,
    prefix_smallest_periods,
    max_exponent,
    violates,
    suffix_violation,
)
from .generators import (
    GenRequest,
    GenResult,
    GenStatus,
    repetition_threshold,
    thue_morse,
    search_word,
    backtrack_word,
    dejean_word,
    pansiot_code,
)
