from itertools import product

import pytest

from aiearth.repetition.exception import BudgetExhausted, PreconditionError
from aiearth.repetition.words import (
    FreenessSpec,
    GenRequest,
    GenResult,
    GenStatus,
    Word,
    backtrack_word,
    dejean_word,
    pansiot_code,
    repetition_threshold,
    search_word,
    thue_morse,
    violates,
)
from aiearth.repetition.words.generators import merge_prefix_results


def test_repetition_threshold():
    assert str(repetition_threshold(2)) == "2/1"
    assert str(repetition_threshold(3)) == "7/4"
    assert str(repetition_threshold(4)) == "7/5"
    assert str(repetition_threshold(5)) == "5/4"
    assert str(repetition_threshold(9)) == "9/8"
    with pytest.raises(ValueError):
        repetition_threshold(1)


def test_thue_morse():
    assert thue_morse(8).letters == (0, 1, 1, 0, 1, 0, 0, 1)
    assert len(thue_morse(0)) == 0
    tm = thue_morse(300)
    assert violates(tm, FreenessSpec.parse("2/1+")) is None
    assert violates(tm, FreenessSpec.parse("2/1")) is not None


@pytest.mark.parametrize("k,n", [(3, 200), (4, 100), (5, 60), (6, 40)])
def test_dejean_word(k, n):
    w = dejean_word(k, n)
    assert len(w) == n and w.alphabet_size == k
    assert violates(w, FreenessSpec(repetition_threshold(k), strict=True)) is None


def test_lexicographically_least():
    # 0 1 0 2 0 1 0 is square-free and least among length 7 words
    w = backtrack_word(GenRequest(3, 7, FreenessSpec.parse("2/1")))
    assert w.letters == (0, 1, 0, 2, 0, 1, 0)


def test_impossible():
    # binary square-free words have length at most 3
    req = GenRequest(2, 4, FreenessSpec.parse("2/1"))
    result = search_word(req)
    assert result.status == GenStatus.impossible
    assert result.word is None
    assert backtrack_word(req) is None
    assert search_word(GenRequest(2, 3, FreenessSpec.parse("2/1"))).word.letters == (0, 1, 0)


def test_budget_exhausted():
    req = GenRequest(3, 500, FreenessSpec.parse("7/4+"), node_budget=10)
    result = search_word(req)
    assert result.status == GenStatus.budget_exhausted
    assert result.nodes_visited <= 10
    with pytest.raises(BudgetExhausted) as e:
        backtrack_word(req)
    assert e.value.nodes_visited <= 10


def test_deterministic_and_parallel():
    req = GenRequest(3, 60, FreenessSpec.parse("7/4+"))
    first = search_word(req)
    assert search_word(req) == first
    assert search_word(req, threads=2).word == first.word


def test_seeded_search():
    spec = FreenessSpec.parse("7/4+")
    result = search_word(GenRequest(3, 80, spec, seed=7))
    assert result.status == GenStatus.found
    assert violates(result.word, spec) is None
    assert search_word(GenRequest(3, 80, spec, seed=7)).word == result.word


def test_pansiot_code():
    assert str(pansiot_code([0, 1, 2, 3, 0, 1, 2, 4])) == "0001"
    code = pansiot_code(dejean_word(5, 40))
    assert len(code) == 36
    with pytest.raises(PreconditionError) as e:
        pansiot_code([0, 1, 2, 3, 4, 0, 0, 1])
    assert e.value.window == 3


def test_least_cube_free_binary_word():
    spec = FreenessSpec.parse("3/1")
    least = min(w for w in product(range(2), repeat=5) if violates(w, spec) is None)
    assert least == (0, 0, 1, 0, 0)
    assert backtrack_word(GenRequest(2, 5, spec)).letters == least


def test_dejean_word_is_deterministic():
    assert dejean_word(2, 8).letters == (0, 1, 1, 0, 1, 0, 0, 1)
    for k in (3, 5):
        assert dejean_word(k, 80) == dejean_word(k, 80)
    assert dejean_word(5, 80, threads=2) == dejean_word(5, 80)


def test_five_letter_windows_are_rainbow():
    w = dejean_word(5, 200)
    assert all(len(set(w[i:i + 4])) == 4 for i in range(len(w) - 3))
    assert len(pansiot_code(w)) == 196


def test_parallel_merge_keeps_letter_order():
    word = Word.of([1, 0, 1], 2)
    impossible = GenResult(GenStatus.impossible, None, 5)
    ran_out = GenResult(GenStatus.budget_exhausted, None, 10)
    found = GenResult(GenStatus.found, word, 3)
    result = merge_prefix_results([impossible, ran_out, found])
    assert result.status == GenStatus.budget_exhausted and result.word is None
    assert result.nodes_visited == 18
    result = merge_prefix_results([impossible, found, ran_out])
    assert result.status == GenStatus.found and result.word == word
    assert merge_prefix_results([impossible, impossible]).status == GenStatus.impossible
