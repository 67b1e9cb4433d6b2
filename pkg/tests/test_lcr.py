import itertools
import random

import pytest

from conftest import random_word
from plateaurc.errors import MemoryBudgetExceeded, TooFewWords, TooLarge
from plateaurc.lcr import compute_lcr_tables, lcr_length, lcr_witness, required_bytes
from plateaurc.longest import compute_longest_tables, longest_length
from plateaurc.oracle import brute_force_lcr
from plateaurc.words import UP, Word, is_plateau_k_rollercoaster, is_subsequence


def test_pair_example():
    a = Word.from_string("871264435161")
    b = Word.from_string("8712644356")
    assert lcr_length([a, b], 3) == 10
    assert str(lcr_witness([a, b], 3)) == "8712644356"


def test_no_common_rollercoaster():
    assert lcr_length([Word.from_string("123"), Word.from_string("321")], 3) == 0
    assert lcr_witness([Word.from_string("123"), Word.from_string("321")], 3) is None
    assert lcr_length([Word.from_string("123"), Word(())], 3) == 0


def test_self_pair_reduces_to_single_word(example_word):
    single = compute_longest_tables(example_word, 3)
    pair = compute_lcr_tables([example_word, example_word], 3)
    for i in range(1, 13):
        assert pair.value(UP, 3, (i, i)) == single.value(UP, 3, i)


def test_input_limits():
    w = Word.from_string("1234")
    with pytest.raises(TooFewWords):
        lcr_length([w], 3)
    with pytest.raises(TooLarge):
        lcr_length([w] * 5, 3)
    with pytest.raises(MemoryBudgetExceeded) as exc:
        lcr_length([w, w], 3, memory_budget=10)
    assert exc.value.required == required_bytes((4, 4), 3, 4)


def test_pairs_and_triples_match_oracle():
    rng = random.Random(3)
    for _ in range(80):
        words = [random_word(rng, rng.randint(0, 7), 3) for _ in range(2)]
        assert lcr_length(words, 3) == brute_force_lcr(words, 3)
    for _ in range(20):
        words = [random_word(rng, rng.randint(0, 6), 3) for _ in range(3)]
        assert lcr_length(words, 3) == brute_force_lcr(words, 3)


def test_witness_is_common_rollercoaster():
    rng = random.Random(4)
    for _ in range(60):
        words = [random_word(rng, rng.randint(3, 9), 3) for _ in range(rng.choice((2, 3)))]
        u = lcr_witness(words, 3)
        if u is None:
            continue
        assert len(u) == lcr_length(words, 3)
        assert is_plateau_k_rollercoaster(u, 3)
        assert all(is_subsequence(u, w) for w in words)


def test_four_words_and_permutations():
    rng = random.Random(9)
    words = [random_word(rng, 6, 3) for _ in range(4)]
    base = lcr_length(words, 3)
    for perm in itertools.permutations(words):
        assert lcr_length(list(perm), 3) == base


def test_self_pair_random():
    rng = random.Random(2)
    for _ in range(40):
        w = random_word(rng, rng.randint(1, 12), 4)
        assert lcr_length([w, w], 3) == longest_length(w, 3)
