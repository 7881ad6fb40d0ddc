import random

import pytest

from scatlib.core import Alphabet, Word, WordError
from scatlib.concat import (
    UnsolvableError,
    WordSet,
    binary_candidates,
    min_concat,
    min_concat_all_universal,
    min_concat_binary,
    min_concat_general,
    witness_bound,
)
from scatlib.powers import min_power_for_k

from conftest import brute_min_concat, text


def ws_of(*words, alphabet=None):
    return WordSet.of([text(w) for w in words], alphabet)


def test_general_examples():
    assert min_concat_general(ws_of("ab", "ba"), 2) == 2
    assert min_concat_general(ws_of("abc"), 5) == 5
    assert min_concat_general(ws_of("aabb"), 3) == 2
    assert min_concat_general(ws_of("a", "b"), 1) == 2


def test_universal_examples():
    assert min_concat_all_universal(ws_of("ab", "ba"), 3) == 3
    assert min_concat_all_universal(ws_of("abcabc"), 4) == 2
    assert min_concat_all_universal(ws_of("ab"), 1) == 1
    with pytest.raises(WordError):
        min_concat_all_universal(ws_of("ab", "a"), 2)


def test_binary_examples():
    assert min_concat_binary(ws_of("a", "b"), 1) == 2
    assert min_concat_binary(ws_of("ab", "a", "b"), 3) == 3
    assert min_concat_binary(ws_of("aabb", "ba"), 3) == 2
    # one-letter words are never the (x, y) representative
    assert min_concat_binary(ws_of("a", "b", "aaa"), 2) == 3
    with pytest.raises(WordError):
        binary_candidates(ws_of("abc"))


def test_dispatch_and_errors():
    assert min_concat(ws_of("ab", "ba"), 2) == 2
    assert min_concat(ws_of("abc", "cab"), 3, mode="universal") == 3
    assert min_concat(ws_of("ab", "c"), 2) == 4
    with pytest.raises(UnsolvableError):
        min_concat(ws_of("ab", alphabet=Alphabet(3)), 1)
    with pytest.raises(ValueError):
        min_concat(ws_of("ab"), 1, mode="fast")


def test_huge_k():
    k = 10**30
    assert min_concat(ws_of("ab", "ba"), k) == k
    assert min_concat_general(ws_of("aabb"), k) == min_power_for_k(text("aabb"), k)
    assert min_concat_all_universal(ws_of("abcabc", "ab" + "c"), k) == k // 2


def test_sigma_cap():
    words = WordSet.of([Word(list(range(1, 14)))])
    with pytest.raises(WordError):
        min_concat_general(words, 1)
    assert min_concat_general(words, 2, sigma_cap=None) == 2


def test_witness_bound():
    assert [witness_bound(x) for x in (0, 1, 2, 3, 4, 5, 8, 9)] == [0, 0, 1, 2, 2, 3, 3, 4]


def test_single_word_is_min_power():
    rng = random.Random(17)
    for _ in range(60):
        w = Word([rng.randint(1, 3) for _ in range(rng.randint(1, 8))], 3)
        if len(w.alph) != 3:
            continue
        k = rng.randint(1, 12)
        assert min_concat_general(WordSet.of([w]), k) == min_power_for_k(w, k)


def test_paths_agree_with_brute_force():
    rng = random.Random(29)
    checked = 0
    while checked < 400:
        sigma = rng.randint(1, 3)
        p = rng.randint(1, 3)
        words = [Word([rng.randint(1, sigma) for _ in range(rng.randint(1, 6))], sigma) for _ in range(p)]
        ws = WordSet.of(words, Alphabet(sigma))
        if not ws.solvable():
            continue
        k = rng.randint(1, 4)
        expected = brute_min_concat(words, k, sigma)
        if expected is None:
            continue
        checked += 1
        assert min_concat_general(ws, k) == expected
        if ws.all_universal():
            assert min_concat_all_universal(ws, k) == expected
        if sigma == 2:
            assert min_concat_binary(ws, k) == expected
