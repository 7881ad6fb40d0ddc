import random

import pytest

from scatlib.arch import iota, zeta
from scatlib.core import Alphabet, MorphicPermutation, Word, WordError, concat, reverse
from scatlib.powers import (
    check_wwR_universality,
    iota_of_power,
    min_power_for_k,
    palindrome_iota,
    permutation_double_iota,
    power_sequence,
    spectra_stable_under_square,
)

from conftest import all_words, text


def _naive_min_power(w, k, limit=60):
    for ell in range(limit + 1):
        if iota(w * ell if ell else Word(), Alphabet(max(w.alph))) >= k:
            return ell
    raise AssertionError("limit too small")


def test_min_power_examples(backend):
    assert min_power_for_k(text("aabb"), 3) == 2
    assert min_power_for_k(text("abcabc"), 2) == 1
    assert min_power_for_k(text("ab"), 10**18) == 10**18
    assert min_power_for_k(text("ab"), 0) == 0
    with pytest.raises(WordError):
        min_power_for_k(text("ab"), 3, Alphabet(3))


def test_min_power_matches_naive(backend):
    rng = random.Random(21)
    for _ in range(150):
        sigma = rng.randint(1, 4)
        w = Word([rng.randint(1, sigma) for _ in range(rng.randint(1, 10))], sigma)
        if len(w.alph) != sigma:
            continue
        k = rng.randint(1, 20)
        assert min_power_for_k(w, k) == _naive_min_power(w, k)


def test_power_sequence_is_periodic():
    rng = random.Random(6)
    for _ in range(100):
        w = Word([rng.randint(1, 3) for _ in range(rng.randint(3, 12))], 3)
        if len(w.alph) != 3:
            continue
        seq = power_sequence(w)
        for p in range(1, 3 * len(seq.i)):
            assert seq.iota_at(p) == iota(w * p)


def test_iota_of_power_examples(backend):
    assert iota_of_power(text("babccaabc"), 2) == 5
    assert iota_of_power(text("ababcc"), 2) == 3
    assert iota_of_power(text("aabb"), 2) == 3
    assert iota_of_power(text("abcba"), 1) == 1
    assert iota_of_power(text("ab"), 0) == 0
    assert iota_of_power(text("ab"), 10**25) == 10**25


def test_iota_of_power_binary_closed_form():
    for w in all_words(8, 2, min_len=2):
        if len(w.alph) != 2:
            continue
        k, z = iota(w), zeta(w)
        for s in (1, 2, 3, 10**18):
            expected = s * k + s - 1 if z == k + 1 else s * k
            assert iota_of_power(w, s) == expected


def test_spectra_stable_under_square():
    assert spectra_stable_under_square(text("aabb"), 1)
    assert not spectra_stable_under_square(text("aabb"), 2)
    assert not spectra_stable_under_square(text("abc"), 3)


def test_palindrome_iota_examples():
    assert palindrome_iota(text("abba")) == 2
    assert palindrome_iota(text("aa")) == 2
    assert palindrome_iota(text("abcba")) == 1
    assert palindrome_iota(Word()) == 0
    with pytest.raises(WordError):
        palindrome_iota(text("ab"))


def test_palindrome_iota_exhaustive():
    for half in all_words(5, 3):
        for mid in ([], [1], [2], [3]):
            w = Word(list(half.letters) + mid + list(reversed(half.letters)), 3)
            assert palindrome_iota(w) == iota(w)
            assert palindrome_iota(w, Alphabet(3)) == iota(w, Alphabet(3))


def test_wwR_examples():
    assert check_wwR_universality(text("ab"), 1)
    assert not check_wwR_universality(text("aabb"), 2)
    assert check_wwR_universality(text("abab"), 2)
    assert check_wwR_universality(Word(), 3)


def test_wwR_both_sides_agree():
    for w in all_words(7, 2):
        for k in range(0, 5):
            assert check_wwR_universality(w, k) == (len(w) == 0 or iota(w) >= k)


def test_permutation_double_examples():
    swap = MorphicPermutation((3, 2, 1))
    r = permutation_double_iota(text("abcba"), swap)
    assert r.iota == 3 and r.iota_w == 1 and r.rests_cover
    assert permutation_double_iota(text("abcba"), MorphicPermutation.identity(3)).iota == 2
    assert permutation_double_iota(text("ab"), MorphicPermutation.identity(2)).iota == 2
    with pytest.raises(WordError):
        permutation_double_iota(text("ab"), MorphicPermutation.identity(2), Alphabet(3))


def test_permutation_double_random():
    rng = random.Random(13)
    for _ in range(300):
        sigma = rng.randint(1, 4)
        w = Word([rng.randint(1, sigma) for _ in range(rng.randint(0, 12))], sigma)
        images = list(range(1, sigma + 1))
        rng.shuffle(images)
        pi = MorphicPermutation(tuple(images))
        r = permutation_double_iota(w, pi)
        doubled = concat(w, Word([images[a - 1] for a in w.letters], sigma))
        assert r.iota == iota(doubled, Alphabet(sigma))


def test_reverse_power_symmetry():
    w = text("abcab")
    assert iota(reverse(w * 3)) == iota(w * 3)
