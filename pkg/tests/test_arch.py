import random

import pytest

from scatlib.arch import (
    arch_factorize,
    build_tables,
    conjugate_iotas,
    factor_is_universal,
    iota,
    marker_word,
    zeta,
    zeta_with_witness,
)
from scatlib.core import Alphabet, Word, concat, conjugate, reverse
from scatlib.oracle import iota_oracle

from conftest import all_words, text


def test_arch_examples(backend):
    f = arch_factorize(text("abbccdabacdbdc"), Alphabet(4))
    assert f.iota == 2
    f = arch_factorize(text("aabbaabb"))
    assert f.arch_ends == (3, 5, 7)
    assert f.rest() == text("b")
    assert f.dotted() == "aab.ba.ab.b"
    f = arch_factorize(Word([1, 1, 1]))
    assert f.iota == 3 and len(f.rest()) == 0 and f.rest_start == 4


def test_iota_examples(backend):
    assert iota(text("babccaabc")) == 2
    assert iota(Word()) == 0
    assert iota(text("abcba")) == 1
    assert iota(text("abcba"), Alphabet(4)) == 0


def test_marker_examples():
    assert marker_word(arch_factorize(text("aabbaabb"))) == text("bab")
    assert len(marker_word(arch_factorize(Word()))) == 0
    assert marker_word(arch_factorize(text("abcabc"))) == text("cc")


def test_arch_invariants():
    rng = random.Random(5)
    for _ in range(300):
        sigma = rng.randint(1, 4)
        w = Word([rng.randint(1, sigma) for _ in range(rng.randint(0, 20))], sigma)
        f = arch_factorize(w)
        assert concat(*f.arches(), f.rest()) == w
        for arch in f.arches():
            assert arch.alph == w.alph
            assert arch[-1] not in arch[:-1].alph
        assert len(f.rest().alph) < max(len(w.alph), 1) or len(w) == 0
        assert f.marker.letters == tuple(a[-1] for a in f.arches())
        assert iota(w) == iota(reverse(w))


def test_iota_matches_oracle_small():
    for w in all_words(8, 3):
        assert iota(w) == iota_oracle(w)
        assert iota(w, Alphabet(3)) == iota_oracle(w, Alphabet(3))


def test_tables_examples(backend):
    t = build_tables(text("abab"))
    assert t.u.tolist() == [2, 3, 4, t.unreachable]
    assert t.t.tolist() == [2, 1, 1, 0]
    assert t.m.tolist() == [4, 3, 4, 3]
    t = build_tables(Word([1, 1]))
    assert t.u.tolist() == [1, 2] and t.t.tolist() == [2, 1]
    t = build_tables(text("ab"), Alphabet(3))
    assert t.u.tolist() == [t.unreachable] * 2 and t.t.tolist() == [0, 0]


def test_tables_agree_with_suffix_factorization(backend):
    rng = random.Random(11)
    for _ in range(200):
        sigma = rng.randint(1, 4)
        x = Word([rng.randint(1, sigma) for _ in range(rng.randint(1, 25))], sigma)
        alphabet = Alphabet(sigma)
        tab = build_tables(x, alphabet)
        n = len(x)
        for j in range(1, n + 1):
            f = arch_factorize(x.factor(j, n), alphabet)
            assert tab.t[j - 1] == f.iota
            end = j - 1 + (f.arch_ends[-1] if f.arch_ends else 0)
            assert tab.m[j - 1] == end
            if f.iota:
                assert tab.u[j - 1] == j - 1 + f.arch_ends[0]
                nxt = tab.u[j - 1] + 1
                assert tab.t[j - 1] == 1 + tab.suffix_iota(nxt)
            else:
                assert tab.u[j - 1] == tab.unreachable


def test_factor_is_universal():
    tab = build_tables(text("abab"))
    assert factor_is_universal(tab, 1, 2)
    assert factor_is_universal(tab, 2, 3)
    assert not factor_is_universal(tab, 1, 1)
    with pytest.raises(IndexError):
        factor_is_universal(tab, 3, 2)
    w = text("abcab")
    tab = build_tables(w)
    for i in range(1, 6):
        for j in range(i, 6):
            assert factor_is_universal(tab, i, j) == (w.factor(i, j).alph == w.alph)


def test_zeta_examples(backend):
    assert zeta(text("abbccdabacdbdc")) == 3
    assert zeta_with_witness(text("abbccdabacdbdc")) == (3, 1)
    assert zeta(text("babccaabc")) == 2
    assert zeta(text("ababcc")) == 2
    assert zeta(Word()) == 0
    assert zeta(text("ab"), Alphabet(3)) == 0


def test_zeta_matches_rotations():
    for w in all_words(8, 3, min_len=1):
        direct = [iota(conjugate(w, s)) for s in range(len(w))]
        assert conjugate_iotas(w).tolist() == direct
        z = max(direct)
        assert zeta(w) == z
        assert iota(w) <= z <= iota(w) + 1


def test_middle_factor_when_zeta_exceeds_iota():
    # whenever zeta = iota + 1 some factor with both ends trimmed keeps iota
    for w in all_words(8, 2, min_len=2):
        k = iota(w)
        if zeta(w) != k + 1:
            continue
        n = len(w)
        assert any(iota(w.factor(i, j), Alphabet(2)) == k for i in range(2, n) for j in range(i - 1, n))


def test_universal_factor_lifts():
    rng = random.Random(2)
    for _ in range(200):
        w = Word([rng.randint(1, 3) for _ in range(rng.randint(1, 15))], 3)
        i = rng.randint(1, len(w))
        j = rng.randint(i, len(w))
        assert iota(w, Alphabet(3)) >= iota(w.factor(i, j), Alphabet(3))
