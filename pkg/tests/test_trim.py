import pytest

from scatlib.arch import iota
from scatlib.core import Alphabet, Word, WordError
from scatlib.trim import shortest_deletion

from conftest import all_words, text


def _naive(w, ell, side, alphabet=None):
    n = len(w)
    for d in range(n + 1):
        kept = w.factor(1, n - d) if side == "suffix" else w.factor(d + 1, n)
        if iota(kept, alphabet) == ell:
            return d
    return None


def test_examples(backend):
    d = shortest_deletion(text("abcabc"), 1)
    assert (d.length, d.kept_start, d.kept_end) == (1, 1, 5)
    assert shortest_deletion(text("aabbaabb"), 2).length == 2
    assert shortest_deletion(Word([1, 1]), 1).length == 1
    d = shortest_deletion(text("abcabc"), 0, side="prefix")
    assert (d.length, d.kept_start, d.kept_end) == (4, 5, 6)


def test_errors():
    with pytest.raises(WordError):
        shortest_deletion(text("ab"), 1)
    with pytest.raises(WordError):
        shortest_deletion(text("abab"), -1)
    with pytest.raises(ValueError):
        shortest_deletion(text("abab"), 1, side="middle")


def test_matches_naive_scan(backend):
    for w in all_words(8, 2):
        alphabet = Alphabet(2)
        total = iota(w, alphabet)
        for ell in range(total):
            for side in ("suffix", "prefix"):
                assert shortest_deletion(w, ell, side, alphabet).length == _naive(w, ell, side, alphabet)
