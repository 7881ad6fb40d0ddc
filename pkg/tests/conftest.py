import itertools

import pytest

from scatlib import _backend
from scatlib.core import Word


def all_words(max_len, sigma, min_len=0):
    """Every word over {1..sigma} with length in [min_len, max_len], shortlex order."""
    for n in range(min_len, max_len + 1):
        for letters in itertools.product(range(1, sigma + 1), repeat=n):
            yield Word(letters, sigma)


def small_universe():
    """Criterion-2 universe: binary words up to length 9, ternary up to length 7."""
    yield from all_words(9, 2)
    yield from all_words(7, 3)


def text(s):
    return Word.from_text(s)


@pytest.fixture(params=_backend.available())
def backend(request):
    previous = _backend.use(request.param)
    yield request.param
    _backend.use(previous)


def brute_min_concat(words, k, sigma, max_len=5):
    """Least l <= max_len with some l-fold concatenation being k-universal, else None."""
    from scatlib.arch import iota
    from scatlib.core import Alphabet, concat

    alphabet = Alphabet(sigma)
    for ell in range(max_len + 1):
        for combo in itertools.product(words, repeat=ell):
            if iota(concat(*combo) if combo else Word(), alphabet) >= k:
                return ell
    return None
