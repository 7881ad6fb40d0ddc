"""Shortlex normal forms for Simon's congruence and tests built on them.

Each position i of w gets an x-coordinate (how long a scattered factor can
end at i when read from the left) and a y-coordinate (the same from the
right). Positions whose coordinates sum past k + 1 carry no information for
~_k and are dropped; runs of saturated positions with equal coordinates
commute and are sorted by letter. The result is the shortest, then
lexicographically least, word in the class of w.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .arch import arch_factorize, sigma_of
from .core import Alphabet, Word, WordError
from .unionfind import IntervalUnionFind

__all__ = [
    "IntervalUnionFind",
    "NormalForm",
    "SimonCoordinates",
    "equiv_k",
    "shortlex_normal_form",
    "simon_coordinates",
    "smallest_distinguishing_k",
    "uncommon_square_witness",
    "x_coordinates",
    "y_coordinates",
]


@dataclass(frozen=True)
class SimonCoordinates:
    """Coordinate arrays for one (w, k); entry ``i - 1`` is position ``i``.

    Eliminated positions carry ``y = n + 1`` and ``alive = False``.
    """

    k: int
    x: np.ndarray
    y: np.ndarray
    alive: np.ndarray


@dataclass(frozen=True)
class NormalForm:
    word: Word
    k: int

    def __len__(self) -> int:
        return len(self.word)


def _cap(w: Word) -> int:
    return (int(w.array.max()) if len(w) else 0) + 1


def _check_k(k: int) -> None:
    if k < 0:
        raise WordError(f"k must be nonnegative, got {k}")


def x_coordinates(w: Word) -> np.ndarray:
    return np.asarray(_backend.kernels.x_coordinates(w.array, _cap(w)), dtype=np.int64)


def y_coordinates(w: Word, k: int, x=None) -> tuple[np.ndarray, np.ndarray]:
    """Right-to-left y-coordinates with elimination; returns ``(y, alive)``."""
    _check_k(k)
    if x is None:
        x = x_coordinates(w)
    y = np.asarray(_backend.kernels.y_coordinates(w.array, _cap(w), k, x), dtype=np.int64)
    return y, y != len(w) + 1


def simon_coordinates(w: Word, k: int) -> SimonCoordinates:
    x = x_coordinates(w)
    y, alive = y_coordinates(w, k, x)
    return SimonCoordinates(k, x, y, alive)


def shortlex_normal_form(w: Word, k: int) -> NormalForm:
    """Shortlex-least word ~_k-congruent to ``w`` in O(n).

    ``k = 0`` gives the empty word and any ``k >= |w|`` gives ``w`` itself.
    """
    _check_k(k)
    letters = _backend.kernels.normal_form(w.array, _cap(w), k)
    return NormalForm(Word(np.asarray(letters, dtype=np.int64), w.alphabet), k)


def equiv_k(w1: Word, w2: Word, k: int) -> bool:
    """Whether w1 and w2 have the same scattered factors up to length k."""
    _check_k(k)
    return shortlex_normal_form(w1, k).word == shortlex_normal_form(w2, k).word


def smallest_distinguishing_k(w1: Word, w2: Word) -> int | None:
    """Least k with w1 and w2 not ~_k-congruent; ``None`` if the words are equal.

    ~_{k+1} refines ~_k, so non-congruence is monotone in k and a binary
    search over [1, max(|w1|, |w2|)] suffices. Distinct words already differ
    at that upper end.
    """
    if w1 == w2:
        return None
    lo, hi = 1, max(len(w1), len(w2))
    while lo < hi:
        mid = (lo + hi) // 2
        if equiv_k(w1, w2, mid):
            lo = mid + 1
        else:
            hi = mid
    return lo


def uncommon_square_witness(w: Word, alphabet: Alphabet | None = None) -> Word:
    """A shortest scattered factor of ww that is not one of w.

    Built as m(w) followed by the least letter missing from the rest r(w);
    its length is iota(w) + 1.
    """
    need, _ = sigma_of(w, alphabet)
    if need == 0 or len(w.alph) != need:
        raise WordError("w must contain every letter of a nonempty alphabet")
    f = arch_factorize(w, alphabet)
    present = f.rest().alph
    sigma = range(1, need + 1) if alphabet is not None else sorted(w.alph)
    missing = next(a for a in sigma if a not in present)
    return Word(list(f.marker.letters) + [missing], w.alphabet)
