"""Brute-force reference implementations that materialize spectra.

Exponential in ``k``; meant for tests and debugging only. Size guards
(|w| <= 20, k <= 10) protect against accidental blow-up. Override them per
call with ``unguarded=True`` or globally with ``SCATLIB_ORACLE_LIMIT`` set
to ``"LEN"`` or ``"LEN,K"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .core import Alphabet, Word

DEFAULT_MAX_LEN = 20
DEFAULT_MAX_K = 10


class OracleLimitError(ValueError):
    pass


def _limits() -> tuple[int, int]:
    raw = os.environ.get("SCATLIB_ORACLE_LIMIT", "").strip()
    if not raw:
        return DEFAULT_MAX_LEN, DEFAULT_MAX_K
    parts = [int(p) for p in raw.split(",")]
    return parts[0], parts[1] if len(parts) > 1 else DEFAULT_MAX_K


def _guard(words, k=None, unguarded=False):
    if unguarded:
        return
    max_len, max_k = _limits()
    for w in words:
        if len(w) > max_len:
            raise OracleLimitError(f"oracle refuses |w| = {len(w)} > {max_len}")
    if k is not None and k > max_k:
        raise OracleLimitError(f"oracle refuses k = {k} > {max_k}")


@dataclass(frozen=True)
class Spectrum:
    """All scattered factors of one exact length."""

    k: int
    members: frozenset[tuple[int, ...]]

    def __contains__(self, u) -> bool:
        return tuple(u) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.members)


def _levels(letters: tuple[int, ...], k: int) -> list[frozenset[tuple[int, ...]]]:
    """Spectra of lengths 0..k by extending every distinct factor at its leftmost embedding."""
    n = len(letters)
    alphabet = sorted(set(letters))
    # nxt[i][a]: first position >= i holding a, or n if none
    nxt = [dict() for _ in range(n + 1)]
    nxt[n] = {a: n for a in alphabet}
    for i in range(n - 1, -1, -1):
        nxt[i] = dict(nxt[i + 1])
        nxt[i][letters[i]] = i
    frontier = {(): 0}
    levels = [frozenset(frontier)]
    for _ in range(k):
        grown = {}
        for prefix, pos in frontier.items():
            for a in alphabet:
                p = nxt[pos][a]
                if p < n:
                    grown[prefix + (a,)] = p + 1
        frontier = grown
        levels.append(frozenset(frontier))
    return levels


def scatfact_k(w: Word, k: int, *, unguarded: bool = False) -> Spectrum:
    _guard([w], k, unguarded)
    return Spectrum(k, _levels(w.letters, k)[k])


def full_spectrum(w: Word, k: int, *, unguarded: bool = False) -> frozenset[tuple[int, ...]]:
    """Union of the spectra of lengths 0..k."""
    _guard([w], k, unguarded)
    return frozenset().union(*_levels(w.letters, k))


def equiv_oracle(w1: Word, w2: Word, k: int, *, unguarded: bool = False) -> bool:
    _guard([w1, w2], k, unguarded)
    return _levels(w1.letters, k) == _levels(w2.letters, k)


def iota_oracle(w: Word, alphabet: Alphabet | None = None, *, unguarded: bool = False) -> int:
    """Largest k whose k-spectrum is all of Sigma^k (Sigma = alph(w) unless given)."""
    _guard([w], None, unguarded)
    sigma = alphabet.size if alphabet is not None else len(w.alph)
    if sigma == 0:
        return 0
    if alphabet is not None and any(a > sigma for a in w.alph):
        raise ValueError("word uses letters outside the alphabet")
    k = 0
    bound = len(w) // sigma
    levels = _levels(w.letters, bound)
    while k < bound and len(levels[k + 1]) == sigma ** (k + 1):
        k += 1
    return k


def shortest_uncommon_oracle(w1: Word, w2: Word, *, unguarded: bool = False):
    """Lexicographically least shortest word in exactly one of the two downward closures.

    Returns ``(word, length)``, or ``None`` when the words are equal.
    """
    _guard([w1, w2], None, unguarded)
    top = max(len(w1), len(w2)) + 1
    l1 = _levels(w1.letters, top)
    l2 = _levels(w2.letters, top)
    alphabet = max(w1.alphabet, w2.alphabet, key=lambda a: a.size)
    for length in range(top + 1):
        diff = l1[length] ^ l2[length]
        if diff:
            return Word(min(diff), alphabet), length
    return None


def scattered_factor_of(u: Word, w: Word) -> bool:
    """Greedy subsequence test (linear, not exponential; handy for witnesses)."""
    it = iter(w.letters)
    return all(a in it for a in u.letters)
