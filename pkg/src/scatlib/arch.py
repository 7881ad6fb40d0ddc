"""Arch factorization, universality index, circular universality, suffix tables.

Universality is measured against an alphabet Sigma. When no alphabet is
passed, Sigma is alph(w), the letters the word actually uses; passing an
:class:`Alphabet` of size s means Sigma = {1..s}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import Alphabet, Word, WordError


class InvariantError(AssertionError):
    """An internal cross-check between two computations disagreed."""


def check(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantError(message)


def sigma_of(w: Word, alphabet: Alphabet | None = None) -> tuple[int, int]:
    """Return ``(|Sigma|, cap)`` where ``cap`` bounds every letter id (exclusive)."""
    top = int(w.array.max()) if len(w) else 0
    if alphabet is None:
        return len(w.alph), top + 1
    if top > alphabet.size:
        raise WordError(f"letter {top} outside alphabet of size {alphabet.size}")
    return alphabet.size, alphabet.size + 1


def covers_alphabet(w: Word, alphabet: Alphabet | None) -> bool:
    need, _ = sigma_of(w, alphabet)
    return need > 0 and len(w.alph) == need


@dataclass(frozen=True)
class ArchFactorization:
    """``w = arch_1 ... arch_l . rest`` with every arch minimal universal.

    ``arch_ends`` are 1-based inclusive ends; the rest is ``w[rest_start..n]``
    and is empty exactly when ``rest_start == n + 1``.
    """

    word: Word
    sigma: int
    arch_ends: tuple[int, ...]
    rest_start: int
    marker: Word

    @property
    def iota(self) -> int:
        return len(self.arch_ends)

    def arches(self) -> list[Word]:
        starts = (0,) + self.arch_ends[:-1]
        return [self.word.factor(s + 1, e) for s, e in zip(starts, self.arch_ends)]

    def rest(self) -> Word:
        return self.word.factor(self.rest_start, len(self.word))

    def dotted(self) -> str:
        parts = [a.to_text() for a in self.arches()]
        rest = self.rest()
        if len(rest):
            parts.append(rest.to_text())
        return ".".join(parts)


def arch_factorize(w: Word, alphabet: Alphabet | None = None) -> ArchFactorization:
    need, cap = sigma_of(w, alphabet)
    return factorize_within(w, need, cap)


def factorize_within(w: Word, need: int, cap: int) -> ArchFactorization:
    """Arch factorization against a Sigma of ``need`` letters, all ids below ``cap``."""
    ends = tuple(_backend.kernels.arch_ends(w.array, need, cap))
    marker = Word([w[e - 1] for e in ends], w.alphabet)
    rest_start = (ends[-1] if ends else 0) + 1
    return ArchFactorization(w, need, ends, rest_start, marker)


def iota(w: Word, alphabet: Alphabet | None = None) -> int:
    """Universality index: the number of arches."""
    need, cap = sigma_of(w, alphabet)
    return len(_backend.kernels.arch_ends(w.array, need, cap))


def marker_word(f: ArchFactorization) -> Word:
    return f.marker


@dataclass(frozen=True)
class UniversalityTables:
    """Per-suffix arrays; entry ``j - 1`` describes ``x[j..n]``.

    ``u``: end of the shortest universal prefix, ``unreachable`` if none.
    ``t``: universality index of the suffix.
    ``m``: end of the shortest prefix reaching index ``t``; ``j - 1`` when ``t`` is 0.
    """

    word: Word
    sigma: int
    u: np.ndarray
    t: np.ndarray
    m: np.ndarray

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def unreachable(self) -> int:
        return self.n + 1

    def suffix_iota(self, j: int) -> int:
        """Index of ``x[j..n]``; ``j = n + 1`` is the empty suffix."""
        return 0 if j == self.n + 1 else int(self.t[j - 1])

    def suffix_end(self, j: int) -> int:
        return self.n if j == self.n + 1 else int(self.m[j - 1])

    def shortest_universal_end(self, j: int) -> int:
        return self.unreachable if j == self.n + 1 else int(self.u[j - 1])


def build_tables(x: Word, alphabet: Alphabet | None = None) -> UniversalityTables:
    need, cap = sigma_of(x, alphabet)
    return tables_within(x, need, cap)


def tables_within(x: Word, need: int, cap: int) -> UniversalityTables:
    u, t, m = (np.asarray(a, dtype=np.int64) for a in _backend.kernels.suffix_tables(x.array, need, cap))
    return UniversalityTables(x, need, u, t, m)


def factor_is_universal(tables: UniversalityTables, i: int, j: int) -> bool:
    """Whether ``x[i..j]`` contains every letter; O(1)."""
    if not 1 <= i <= j <= tables.n:
        raise IndexError(f"need 1 <= i <= j <= {tables.n}, got i={i}, j={j}")
    return j >= int(tables.u[i - 1])


def conjugate_iotas(w: Word, alphabet: Alphabet | None = None) -> np.ndarray:
    """Universality index of every rotation; entry ``s`` is the rotation split after ``s``.

    Counts greedy arch jumps inside each length-n window of ``ww`` using a
    binary-lifted jump table.
    """
    n = len(w)
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    need, cap = sigma_of(w, alphabet)
    if len(w.alph) != need:
        return np.zeros(n, dtype=np.int64)
    ww = Word(np.concatenate([w.array, w.array]), w.alphabet)
    u = np.asarray(_backend.kernels.suffix_tables(ww.array, need, cap)[0], dtype=np.int64)
    size = 2 * n + 3
    dtype = np.int32 if size < 2**31 else np.int64
    # jump[p] is the start of the next arch after the arch starting at p
    jump = np.empty(size, dtype=dtype)
    jump[0] = 0
    jump[1 : 2 * n + 1] = u + 1
    jump[2 * n + 1 :] = size - 1
    levels = [jump]
    while (1 << len(levels)) <= n:
        prev = levels[-1]
        levels.append(prev[prev])
    starts = np.arange(1, n + 1, dtype=dtype)
    limit = starts + n
    pos = starts.copy()
    count = np.zeros(n, dtype=np.int64)
    for e in range(len(levels) - 1, -1, -1):
        cand = levels[e][pos]
        ok = cand <= limit
        pos = np.where(ok, cand, pos)
        count += ok.astype(np.int64) << e
    return count


def zeta_with_witness(w: Word, alphabet: Alphabet | None = None) -> tuple[int, int]:
    """Circular universality index and the smallest split whose rotation attains it."""
    counts = conjugate_iotas(w, alphabet)
    best = int(counts.max())
    split = int(np.argmax(counts))
    base = iota(w, alphabet)
    check(int(counts[0]) == base, "rotation by 0 must reproduce iota(w)")
    check(base <= best <= base + 1, f"zeta={best} outside [iota, iota+1] with iota={base}")
    return best, split


def zeta(w: Word, alphabet: Alphabet | None = None) -> int:
    return zeta_with_witness(w, alphabet)[0]
