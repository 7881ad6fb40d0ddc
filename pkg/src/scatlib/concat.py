"""Fewest words from a finite set whose concatenation is k-universal.

Three exact solvers share one outer loop: build tables for 2^e-word
concatenations by doubling until some entry reaches k, then binary-search
the exact count between 2^(f-1) and 2^f by composing kept layers.

* :func:`min_concat_general` works for any set; its state is the alphabet
  of the leftover suffix, so its tables have 2^(2 sigma) entries per word.
* :func:`min_concat_all_universal` needs every word to contain all letters;
  its state is a word index plus one of at most sigma + 1 offsets.
* :func:`min_concat_binary` shrinks a binary set to at most nine useful
  words and hands them to the general solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .arch import factorize_within, tables_within
from .core import Alphabet, BigCount, Word, WordError

DEFAULT_SIGMA_CAP = 12


class UnsolvableError(WordError):
    """No concatenation of the words is k-universal."""


@dataclass(frozen=True)
class WordSet:
    """Words w_1..w_p over a shared alphabet.

    Sigma is the set of letters used by any word unless ``alphabet`` is given.
    """

    words: tuple[Word, ...]
    alphabet: Alphabet | None = None
    sigma: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        used = sorted(set().union(*(w.alph for w in self.words))) if self.words else []
        if self.alphabet is None:
            sigma = tuple(used)
        else:
            if used and used[-1] > self.alphabet.size:
                raise WordError(f"letter {used[-1]} outside alphabet of size {self.alphabet.size}")
            sigma = tuple(range(1, self.alphabet.size + 1))
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def of(cls, words: Sequence[Word], alphabet: Alphabet | None = None) -> WordSet:
        return cls(tuple(words), alphabet)

    def __len__(self) -> int:
        return len(self.words)

    @property
    def total_length(self) -> int:
        return sum(len(w) for w in self.words)

    @property
    def cap(self) -> int:
        return (self.sigma[-1] if self.sigma else 0) + 1

    def solvable(self) -> bool:
        return bool(self.words) and len(self.sigma) > 0 and set().union(*(w.alph for w in self.words)) == set(self.sigma)

    def all_universal(self) -> bool:
        need = len(self.sigma)
        return bool(self.words) and need > 0 and all(len(w.alph) == need for w in self.words)


def witness_bound(ell: BigCount) -> int:
    """The f with 2^(f-1) < ell <= 2^f (0 for ell <= 1)."""
    return max(ell - 1, 0).bit_length()


def _require_solvable(ws: WordSet, k: BigCount) -> None:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not ws.solvable():
        raise UnsolvableError("some letter of the alphabet occurs in no word")


def _doubling_search(base, compose, best, k):
    """Shared outer loop.

    ``base`` is the 1-word layer and ``compose(a, b)`` joins layers for
    counts x and y into one for x + y. ``best(layer)`` is the largest index
    reachable from the empty start. Returns the least count reaching k.
    """
    layers = [base]
    if best(base) >= k:
        return 1
    while best(layers[-1]) < k:
        layers.append(compose(layers[-1], layers[-1]))
    f = len(layers) - 1
    lo, hi = 1 << (f - 1), 1 << f
    low_layer = layers[f - 1]
    # every kept layer N_h is needed here, not only the last two
    while lo < hi - 1:
        h = (hi - lo).bit_length() - 2
        mid = compose(low_layer, layers[h])
        if best(mid) >= k:
            hi = lo + (1 << h)
        else:
            lo, low_layer = lo + (1 << h), mid
    return hi


# general solver


@dataclass(frozen=True)
class SubsetDPLayer:
    """``table[S, S2, j]`` is the best index gained by u_S followed by 2^e words ending in w_j.

    ``S`` and ``S2`` are bitmasks over Sigma; ``S2`` is the alphabet of what
    is left after the last complete arch. Unreachable cells hold ``neg``.
    """

    count: BigCount
    table: np.ndarray
    neg: int

    @property
    def e(self) -> int:
        return witness_bound(self.count)


def _first_last(w: Word, bit: dict[int, int], sigma: int):
    first = [0] * sigma
    last = [0] * sigma
    for pos, a in enumerate(w.letters, 1):
        b = bit[a]
        if not first[b]:
            first[b] = pos
        last[b] = pos
    return first, last


def _subset_step(ws: WordSet):
    """M_1: for each start set S and word i, the (gain, leftover set) of u_S w_i."""
    sigma = len(ws.sigma)
    bit = {a: b for b, a in enumerate(ws.sigma)}
    full = (1 << sigma) - 1
    steps = []
    for w in ws.words:
        first, last = _first_last(w, bit, sigma)
        tables = tables_within(w, sigma, ws.cap)
        own = 0
        for b in range(sigma):
            if first[b]:
                own |= 1 << b
        row = []
        for s in range(full + 1):
            missing = [b for b in range(sigma) if not s >> b & 1]
            if any(first[b] == 0 for b in missing):
                # no arch closes inside u_S w_i
                row.append((0, s | own))
                continue
            j = max((first[b] for b in missing), default=0)
            gain = 1 + tables.suffix_iota(j + 1)
            g = tables.suffix_end(j + 1)
            rest = 0
            for b in range(sigma):
                if last[b] > g:
                    rest |= 1 << b
            row.append((gain, rest))
        steps.append(row)
    return steps


def _neg_for(k: BigCount) -> tuple[int, object]:
    bits = int(k).bit_length() + 8
    return -(1 << bits), (np.int64 if bits < 60 else object)


def min_concat_general(ws: WordSet, k: BigCount, sigma_cap: int | None = DEFAULT_SIGMA_CAP) -> BigCount:
    """Exact minimum over all concatenations; exponential in sigma only.

    ``sigma_cap`` guards against the 2^(3 sigma) table cost; pass ``None``
    to lift it.
    """
    _require_solvable(ws, k)
    sigma = len(ws.sigma)
    if sigma_cap is not None and sigma > sigma_cap:
        raise WordError(f"alphabet of size {sigma} exceeds the cap {sigma_cap}; raise sigma_cap to proceed")
    if k == 0:
        return 0
    neg, dtype = _neg_for(k)
    steps = _subset_step(ws)
    q, p = 1 << sigma, len(ws)
    base = np.full((q, q, p), neg, dtype=dtype)
    for i, row in enumerate(steps):
        for s, (gain, rest) in enumerate(row):
            base[s, rest, i] = gain

    def compose(a: SubsetDPLayer, b: SubsetDPLayer) -> SubsetDPLayer:
        reduced = a.table.max(axis=2)
        out = np.full((q, q, p), neg, dtype=dtype)
        for mid in range(q):
            col = reduced[:, mid]
            if (col == neg).all():
                continue
            cand = col[:, None, None] + b.table[mid][None, :, :]
            np.maximum(out, cand, out=out)
        # real gains are nonnegative; a negative sum touched an unreachable cell
        out[out < 0] = neg
        return SubsetDPLayer(a.count + b.count, out, neg)

    def best(layer: SubsetDPLayer):
        return layer.table[0].max()

    return _doubling_search(SubsetDPLayer(1, base, neg), compose, best, k)


# all-universal solver


@dataclass(frozen=True)
class CrossingDPLayer:
    """``cells[i][c][j] = (t, d)``: best index and earliest end for ``count`` words.

    The words are w_i read from offset ``states[i][c]`` + 1, then
    ``count - 2`` arbitrary words, then w_j, whose last arch ends at ``d``.
    Larger t is more useful; ties go to smaller d. ``None`` marks cells
    that no concatenation reaches.
    """

    count: BigCount
    cells: list


def _more_useful(a, b) -> bool:
    if b is None:
        return a is not None
    if a is None:
        return False
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


class _Crossing:
    """Preprocessed offsets, crossing ends and per-word tables."""

    def __init__(self, ws: WordSet):
        sigma = len(ws.sigma)
        bit = {a: b for b, a in enumerate(ws.sigma)}
        self.p = len(ws)
        self.first, self.last, self.tables, self.states, self.index = [], [], [], [], []
        for w in ws.words:
            first, last = _first_last(w, bit, sigma)
            self.first.append(first)
            self.last.append(last)
            self.tables.append(tables_within(w, sigma, ws.cap))
            r = min(last)
            seen, offsets = set(), []
            for pos in range(r, len(w) + 1):
                if w[pos - 1] not in seen:
                    seen.add(w[pos - 1])
                    offsets.append(pos)
            states = [0] + offsets
            self.states.append(states)
            self.index.append({c: n for n, c in enumerate(states)})
        # order letters by last occurrence so a prefix of the order is the
        # set of letters already used up at any cut point
        self.by_last = [sorted(range(sigma), key=lambda b, row=row: row[b]) for row in self.last]
        self._steps = {}

    def after(self, i: int, c: int) -> tuple[int, int]:
        tab = self.tables[i]
        return tab.suffix_iota(c + 1), tab.suffix_end(c + 1)

    def crossing_end(self, i: int, cut: int, q: int) -> int:
        """Where the arch that starts after ``cut`` in w_i closes inside w_q."""
        end = 0
        for b in self.by_last[i]:
            if self.last[i][b] > cut:
                break
            end = max(end, self.first[q][b])
        return end

    def step(self, i: int, ci: int, q: int) -> tuple[int, int]:
        """Read the rest of w_i from state ``ci`` and cross into w_q; returns (gain, state in w_q)."""
        key = (i, ci, q)
        if key not in self._steps:
            a, cut = self.after(i, self.states[i][ci])
            end = self.crossing_end(i, cut, q)
            b, d = self.after(q, end)
            self._steps[key] = (a + 1 + b, self.index[q][d])
        return self._steps[key]

    def base(self) -> CrossingDPLayer:
        cells = []
        for i in range(self.p):
            rows = []
            for c in self.states[i]:
                row = [None] * self.p
                t, d = self.after(i, c)
                # with no arch, d = c is the start offset itself
                row[i] = (t, self.index[i][d])
                rows.append(row)
            cells.append(rows)
        return CrossingDPLayer(1, cells)

    def extend(self, layer: CrossingDPLayer) -> CrossingDPLayer:
        """P: one extra word in front of ``layer``."""
        cells = []
        for i in range(self.p):
            rows = []
            for ci in range(len(self.states[i])):
                row = [None] * self.p
                for q in range(self.p):
                    gain, dq = self.step(i, ci, q)
                    for j, cell in enumerate(layer.cells[q][dq]):
                        if cell is None:
                            continue
                        cand = (gain + cell[0], cell[1])
                        if _more_useful(cand, row[j]):
                            row[j] = cand
                rows.append(row)
            cells.append(rows)
        return CrossingDPLayer(layer.count + 1, cells)

    def join(self, a: CrossingDPLayer, b: CrossingDPLayer) -> CrossingDPLayer:
        """Layer ``a`` followed by ``b`` sharing the boundary word (counts add up to a + b - 1)."""
        cells = []
        for i in range(self.p):
            rows = []
            for ci in range(len(self.states[i])):
                row = [None] * self.p
                for q, left in enumerate(a.cells[i][ci]):
                    if left is None:
                        continue
                    for j, right in enumerate(b.cells[q][left[1]]):
                        if right is None:
                            continue
                        cand = (left[0] + right[0], right[1])
                        if _more_useful(cand, row[j]):
                            row[j] = cand
                rows.append(row)
            cells.append(rows)
        return CrossingDPLayer(a.count + b.count - 1, cells)


def min_concat_all_universal(ws: WordSet, k: BigCount) -> BigCount:
    """Exact minimum when every word contains all of Sigma; polynomial in p and sigma."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not ws.all_universal():
        raise WordError("every word must contain every letter of the alphabet")
    if k == 0:
        return 0
    cx = _Crossing(ws)
    plus = {}

    def compose(a: CrossingDPLayer, b: CrossingDPLayer) -> CrossingDPLayer:
        # b is always a doubling layer R_h with 2^h words; joining through
        # P_h (2^h + 1 words, boundary word shared) adds exactly 2^h words
        h = b.count.bit_length() - 1
        if h not in plus:
            plus[h] = cx.extend(b)
        return cx.join(a, plus[h])

    def best(layer: CrossingDPLayer):
        return max(cell[0] for i in range(cx.p) for cell in layer.cells[i][0] if cell is not None)

    return _doubling_search(cx.base(), compose, best, k)


# binary reduction


def binary_candidates(ws: WordSet) -> list[int]:
    """Indices of the at most nine words that suffice over a binary alphabet.

    Keeps the best word overall, the best by start letter (judged without
    its first letter), the best by end letter (without its last letter)
    and the best per (start, end) pair (without either). Lowest index wins ties.
    """
    if len(ws.sigma) != 2:
        raise WordError("binary reduction needs an alphabet of exactly two letters")
    need, cap = 2, ws.cap

    def t(w: Word) -> int:
        return factorize_within(w, need, cap).iota

    chosen = []

    def pick(indices, trimmed):
        best_i, best_t = None, -1
        for i in indices:
            value = t(trimmed(ws.words[i]))
            if value > best_t:
                best_i, best_t = i, value
        if best_i is not None and best_i not in chosen:
            chosen.append(best_i)

    every = range(len(ws))
    pick(every, lambda w: w)
    for x in ws.sigma:
        pick([i for i in every if len(ws.words[i]) and ws.words[i][0] == x], lambda w: w[1:])
    for x in ws.sigma:
        pick([i for i in every if len(ws.words[i]) and ws.words[i][-1] == x], lambda w: w[:-1])
    for x in ws.sigma:
        for y in ws.sigma:
            pick(
                # a one-letter word cannot both close one arch and open the next
                [i for i in every if len(ws.words[i]) >= 2 and ws.words[i][0] == x and ws.words[i][-1] == y],
                lambda w: w[1:-1],
            )
    return chosen


def min_concat_binary(ws: WordSet, k: BigCount) -> BigCount:
    """Exact minimum over a binary alphabet via the nine-word reduction."""
    _require_solvable(ws, k)
    keep = binary_candidates(ws)
    reduced = WordSet(tuple(ws.words[i] for i in keep), ws.alphabet)
    return min_concat_general(reduced, k)


def min_concat(ws: WordSet, k: BigCount, mode: str = "auto", sigma_cap: int | None = DEFAULT_SIGMA_CAP) -> BigCount:
    """Dispatch on ``mode``; ``auto`` tries binary, then all-universal, then general."""
    if mode == "auto":
        if len(ws.sigma) == 2 and ws.solvable():
            mode = "binary"
        elif ws.all_universal():
            mode = "universal"
        else:
            mode = "general"
    if mode == "binary":
        return min_concat_binary(ws, k)
    if mode == "universal":
        return min_concat_all_universal(ws, k)
    if mode == "general":
        return min_concat_general(ws, k, sigma_cap)
    raise ValueError(f"unknown mode {mode!r}")
