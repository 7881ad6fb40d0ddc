"""Words over integer alphabets and elementary word transforms.

Letters are integer ids ``1..sigma``. Positions in public APIs are 1-based
(``w[1..n]``) unless a function says otherwise; Python indexing on a
:class:`Word` stays 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

# Counters that may grow with k (given in binary) are plain Python ints,
# which are arbitrary precision.
BigCount = int


class WordError(ValueError):
    """Malformed word, alphabet, or index."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered alphabet ``{1 < 2 < ... < size}`` with an optional display map."""

    size: int
    display: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise WordError(f"alphabet size must be >= 1, got {self.size}")
        if self.display is not None:
            if len(self.display) != self.size:
                raise WordError("display map must name every letter exactly once")
            if len(set(self.display)) != self.size:
                raise WordError("display map is not injective")

    def symbol(self, letter: int) -> str:
        if self.display is not None:
            return self.display[letter - 1]
        if self.size <= 26:
            return chr(ord("a") + letter - 1)
        return str(letter)

    def extended(self, size: int) -> Alphabet:
        """Same letters plus fresh ones up to ``size``."""
        if size < self.size:
            raise WordError(f"cannot shrink alphabet of size {self.size} to {size}")
        display = None
        if self.display is not None:
            display = self.display + tuple(f"#{i}" for i in range(self.size + 1, size + 1))
        return Alphabet(size, display)


class Word:
    """Immutable sequence of letter ids over a declared :class:`Alphabet`."""

    def __init__(self, letters: Iterable[int] = (), alphabet: Alphabet | int | None = None):
        arr = np.array(letters if isinstance(letters, np.ndarray) else list(letters), dtype=np.int64)
        if arr.ndim != 1:
            raise WordError("a word is a flat sequence of letters")
        top = int(arr.max()) if arr.size else 1
        if arr.size and int(arr.min()) < 1:
            raise WordError("letter ids must be positive")
        if alphabet is None:
            alphabet = Alphabet(max(top, 1))
        elif isinstance(alphabet, int):
            alphabet = Alphabet(alphabet)
        if top > alphabet.size:
            raise WordError(f"letter {top} outside alphabet of size {alphabet.size}")
        arr.flags.writeable = False
        self._arr = arr
        self.alphabet = alphabet

    @classmethod
    def from_text(cls, text: str, alphabet: Alphabet | None = None) -> Word:
        """Parse letters written with ``alphabet``'s display symbols (default a, b, c, ...)."""
        alphabet = alphabet or Alphabet(26)
        index = {alphabet.symbol(i): i for i in range(1, alphabet.size + 1)}
        try:
            return cls([index[ch] for ch in text], alphabet)
        except KeyError as exc:
            raise WordError(f"symbol {exc.args[0]!r} not in alphabet") from None

    @property
    def array(self) -> np.ndarray:
        """Read-only int64 view of the letters."""
        return self._arr

    @cached_property
    def letters(self) -> tuple[int, ...]:
        return tuple(self._arr.tolist())

    @cached_property
    def alph(self) -> frozenset[int]:
        return frozenset(np.unique(self._arr).tolist())

    def __len__(self) -> int:
        return int(self._arr.size)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self._arr[item], self.alphabet)
        return int(self._arr[item])

    def factor(self, i: int, j: int) -> Word:
        """``w[i..j]`` with 1-based inclusive bounds (empty when j < i)."""
        return Word(self._arr[i - 1 : max(j, i - 1)], self.alphabet)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._arr.size == other._arr.size and bool(np.array_equal(self._arr, other._arr))

    def __hash__(self) -> int:
        return hash(self._arr.tobytes())

    def __add__(self, other: Word) -> Word:
        return concat(self, other)

    def __mul__(self, times: int) -> Word:
        return Word(np.tile(self._arr, times), self.alphabet)

    def __repr__(self) -> str:
        return f"Word({self.to_text()!r})"

    def to_text(self, sep: str = "") -> str:
        return sep.join(self.alphabet.symbol(a) for a in self.letters)

    def to_ints(self) -> str:
        return ",".join(map(str, self.letters))

    def with_alphabet(self, alphabet: Alphabet | int) -> Word:
        return Word(self._arr, alphabet)


@dataclass(frozen=True)
class MorphicPermutation:
    """Letter bijection on ``[1, size]``; ``images[a - 1]`` is the image of ``a``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(a) for a in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise WordError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, size: int) -> MorphicPermutation:
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, letter: int) -> int:
        return self.images[letter - 1]


def normalize(raw: Sequence[Hashable]) -> tuple[Word, list]:
    """Relabel arbitrary sortable symbols by rank; returns the word and the symbol table.

    ``table[i - 1]`` is the raw symbol that became letter ``i``.
    """
    words, table = normalize_many([raw])
    return words[0], table


def normalize_many(raws: Sequence[Sequence[Hashable]]) -> tuple[list[Word], list]:
    """Relabel several words through one shared symbol table."""
    table = sorted({s for raw in raws for s in raw})
    rank = {s: i for i, s in enumerate(table, 1)}
    display = tuple(str(s) for s in table) if table else None
    if display is not None and len(set(display)) != len(display):
        display = None
    alphabet = Alphabet(len(table), display) if table else Alphabet(1)
    return [Word([rank[s] for s in raw], alphabet) for raw in raws], table


def reverse(w: Word) -> Word:
    return Word(w.array[::-1], w.alphabet)


def conjugate(w: Word, split: int) -> Word:
    """Rotation ``w[split+1..n] w[1..split]``."""
    if not 0 <= split <= len(w):
        raise WordError(f"split {split} outside [0, {len(w)}]")
    return Word(np.concatenate([w.array[split:], w.array[:split]]), w.alphabet)


def concat(*words: Word) -> Word:
    if not words:
        return Word()
    alphabet = max((w.alphabet for w in words), key=lambda a: a.size)
    return Word(np.concatenate([w.array for w in words]), alphabet)


def apply_permutation(pi: MorphicPermutation, w: Word) -> Word:
    """Letterwise image ``pi(w)``."""
    if len(w) and int(w.array.max()) > pi.size:
        raise WordError(f"permutation on {pi.size} letters cannot map letter {int(w.array.max())}")
    table = np.array((0,) + pi.images, dtype=np.int64)
    alphabet = w.alphabet if w.alphabet.size == pi.size else Alphabet(pi.size)
    return Word(table[w.array], alphabet)


def is_palindrome(w: Word) -> bool:
    return bool(np.array_equal(w.array, w.array[::-1]))
