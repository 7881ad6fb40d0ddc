"""Shortest prefix or suffix deletion that lowers the universality index to a target."""

from __future__ import annotations

from dataclasses import dataclass

from .arch import build_tables, iota
from .core import Alphabet, Word, WordError, reverse


@dataclass(frozen=True)
class Deletion:
    """``length`` letters removed from ``side``; ``w[kept_start..kept_end]`` survives (1-based)."""

    side: str
    length: int
    kept_start: int
    kept_end: int


def _suffix_cut(w: Word, ell: int, alphabet: Alphabet | None) -> int:
    """End of the shortest (ell + 1)-universal prefix, by ell + 1 arch jumps."""
    tables = build_tables(w, alphabet)
    j = 1
    end = 0
    for _ in range(ell + 1):
        end = tables.shortest_universal_end(j)
        j = end + 1
    return end


def shortest_deletion(w: Word, ell: int, side: str = "suffix", alphabet: Alphabet | None = None) -> Deletion:
    """Delete as little as possible from one end so that what is kept has index exactly ``ell``."""
    if side not in ("prefix", "suffix"):
        raise ValueError(f"side must be 'prefix' or 'suffix', got {side!r}")
    if ell < 0:
        raise WordError("ell must be nonnegative")
    total = iota(w, alphabet)
    if ell >= total:
        raise WordError(f"target {ell} must be below iota(w) = {total}")
    n = len(w)
    if side == "suffix":
        t = _suffix_cut(w, ell, alphabet)
        return Deletion(side, n - t + 1, 1, t - 1)
    t = _suffix_cut(reverse(w), ell, alphabet)
    length = n - t + 1
    return Deletion(side, length, length + 1, n)
