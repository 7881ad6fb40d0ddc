"""Universality of repetitions, palindromes and permutation doublings.

Counters that scale with k or with the exponent s are Python ints, so k
can be given with any number of digits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arch import build_tables, check, factorize_within, iota, sigma_of, zeta
from .core import Alphabet, BigCount, MorphicPermutation, Word, WordError, apply_permutation, concat, is_palindrome, reverse
from .simon import equiv_k


@dataclass(frozen=True)
class PowerCursor:
    """State after reading ``w^p``.

    ``i`` is iota(w^p) and ``w^(p-1) w[1..s]`` is the shortest prefix of
    ``w^p`` reaching it.
    """

    p: BigCount
    s: int
    i: BigCount


@dataclass(frozen=True)
class PowerSequence:
    """The cursor sequence of one word up to its first repeated ``s``.

    ``s`` and ``i`` are recorded for p = 0..p1 + delta. From p1 on the
    sequence repeats with period ``delta`` and every period adds ``gain``
    to the index.
    """

    word: Word
    s: tuple[int, ...]
    i: tuple[int, ...]
    p1: int
    delta: int
    gain: int

    def cursor(self, p: BigCount) -> PowerCursor:
        if p < 0:
            raise ValueError("p must be nonnegative")
        if p < len(self.i):
            return PowerCursor(p, self.s[p], self.i[p])
        q, r = divmod(p - self.p1, self.delta)
        return PowerCursor(p, self.s[self.p1 + r], self.i[self.p1 + r] + q * self.gain)

    def iota_at(self, p: BigCount) -> BigCount:
        return self.cursor(p).i

    def first_reaching(self, k: BigCount) -> BigCount:
        """Least p with iota(w^p) >= k."""
        if k <= 0:
            return 0
        for p, ip in enumerate(self.i):
            if ip >= k:
                return p
        base = self.i[self.p1]
        g = (k - base) // self.gain
        p3 = self.p1 + g * self.delta
        i3 = base + g * self.gain
        # one more period always suffices since i3 + gain > k
        for r in range(self.delta + 1):
            if i3 + self.i[self.p1 + r] - base >= k:
                return p3 + r
        raise AssertionError("period walk overran")  # pragma: no cover


def _require_full(w: Word, alphabet: Alphabet | None) -> tuple[int, int]:
    need, cap = sigma_of(w, alphabet)
    if need == 0 or len(w.alph) != need:
        raise WordError("every letter of the alphabet must occur in w")
    return need, cap


def power_sequence(w: Word, alphabet: Alphabet | None = None) -> PowerSequence:
    """Run the cursor over ``w, w^2, ...`` until ``s`` repeats (at most n + 1 steps)."""
    _require_full(w, alphabet)
    n = len(w)
    tables = build_tables(concat(w, w), alphabet)
    t = tables.t.tolist()
    m = tables.m.tolist()
    first_seen = [-1] * (n + 1)
    s_hist = [n]
    i_hist = [0]
    first_seen[n] = 0
    s, i = n, 0
    while True:
        # w contains every letter, so t >= 1 and the last arch ends in the newest copy
        i += t[s]
        s = m[s] - n
        s_hist.append(s)
        i_hist.append(i)
        if first_seen[s] >= 0:
            p1 = first_seen[s]
            break
        first_seen[s] = len(s_hist) - 1
    p2 = len(s_hist) - 1
    return PowerSequence(w, tuple(s_hist), tuple(i_hist), p1, p2 - p1, i - i_hist[p1])


def min_power_for_k(w: Word, k: BigCount, alphabet: Alphabet | None = None) -> BigCount:
    """Least l such that w^l is k-universal."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 0
    return power_sequence(w, alphabet).first_reaching(k)


def iota_of_power(w: Word, s: BigCount, alphabet: Alphabet | None = None) -> BigCount:
    """iota(w^s), cross-checked against the closed forms where they apply."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    seq = power_sequence(w, alphabet)
    value = seq.iota_at(s)
    base = iota(w, alphabet)
    z = zeta(w, alphabet)
    need, _ = sigma_of(w, alphabet)
    if s > 0 and z == base + 1:
        check(value == s * base + s - 1, f"iota(w^{s}) = {value}, expected s*k + s - 1")
    if s > 0 and need == 2:
        expected = s * base + s - 1 if z == base + 1 else s * base
        check(value == expected, f"binary closed form gives {expected}, cursor gives {value}")
    return value


def spectra_stable_under_square(w: Word, k: int, alphabet: Alphabet | None = None) -> bool:
    """Whether the k-spectra of w^n stop growing; equivalent to iota(w) >= k."""
    return iota(w, alphabet) >= k


def _sigma_letters(w: Word, alphabet: Alphabet | None) -> frozenset[int]:
    if alphabet is None:
        return w.alph
    return frozenset(range(1, alphabet.size + 1))


def palindrome_iota(w: Word, alphabet: Alphabet | None = None) -> int:
    """iota of a palindrome from its first half.

    With u the first floor(n/2) letters and k = iota(u): even length gives
    2k; odd length gives 2k + 1 when the middle letter and the rest of u
    together cover Sigma, else 2k.
    """
    if not is_palindrome(w):
        raise WordError(f"{w.to_text()!r} is not a palindrome")
    need, cap = sigma_of(w, alphabet)
    n = len(w)
    half = factorize_within(w.factor(1, n // 2), need, cap)
    k = half.iota
    if n % 2 == 0:
        value = 2 * k
    else:
        covered = half.rest().alph | {w[n // 2]}
        value = 2 * k + 1 if covered == _sigma_letters(w, alphabet) else 2 * k
    check(value == iota(w, alphabet), f"palindrome rule gives {value}, arch count disagrees")
    return value


def check_wwR_universality(w: Word, k: int) -> bool:
    """Whether w is k-universal (over alph(w)), decided two ways that must agree.

    One side counts arches; the other compares normal forms of w and w w^R.
    The empty word has an empty alphabet and is vacuously k-universal.
    """
    left = len(w) == 0 or iota(w) >= k
    right = equiv_k(w, concat(w, reverse(w)), k)
    check(left == right, f"iota(w) >= {k} is {left} but w ~_k w w^R is {right}")
    return left


@dataclass(frozen=True)
class PermutationDouble:
    """iota(w pi(w)) with the facts used to derive it."""

    iota: int
    iota_w: int
    rests_cover: bool


def permutation_double_iota(
    w: Word, pi: MorphicPermutation, alphabet: Alphabet | None = None
) -> PermutationDouble:
    """iota(w pi(w)) as 2 iota(w), plus one iff r(w) and r(pi(w)^R) together cover Sigma.

    Sigma is the domain of ``pi`` unless an alphabet of the same size is given.
    """
    if alphabet is None:
        alphabet = Alphabet(pi.size)
    elif alphabet.size != pi.size:
        raise WordError(f"permutation on {pi.size} letters, alphabet has {alphabet.size}")
    need, cap = sigma_of(w, alphabet)
    image = apply_permutation(pi, w)
    fw = factorize_within(w, need, cap)
    fpi = factorize_within(image, need, cap)
    check(fw.arch_ends == fpi.arch_ends, "pi must map arches of w onto arches of pi(w)")
    fr = factorize_within(reverse(image), need, cap)
    rests_cover = len(fw.rest().alph | fr.rest().alph) == need
    base = fw.iota
    value = 2 * base + 1 if rests_cover else 2 * base
    direct = factorize_within(concat(w, image), need, cap).iota
    check(direct == value, f"rest rule gives {value}, direct count gives {direct}")
    check(2 * base <= direct <= 2 * base + 1, "iota(w pi(w)) outside [2k, 2k+1]")
    return PermutationDouble(value, base, rests_cover)
