"""Exact small-integer combinatorics and k-subset bitset encodings.

Sets are subsets of ``[n] = {1, ..., n}`` stored as Python ints: element ``e``
lives at bit ``e - 1``.  For two sets the colex order is then plain integer
order of the bitsets, which is what makes ``sorted(bits)`` the canonical
ordering everywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ComparisonError, InputError, RangeError

MAX_N = 62
BINOM_MAX = 64


def _pascal(size: int) -> list[list[int]]:
    rows = [[1]]
    for a in range(1, size + 1):
        prev = rows[-1]
        rows.append([1] + [prev[b - 1] + prev[b] for b in range(1, a)] + [1])
    return rows


_BINOM = _pascal(BINOM_MAX)


def binom(a: int, b: int) -> int:
    """Return C(a, b) for ``0 <= a <= 64``; zero when ``b < 0`` or ``b > a``."""
    if not 0 <= a <= BINOM_MAX:
        raise RangeError(f"binom: a={a} outside [0, {BINOM_MAX}]")
    if b < 0 or b > a:
        return 0
    return _BINOM[a][b]


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise RangeError(f"ground set size n={n} outside [1, {MAX_N}]")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bits_of(elements: Iterable[int], n: int) -> int:
    """Encode 1-based ``elements`` of ``[n]`` as a bitset."""
    bits = 0
    for e in elements:
        if not isinstance(e, int) or not 1 <= e <= n:
            raise InputError(f"element {e!r} not in [1, {n}]")
        if bits >> (e - 1) & 1:
            raise InputError(f"duplicate element {e}")
        bits |= 1 << (e - 1)
    return bits


def elements_of(bits: int) -> tuple[int, ...]:
    """Decode a bitset into its ascending 1-based elements."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length())
        bits ^= low
    return tuple(out)


def min_element(bits: int) -> int:
    return (bits & -bits).bit_length()


def max_element(bits: int) -> int:
    return bits.bit_length()


@dataclass(frozen=True)
class KSet:
    """A subset of ``[n]`` stored as a bitset; ``k`` is its size."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise InputError(f"bitset {self.bits:#x} has support outside [1, {self.n}]")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "KSet":
        _check_n(n)
        return cls(bits_of(elements, n), n)

    @property
    def k(self) -> int:
        return self.bits.bit_count()

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.k

    def __contains__(self, e: object) -> bool:
        return isinstance(e, int) and 1 <= e <= self.n and bool(self.bits >> (e - 1) & 1)

    def __lt__(self, other: "KSet") -> bool:
        return colex_less(self, other)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def _diff_pair(a: KSet, b: KSet) -> tuple[int, int]:
    if a.n != b.n:
        raise InputError(f"sets live on different ground sets ({a.n} vs {b.n})")
    if a.bits == b.bits:
        raise ComparisonError("strict order is undefined on equal sets")
    return a.bits & ~b.bits, b.bits & ~a.bits


def lex_less(a: KSet, b: KSet) -> bool:
    """``min(A \\ B) < min(B \\ A)``; the empty difference counts as +infinity."""
    only_a, only_b = _diff_pair(a, b)
    if not only_a:
        return False
    if not only_b:
        return True
    return min_element(only_a) < min_element(only_b)


def colex_less(a: KSet, b: KSet) -> bool:
    """``max(A \\ B) < max(B \\ A)``; equivalent to integer order of the bitsets."""
    only_a, only_b = _diff_pair(a, b)
    return max_element(only_a) < max_element(only_b)


def colex_rank_bits(bits: int) -> int:
    rank = 0
    for j, e in enumerate(elements_of(bits)):
        rank += binom(e - 1, j + 1)
    return rank


def colex_rank(a: KSet) -> int:
    """Position of ``a`` among the k-subsets of ``[n]`` in colex order (0-based)."""
    return colex_rank_bits(a.bits)


def colex_unrank_bits(r: int, k: int, n: int) -> int:
    _check_n(n)
    if not 0 <= k <= n:
        raise RangeError(f"k={k} outside [0, {n}]")
    total = binom(n, k)
    if not 0 <= r < total:
        raise RangeError(f"rank {r} outside [0, {total})")
    bits = 0
    c = n
    for j in range(k, 0, -1):
        # largest c with C(c, j) <= r
        c -= 1
        while binom(c, j) > r:
            c -= 1
        r -= binom(c, j)
        bits |= 1 << c
    return bits


def colex_unrank(r: int, k: int, n: int) -> KSet:
    """Inverse of :func:`colex_rank` on the k-subsets of ``[n]``."""
    return KSet(colex_unrank_bits(r, k, n), n)


def enumerate_bits(n: int, k: int) -> Iterator[int]:
    """Yield every k-subset of ``[n]`` as a bitset, in colex (= integer) order."""
    if not 0 <= n <= MAX_N:
        raise RangeError(f"n={n} outside [0, {MAX_N}]")
    if not 0 <= k <= n:
        raise RangeError(f"k={k} outside [0, {n}]")
    if k == 0:
        yield 0
        return
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        # Gosper's hack: next integer with the same popcount
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def enumerate_ksets(n: int, k: int) -> Iterator[KSet]:
    """Yield the C(n, k) k-subsets of ``[n]`` in strictly increasing colex order."""
    _check_n(n)
    for bits in enumerate_bits(n, k):
        yield KSet(bits, n)
