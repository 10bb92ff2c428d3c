"""Uniform set families and their analytics.

A :class:`SetFamily` is an immutable, colex-sorted collection of k-subsets of
``[n]``.  Members are held as int bitsets (see :mod:`intfam.combinatorics`),
so most analytics here are short loops over ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .combinatorics import MAX_N, KSet, bits_of, elements_of, full_mask
from .errors import CapacityError, InputError, RangeError

TRACE_CLOSURE_MAX = 22

# pair counts below this are checked in pure Python
_NUMPY_PAIR_THRESHOLD = 4096
_CHUNK = 512


def _as_bits(s: object, n: int) -> int:
    if isinstance(s, KSet):
        if s.n != n:
            raise InputError(f"set lives on [{s.n}], family on [{n}]")
        return s.bits
    if isinstance(s, int):
        return s
    return bits_of(s, n)  # type: ignore[arg-type]


class SetFamily:
    """A k-uniform family on ``[n]``, sorted in colex order without duplicates."""

    __slots__ = ("n", "k", "bits", "_lookup")

    def __init__(self, n: int, k: int, bits: Iterable[int] = ()):
        if not 1 <= n <= MAX_N:
            raise RangeError(f"ground set size n={n} outside [1, {MAX_N}]")
        if not 0 <= k <= n:
            raise RangeError(f"uniformity k={k} outside [0, {n}]")
        members = sorted(set(bits))
        limit = 1 << n
        for b in members:
            if not 0 <= b < limit:
                raise InputError(f"member {elements_of(b)} not inside [1, {n}]")
            if b.bit_count() != k:
                raise InputError(f"member {elements_of(b)} has size {b.bit_count()}, expected {k}")
        self.n = n
        self.k = k
        self.bits: tuple[int, ...] = tuple(members)
        self._lookup: frozenset[int] | None = None

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(n, k, (_as_bits(s, n) for s in sets))

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[KSet]:
        return (KSet(b, self.n) for b in self.bits)

    def __contains__(self, item: object) -> bool:
        try:
            b = _as_bits(item, self.n)
        except InputError:
            return False
        return b in self.lookup

    @property
    def lookup(self) -> frozenset[int]:
        if self._lookup is None:
            self._lookup = frozenset(self.bits)
        return self._lookup

    def sets(self) -> list[tuple[int, ...]]:
        """Members as ascending element tuples, in colex order."""
        return [elements_of(b) for b in self.bits]

    def with_bits(self, bits: Iterable[int]) -> "SetFamily":
        return SetFamily(self.n, self.k, bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return (self.n, self.k, self.bits) == (other.n, other.k, other.bits)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.bits))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.sets()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"SetFamily(n={self.n}, k={self.k}, size={len(self)}: [{body}{more}])"


@dataclass(frozen=True)
class TraceFamily:
    """A non-uniform family of subsets of ``[width]``; ``bits`` sorted, unique."""

    width: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.width <= MAX_N:
            raise RangeError(f"trace width {self.width} outside [0, {MAX_N}]")
        limit = 1 << self.width
        for b in self.bits:
            if not 0 <= b < limit:
                raise InputError(f"trace member {elements_of(b)} not inside [1, {self.width}]")

    @classmethod
    def of(cls, width: int, sets: Iterable[Iterable[int] | int]) -> "TraceFamily":
        out = set()
        for s in sets:
            out.add(s if isinstance(s, int) else bits_of(s, max(width, 1)))
        return cls(width, tuple(sorted(out)))

    def __len__(self) -> int:
        return len(self.bits)

    def __contains__(self, item: object) -> bool:
        b = item if isinstance(item, int) else bits_of(item, max(self.width, 1))  # type: ignore[arg-type]
        return b in set(self.bits)

    def sets(self) -> list[tuple[int, ...]]:
        return [elements_of(b) for b in self.bits]


@dataclass(frozen=True)
class DegreeProfile:
    """Per-element degrees.

    ``raw[i - 1]`` is the degree of element ``i``; ``sorted`` is the same
    multiset in non-increasing order and ``perm[j - 1]`` is the element whose
    degree sits at sorted position ``j`` (ties go to the smaller label).
    """

    raw: tuple[int, ...]
    sorted: tuple[int, ...]
    perm: tuple[int, ...]

    def degree(self, element: int) -> int:
        return self.raw[element - 1]

    def d(self, j: int) -> int:
        """The j-th largest degree (1-based)."""
        if not 1 <= j <= len(self.sorted):
            raise RangeError(f"degree index {j} outside [1, {len(self.sorted)}]")
        return self.sorted[j - 1]

    def witness(self, j: int) -> int:
        """Element realizing the j-th largest degree."""
        return self.perm[j - 1]


# --- pairwise intersection ------------------------------------------------


def _cross_ok(xs: Sequence[int], ys: Sequence[int], t: int) -> bool:
    if not xs or not ys:
        return True
    if len(xs) * len(ys) <= _NUMPY_PAIR_THRESHOLD:
        if t == 1:
            return all(a & b for a in xs for b in ys)
        return all((a & b).bit_count() >= t for a in xs for b in ys)
    a = np.fromiter(xs, dtype=np.uint64, count=len(xs))
    b = np.fromiter(ys, dtype=np.uint64, count=len(ys))
    for start in range(0, len(a), _CHUNK):
        block = a[start:start + _CHUNK, None] & b[None, :]
        if t == 1:
            if not block.all():
                return False
        elif (np.bitwise_count(block) < t).any():
            return False
    return True


def bits_intersecting(bits: Sequence[int], t: int = 1) -> bool:
    """All pairs ``A, B`` (including ``A = B``) meet in at least ``t`` elements."""
    return _cross_ok(bits, bits, t)


def is_t_intersecting(family: SetFamily, t: int = 1) -> bool:
    """Every pair of distinct members shares at least ``t`` elements."""
    if t < 1:
        raise RangeError(f"t={t} must be positive")
    if family.k < t:
        # distinct k-sets share at most k - 1 elements
        return len(family) <= 1
    return _cross_ok(family.bits, family.bits, t)


def is_intersecting(family: SetFamily) -> bool:
    return is_t_intersecting(family, 1)


def are_cross_t_intersecting(f1: SetFamily, f2: SetFamily, t: int = 1) -> bool:
    """``|A & B| >= t`` for every ``A`` in ``f1`` and ``B`` in ``f2``."""
    if f1.n != f2.n:
        raise InputError(f"families on different ground sets ({f1.n} vs {f2.n})")
    if t < 1:
        raise RangeError(f"t={t} must be positive")
    return _cross_ok(f1.bits, f2.bits, t)


def trace_is_intersecting(g: TraceFamily) -> bool:
    """Intersecting in the non-uniform sense: a member equal to the empty set fails."""
    return bits_intersecting(g.bits, 1)


# --- degrees ----------------------------------------------------------------


def raw_degrees(bits: Iterable[int], n: int) -> list[int]:
    counts = [0] * n
    for b in bits:
        while b:
            low = b & -b
            counts[low.bit_length() - 1] += 1
            b ^= low
    return counts


def profile_from_raw(raw: Sequence[int]) -> DegreeProfile:
    perm = sorted(range(1, len(raw) + 1), key=lambda i: (-raw[i - 1], i))
    return DegreeProfile(tuple(raw), tuple(raw[i - 1] for i in perm), tuple(perm))


def degree_profile(family: SetFamily) -> DegreeProfile:
    return profile_from_raw(raw_degrees(family.bits, family.n))


def mdegree(g: TraceFamily, i: int, m: int) -> int:
    """Number of ``m``-element members of ``g`` containing ``i``."""
    if not 1 <= i <= g.width:
        raise RangeError(f"element {i} outside [1, {g.width}]")
    bit = 1 << (i - 1)
    return sum(1 for b in g.bits if b & bit and b.bit_count() == m)


def trace_counts(family: SetFamily, ell: int) -> dict[int, int]:
    """Map each trace ``A & [ell]`` (as bits) to the number of members producing it."""
    mask = full_mask(ell)
    counts: dict[int, int] = {}
    for b in family.bits:
        s = b & mask
        counts[s] = counts.get(s, 0) + 1
    return counts


def subset_degree(family: SetFamily, subset: Iterable[int] | int, ell: int) -> int:
    """Count members whose trace on ``[ell]`` is exactly ``subset``."""
    if not 0 <= ell <= family.n:
        raise RangeError(f"ell={ell} outside [0, {family.n}]")
    s = subset if isinstance(subset, int) else bits_of(subset, family.n)
    mask = full_mask(ell)
    if s & ~mask:
        raise InputError(f"{elements_of(s)} is not a subset of [{ell}]")
    return sum(1 for b in family.bits if b & mask == s)


def trace(family: SetFamily, ell: int) -> TraceFamily:
    """The deduplicated traces ``{A & [ell]}``."""
    if not 1 <= ell <= family.n:
        raise RangeError(f"ell={ell} outside [1, {family.n}]")
    mask = full_mask(ell)
    return TraceFamily(ell, tuple(sorted({b & mask for b in family.bits})))


def upward_closure(g: TraceFamily, width: int | None = None) -> TraceFamily:
    """All subsets of ``[width]`` containing some member of ``g``.

    ``width`` defaults to ``g.width`` and may be larger (the closure is then
    taken inside the bigger ground set).
    """
    width = g.width if width is None else width
    if width < g.width:
        raise InputError(f"closure width {width} smaller than trace width {g.width}")
    if width > TRACE_CLOSURE_MAX:
        raise CapacityError(f"upward closure needs 2^{width} states; cap is width {TRACE_CLOSURE_MAX}")
    if not g.bits:
        return TraceFamily(width, ())
    marks = np.zeros(1 << width, dtype=bool)
    marks[list(g.bits)] = True
    for bit in range(width):
        # view index as (high, bit, low) and push marks from bit=0 to bit=1
        view = marks.reshape(-1, 2, 1 << bit)
        view[:, 1, :] |= view[:, 0, :]
    return TraceFamily(width, tuple(int(x) for x in np.flatnonzero(marks)))


def quotient(family: SetFamily, subset: Iterable[int] | int) -> SetFamily:
    """``{A \\ S : S <= A in F}`` on the same ground set (no relabeling)."""
    s = subset if isinstance(subset, int) else bits_of(subset, family.n)
    size = s.bit_count()
    if size > family.k:
        raise InputError(f"|S|={size} exceeds k={family.k}")
    return SetFamily(family.n, family.k - size, (b & ~s for b in family.bits if b & s == s))


def containment_degree(family: SetFamily, subset: Iterable[int] | int) -> int:
    """Number of members containing ``subset``."""
    s = subset if isinstance(subset, int) else bits_of(subset, family.n)
    return sum(1 for b in family.bits if b & s == s)


def complement(family: SetFamily) -> SetFamily:
    """``{[n] \\ A}``: an (n - k)-uniform family on the same ground set."""
    mask = full_mask(family.n)
    return SetFamily(family.n, family.n - family.k, (mask & ~b for b in family.bits))


def relabel(family: SetFamily, mapping: Sequence[int]) -> SetFamily:
    """Rename element ``e`` to ``mapping[e - 1]`` (a permutation of ``[n]``)."""
    n = family.n
    if sorted(mapping) != list(range(1, n + 1)):
        raise InputError("relabeling is not a permutation of [n]")
    out = []
    for b in family.bits:
        nb = 0
        for e in elements_of(b):
            nb |= 1 << (mapping[e - 1] - 1)
        out.append(nb)
    return SetFamily(n, family.k, out)
