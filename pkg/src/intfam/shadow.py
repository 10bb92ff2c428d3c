"""Shadows, upper shadows, colex initial segments and Kruskal-Katona bounds."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .combinatorics import binom, enumerate_bits, full_mask
from .errors import InputError, RangeError
from .family import SetFamily


def shadow(family: SetFamily) -> SetFamily:
    """All one-element deletions of members, as a (k-1)-uniform family."""
    if family.k == 0:
        raise InputError("shadow of a 0-uniform family is undefined")
    out = set()
    for b in family.bits:
        rest = b
        while rest:
            low = rest & -rest
            out.add(b ^ low)
            rest ^= low
    return SetFamily(family.n, family.k - 1, out)


def upper_shadow(family: SetFamily) -> SetFamily:
    """All one-element additions of members inside ``[n]``."""
    if family.k >= family.n:
        raise InputError("upper shadow needs k < n")
    mask = full_mask(family.n)
    out = set()
    for b in family.bits:
        rest = mask & ~b
        while rest:
            low = rest & -rest
            out.add(b | low)
            rest ^= low
    return SetFamily(family.n, family.k + 1, out)


@dataclass(frozen=True)
class ColexSegment:
    k: int
    m: int
    realized: SetFamily


def colex_segment(k: int, m: int, n: int) -> ColexSegment:
    """The first ``m`` k-subsets of ``[n]`` in colex order."""
    if not 0 <= k <= n:
        raise RangeError(f"k={k} outside [0, {n}]")
    total = binom(n, k)
    if not 0 <= m <= total:
        raise RangeError(f"segment size m={m} outside [0, {total}]")
    return ColexSegment(k, m, SetFamily(n, k, islice(enumerate_bits(n, k), m)))


def kk_lower_bound(k: int, m: int, n: int) -> int:
    """Smallest possible shadow of an m-member k-uniform family on ``[n]``."""
    if k == 0:
        raise InputError("shadow of a 0-uniform family is undefined")
    return len(shadow(colex_segment(k, m, n).realized))


@dataclass(frozen=True)
class UpperShadowVerdict:
    hypothesis_met: bool
    size: int
    threshold: int
    upper_shadow_size: int | None
    bound: int
    holds: bool | None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "bound_name": "cor2.7",
            "hypothesis_met": self.hypothesis_met,
            "lhs": self.upper_shadow_size,
            "rhs": self.bound,
            "relation": ">",
            "holds": self.holds,
            "params": {"size": self.size, "threshold": self.threshold},
            "note": self.note,
        }


def check_cor_2_7(family: SetFamily) -> UpperShadowVerdict:
    """If ``|F| > C(n-1, k-1)`` then the upper shadow exceeds ``C(n-1, k)``.

    The statement needs ``n >= k + 2``: at ``n = k + 1`` a family above the
    threshold is all of ``C([n], k)``, whose upper shadow is the single set
    ``[n]`` and only ties the bound.  That case is reported as
    hypothesis-not-met, with the observed sizes kept.
    """
    n, k = family.n, family.k
    threshold = binom(n - 1, k - 1)
    bound = binom(n - 1, k)
    if len(family) <= threshold:
        return UpperShadowVerdict(False, len(family), threshold, None, bound, None)
    size = len(upper_shadow(family))
    if n < k + 2:
        return UpperShadowVerdict(False, len(family), threshold, size, bound, None,
                                  note="needs n >= k + 2; at n = k + 1 the bound is only tied")
    return UpperShadowVerdict(True, len(family), threshold, size, bound, size > bound)
