"""Slow, obviously-correct reference implementations.

Nothing here imports the package: sets are frozensets of 1-based ints and
every routine is a direct transcription of a definition.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import comb


def ksets(n: int, k: int) -> list[frozenset]:
    return [frozenset(c) for c in combinations(range(1, n + 1), k)]


def colex_key(s) -> tuple:
    # same-size sets: colex compares largest elements first
    return tuple(sorted(s, reverse=True))


def colex_less(a, b) -> bool:
    diff = set(a) ^ set(b)
    return max(diff) in set(b)


def lex_less(a, b) -> bool:
    diff = set(a) ^ set(b)
    return min(diff) in set(a)


def intersecting(sets, t: int = 1) -> bool:
    sets = list(sets)
    return all(len(a & b) >= t for a, b in combinations(sets, 2))


def degrees(sets, n: int) -> list[int]:
    c = Counter(e for s in sets for e in s)
    return [c[e] for e in range(1, n + 1)]


def sorted_degrees(sets, n: int) -> list[int]:
    return sorted(degrees(sets, n), reverse=True)


def shadow(sets) -> set[frozenset]:
    return {s - {x} for s in sets for x in s}


def upper_shadow(sets, n: int) -> set[frozenset]:
    return {s | {x} for s in sets for x in range(1, n + 1) if x not in s}


def min_shadow(n: int, k: int, m: int) -> int:
    return min(len(shadow(fam)) for fam in combinations(ksets(n, k), m))


def shift(sets, i: int, j: int) -> set[frozenset]:
    fam = set(sets)
    out = set()
    for a in fam:
        b = (a - {i}) | {j}
        if i in a and j not in a and b not in fam:
            out.add(b)
        else:
            out.add(a)
    return out


def is_l_shifted(sets, n: int, ell: int) -> bool:
    fam = set(sets)
    return all(shift(fam, i, j) == fam for j in range(1, ell + 1) for i in range(ell + 1, n + 1))


def maximal_intersecting_families(n: int, k: int) -> set[frozenset]:
    """Filter every subset of C([n],k) for maximal intersecting families."""
    verts = ksets(n, k)
    adj = [[bool(a & b) for b in verts] for a in verts]
    out = set()
    for mask in range(1, 1 << len(verts)):
        members = [v for v in range(len(verts)) if mask >> v & 1]
        if not all(adj[x][y] for x, y in combinations(members, 2)):
            continue
        if any(v not in members and all(adj[v][u] for u in members) for v in range(len(verts))):
            continue
        out.add(frozenset(verts[v] for v in members))
    return out


def hilton_milner_d1(n: int, k: int) -> int:
    return comb(n - 1, k - 1) - comb(n - k - 1, k - 1)


def hilton_milner_d2(n: int, k: int) -> int:
    return comb(n - 2, k - 2) + 1


def frankl_wang_d(n: int, k: int, ell: int) -> int:
    return comb(n - 2, k - 2) + (comb(n - ell - 1, k - ell) if k >= ell else 0)


def vandermonde_lhs(n: int, k: int) -> int:
    def c(a, b):
        return comb(a, b) if 0 <= b <= a else 0
    return sum(c(2 * k - 1, m - 2) * c(n - 2 * k - 1, k - m) for m in range(1, k + 1))
