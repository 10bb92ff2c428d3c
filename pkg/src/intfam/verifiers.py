"""Degree-bound verdicts and lemma checkers for concrete families.

Every checker returns a record instead of raising when a hypothesis does not
hold; only malformed inputs raise.  Degree indices ``d_j`` always refer to the
j-th entry of the non-increasing degree sequence.

The "sufficiently large k" theorems (the ``d_{k+2}`` and ``d_{l+1}`` bounds)
cannot be confirmed at desk scale.  Their checkers always compute the
comparison and record whether the linear range ``n > C k`` held; a failure on
a small instance is not a counterexample.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from .combinatorics import binom, elements_of, full_mask
from .errors import InputError, RangeError
from .family import (
    SetFamily,
    TraceFamily,
    are_cross_t_intersecting,
    bits_intersecting,
    degree_profile,
    is_intersecting,
    mdegree,
    trace,
    trace_counts,
    trace_is_intersecting,
    upward_closure,
)
from .shifting import is_l_shifted


@dataclass
class BoundVerdict:
    bound_name: str
    lhs: int | None
    rhs: int | None
    holds: bool | None
    hypothesis_met: bool
    relation: str = "<="
    witness: Any = None
    params: dict[str, Any] = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _degree_bound(name: str, family: SetFamily, index: int, rhs: int,
                  hypothesis_met: bool, params: dict[str, Any], note: str = "",
                  always_compare: bool = False) -> BoundVerdict:
    params = {"n": family.n, "k": family.k, **params}
    if index > family.n:
        return BoundVerdict(name, None, rhs, None, False, params=params,
                            note=f"index {index} exceeds n={family.n}")
    if not hypothesis_met and not always_compare:
        return BoundVerdict(name, None, rhs, None, False, params=params, note=note or "hypothesis not met")
    profile = degree_profile(family)
    lhs = profile.d(index)
    return BoundVerdict(name, lhs, rhs, lhs <= rhs, hypothesis_met,
                        witness=profile.witness(index), params={**params, "index": index}, note=note)


def check_thm_huang_zhao(family: SetFamily) -> BoundVerdict:
    """Minimum degree at most C(n-2, k-2) when ``n > 2k``."""
    n, k = family.n, family.k
    hyp = n > 2 * k and k >= 1 and is_intersecting(family)
    return _degree_bound("hz", family, n, binom(n - 2, k - 2) if n >= 2 else 0, hyp, {})


def check_thm_2k1(family: SetFamily) -> BoundVerdict:
    """``d_{2k+1} <= C(n-2, k-2)`` when ``n >= 2k+1``."""
    n, k = family.n, family.k
    hyp = n >= 2 * k + 1 and k >= 1 and is_intersecting(family)
    return _degree_bound("thm2k1", family, 2 * k + 1, binom(n - 2, k - 2), hyp, {})


def check_thm_k2(family: SetFamily, c: float = 12) -> BoundVerdict:
    """``d_{k+2} <= C(n-2, k-2)``; ``hypothesis_met`` records ``n > 12k``."""
    n, k = family.n, family.k
    hyp = n > c * k and is_intersecting(family)
    return _degree_bound("thmk2", family, k + 2, binom(n - 2, k - 2), hyp, {"C": c},
                         note="large-k theorem: comparison only", always_compare=True)


def default_c_eps(eps: float) -> float:
    return 3 ** (2 + 2 / eps)


def check_thm_l1(family: SetFamily, ell: int, eps: float | None = None,
                 c_eps: float | None = None) -> BoundVerdict:
    """``d_{l+1} <= C(n-2, k-2) + C(n-l-1, k-l)``.

    ``eps`` defaults to ``ell / k``; ``c_eps`` to ``3 ** (2 + 2 / eps)``.
    """
    n, k = family.n, family.k
    if not 1 <= ell <= n - 1:
        raise RangeError(f"ell={ell} outside [1, {n - 1}]")
    eps = ell / k if eps is None else eps
    c_eps = default_c_eps(eps) if c_eps is None else c_eps
    hyp = eps * k <= ell <= k + 1 and n > c_eps * k and is_intersecting(family)
    rhs = binom(n - 2, k - 2) + binom(n - ell - 1, k - ell)
    return _degree_bound("thml1", family, ell + 1, rhs, hyp,
                         {"l": ell, "eps": eps, "C_eps": c_eps},
                         note="large-k theorem: comparison only", always_compare=True)


# --- lemma checkers on shifted families ------------------------------------


def check_lemma_2_10(family: SetFamily, ell: int) -> BoundVerdict:
    """Upward closure (a), intersecting trace for ``ell >= 2k`` (b), and the
    pair inequality (c) on an ``ell``-shifted intersecting family.

    ``lhs`` counts violations across all three parts.
    """
    n, k = family.n, family.k
    params = {"n": n, "k": k, "l": ell}
    if not (1 <= ell <= n and is_intersecting(family) and is_l_shifted(family, ell)):
        return BoundVerdict("lemma2.10", None, 0, None, False, params=params,
                            note="needs an l-shifted intersecting family")
    problems: list[str] = []
    g = trace(family, ell)
    present = set(g.bits)
    for a in g.bits:
        if a.bit_count() >= k:
            continue
        for j in range(ell):
            if not a >> j & 1 and (a | 1 << j) not in present:
                problems.append(f"(a) {elements_of(a)} + {j + 1} missing from trace")
    if ell >= 2 * k and not trace_is_intersecting(g):
        problems.append("(b) trace is not intersecting")
    mask = full_mask(ell)
    bits = family.bits
    for x in range(len(bits)):
        a = bits[x]
        for y in range(x, len(bits)):
            b = bits[y]
            if a & b & mask == 0:
                total = (a & mask).bit_count() + (b & mask).bit_count() + (a & b).bit_count()
                if total < ell + 1:
                    problems.append(f"(c) {elements_of(a)}, {elements_of(b)}: {total} < {ell + 1}")
    return BoundVerdict("lemma2.10", len(problems), 0, not problems, True,
                        witness=problems[:5] or None, params=params)


@dataclass
class LowDegreeResult:
    element: int | None
    per_m: list[dict[str, int | bool]]
    hypothesis_met: bool
    note: str = ""

    @property
    def holds(self) -> bool | None:
        if not self.hypothesis_met:
            return None
        return self.element is not None


def low_degree_element(g: TraceFamily, n_eff: int, k: int) -> LowDegreeResult:
    """Find an element ``i`` of ``[n_eff]`` with ``d_i^(m) <= C(n_eff-2, m-2)`` for all ``m <= k``.

    m-degrees are taken in the upward closure of ``g`` inside ``[n_eff]``, which
    bounds the m-degrees of ``g`` itself.  Returns the first such element.
    """
    hyp = n_eff > 2 * k and g.width <= n_eff and trace_is_intersecting(g)
    if not hyp:
        return LowDegreeResult(None, [], False, "needs an intersecting family with n_eff > 2k")
    closure = upward_closure(g, n_eff)
    last: list[dict[str, int | bool]] = []
    for i in range(1, n_eff + 1):
        rows = []
        for m in range(1, k + 1):
            value = mdegree(closure, i, m)
            bound = binom(n_eff - 2, m - 2)
            rows.append({"m": m, "value": value, "bound": bound, "holds": value <= bound})
        if all(r["holds"] for r in rows):
            return LowDegreeResult(i, rows, True)
        last = rows
    return LowDegreeResult(None, last, True, "no element satisfies every m-degree bound")


def check_lemma_3_2(family: SetFamily, ell: int | None = None) -> BoundVerdict:
    """Run :func:`low_degree_element` on the trace of ``family`` on ``[ell]``
    (default ``ell = 2k + 1``, the role it plays for the ``d_{2k+1}`` bound)."""
    n, k = family.n, family.k
    ell = 2 * k + 1 if ell is None else ell
    params = {"n": n, "k": k, "l": ell}
    if not 1 <= ell <= n:
        return BoundVerdict("lemma3.2", None, None, None, False, params=params, note="needs l <= n")
    res = low_degree_element(trace(family, ell), ell, k)
    return BoundVerdict("lemma3.2", None, None, res.holds, res.hypothesis_met, relation="exists",
                        witness={"element": res.element, "per_m": res.per_m}, params=params,
                        note=res.note)


def check_cross_size(a: SetFamily, b: SetFamily, t: int = 1) -> tuple[BoundVerdict, BoundVerdict]:
    """``|A| <= 2^b C(n-b, a-t)`` and ``|B| <= 2^a C(n-a, b-t)`` for cross-t-intersecting A, B."""
    if a.n != b.n:
        raise InputError(f"families on different ground sets ({a.n} vs {b.n})")
    n, ka, kb = a.n, a.k, b.k
    params = {"n": n, "a": ka, "b": kb, "t": t}
    hyp = (n > 3 * max(ka, kb) and len(a) > 0 and len(b) > 0
           and are_cross_t_intersecting(a, b, t))
    rhs_a = 2 ** kb * binom(n - kb, ka - t)
    rhs_b = 2 ** ka * binom(n - ka, kb - t)
    if not hyp:
        note = "needs non-empty cross-t-intersecting families with n > 3 max(a, b)"
        return (BoundVerdict("lemma4.1:A", len(a), rhs_a, None, False, params=params, note=note),
                BoundVerdict("lemma4.1:B", len(b), rhs_b, None, False, params=params, note=note))
    return (BoundVerdict("lemma4.1:A", len(a), rhs_a, len(a) <= rhs_a, True, params=params),
            BoundVerdict("lemma4.1:B", len(b), rhs_b, len(b) <= rhs_b, True, params=params))


def lemma_4_2_bound(n: int, k: int, ell: int, other_size: int) -> int:
    """``2^(k-s) C(n-l-k+s, k-l+s-1)`` with ``s`` the size of the other subset."""
    return 2 ** (k - other_size) * binom(n - ell - k + other_size, k - ell + other_size - 1)


def _shifted_hypothesis(family: SetFamily, ell: int) -> bool:
    n, k = family.n, family.k
    return 1 <= ell <= n and n >= 4 * k + ell and is_intersecting(family) and is_l_shifted(family, ell)


@dataclass
class DichotomyVerdict:
    hypothesis_met: bool
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    d1: int | None = None
    bound1: int | None = None
    d2: int | None = None
    bound2: int | None = None
    branch: int | None = None

    @property
    def holds(self) -> bool | None:
        if not self.hypothesis_met:
            return None
        return self.branch is not None


def _dichotomy(counts: dict[int, int], n: int, k: int, ell: int, s1: int, s2: int) -> DichotomyVerdict:
    d1, d2 = counts.get(s1, 0), counts.get(s2, 0)
    b1 = lemma_4_2_bound(n, k, ell, s2.bit_count())
    b2 = lemma_4_2_bound(n, k, ell, s1.bit_count())
    branch = 1 if d1 <= b1 else 2 if d2 <= b2 else None
    return DichotomyVerdict(True, elements_of(s1), elements_of(s2), d1, b1, d2, b2, branch)


def check_lemma_4_2(family: SetFamily, ell: int, s1, s2) -> DichotomyVerdict:
    """Either ``d_S1`` or ``d_S2`` obeys its bound, for disjoint ``S1, S2 <= [ell]``."""
    n, k = family.n, family.k
    b1 = s1 if isinstance(s1, int) else sum(1 << (e - 1) for e in s1)
    b2 = s2 if isinstance(s2, int) else sum(1 << (e - 1) for e in s2)
    mask = full_mask(ell)
    if b1 & ~mask or b2 & ~mask or b1 & b2 or not _shifted_hypothesis(family, ell):
        return DichotomyVerdict(False, elements_of(b1), elements_of(b2))
    return _dichotomy(trace_counts(family, ell), n, k, ell, b1, b2)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def check_lemma_4_2_all(family: SetFamily, ell: int) -> BoundVerdict:
    """The dichotomy over every ordered pair of disjoint subsets of ``[ell]``."""
    n, k = family.n, family.k
    params = {"n": n, "k": k, "l": ell}
    if not _shifted_hypothesis(family, ell):
        return BoundVerdict("lemma4.2", None, 0, None, False, params=params,
                            note="needs an l-shifted intersecting family with n >= 4k + l")
    counts = trace_counts(family, ell)
    failures = []
    pairs = 0
    for s1, s2 in pairs_of_disjoint(ell):
        pairs += 1
        v = _dichotomy(counts, n, k, ell, s1, s2)
        if v.branch is None:
            failures.append((v.s1, v.s2, v.d1, v.bound1, v.d2, v.bound2))
    return BoundVerdict("lemma4.2", len(failures), 0, not failures, True,
                        witness=failures[:5] or None, params={**params, "pairs": pairs})


def cor_4_3_threshold(n: int, k: int, ell: int) -> int:
    m = (ell - 1) // 2
    return 2 ** (k - m) * binom(n - k - ell + m, k - ell + m)


def f_sequence(n: int, k: int, ell: int, upto: int) -> list[int]:
    """``f(j) = 2^(k-j) C(n-k-l+j, k-l+j-1)`` for ``j = 0..upto``."""
    return [2 ** (k - j) * binom(n - k - ell + j, k - ell + j - 1) for j in range(upto + 1)]


def check_cor_4_3(family: SetFamily, ell: int) -> BoundVerdict:
    """Small trace-subsets of large degree form an intersecting family.

    Also checks that ``f`` is non-decreasing on ``0..m+1``.  When
    ``k - l + m < 0`` the threshold collapses to zero and the statement
    degenerates, so that range is reported as hypothesis-not-met.
    """
    n, k = family.n, family.k
    m = (ell - 1) // 2
    params = {"n": n, "k": k, "l": ell, "m": m}
    if not _shifted_hypothesis(family, ell):
        return BoundVerdict("cor4.3", None, None, None, False, params=params,
                            note="needs an l-shifted intersecting family with n >= 4k + l")
    if k - ell + m < 0:
        return BoundVerdict("cor4.3", None, None, None, False, params=params,
                            note="k - l + m < 0: zero threshold, statement degenerate")
    threshold = cor_4_3_threshold(n, k, ell)
    counts = trace_counts(family, ell)
    g = TraceFamily(ell, tuple(sorted(s for s, d in counts.items()
                                      if s.bit_count() <= m and d >= threshold)))
    f = f_sequence(n, k, ell, m + 1)
    monotone = all(a <= b for a, b in zip(f, f[1:]))
    intersecting = bits_intersecting(g.bits)
    return BoundVerdict("cor4.3", len(g), threshold, intersecting and monotone, True,
                        relation="intersecting",
                        witness={"G": g.sets(), "f": f, "f_monotone": monotone,
                                 "G_intersecting": intersecting},
                        params=params)


def vandermonde_identity(n: int, k: int) -> bool:
    """``sum_{m=1..k} C(2k-1, m-2) C(n-2k-1, k-m) == C(n-2, k-2)``."""
    if n < 2 * k + 1:
        raise RangeError(f"identity needs n >= 2k+1 (got n={n}, k={k})")
    lhs = sum(binom(2 * k - 1, m - 2) * binom(n - 2 * k - 1, k - m) for m in range(1, k + 1))
    return lhs == binom(n - 2, k - 2)


def vandermonde_sweep(n_max: int, k_max: int, k_min: int = 2) -> list[tuple[int, int]]:
    """Return the ``(n, k)`` pairs where the identity fails (empty when it always holds)."""
    return [(n, k) for k in range(k_min, k_max + 1)
            for n in range(2 * k + 1, n_max + 1) if not vandermonde_identity(n, k)]


CHECKS = ("hz", "thm2k1", "thmk2", "thml1", "lemma2.10", "lemma3.2",
          "lemma4.1", "lemma4.2", "cor4.3", "cor2.7")


def pairs_of_disjoint(ell: int):
    """All ordered pairs of disjoint subsets of ``[ell]`` as bitsets."""
    full = full_mask(ell)
    for s1 in range(1 << ell):
        for s2 in _submasks(full & ~s1):
            yield s1, s2

