"""Acceptance criteria, one test each, with exact values and wall-clock limits.

Run ``python3 tests/test_acceptance.py`` for a standalone PASS/FAIL listing;
under pytest the same lines are printed in the terminal summary.
"""

from __future__ import annotations

import random
import sys
import time
from functools import wraps
from itertools import combinations
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from intfam.combinatorics import enumerate_bits  # noqa: E402
from intfam.constructions import (  # noqa: E402
    example_5_1,
    example_5_2,
    example_5_3,
    frankl_wang_l,
    hilton_milner,
    odd_k_majority,
)
from intfam.family import SetFamily, degree_profile, is_intersecting  # noqa: E402
from intfam.search import build_intersection_graph, enumerate_maximal_families  # noqa: E402
from intfam.shadow import kk_lower_bound, shadow  # noqa: E402
from intfam.sweeps import SUITES  # noqa: E402
from intfam.verifiers import vandermonde_identity  # noqa: E402

SEED = 20251015
RESULTS: list[str] = []


def criterion(number: int, title: str, limit: float):
    def wrap(fn):
        @wraps(fn)
        def test():
            start = time.perf_counter()
            try:
                fn()
            except BaseException as exc:
                elapsed = time.perf_counter() - start
                RESULTS.append(f"FAIL {number:>2} {title} ({elapsed:.2f} s): {exc}")
                raise
            elapsed = time.perf_counter() - start
            ok = elapsed < limit
            RESULTS.append(f"{'PASS' if ok else 'FAIL'} {number:>2} {title} ({elapsed:.2f} s, limit {limit:g} s)")
            assert ok, f"took {elapsed:.2f} s, limit {limit} s"
        test.criterion = number
        return test
    return wrap


@criterion(1, "k=4 n=10 design family beats C(8,2) at d6", 1)
def test_design_family_k4():
    f = example_5_1()
    assert len(f) == 55
    assert is_intersecting(f)
    d6 = degree_profile(f).d(6)
    assert (d6, comb(8, 2)) == (30, 28) and d6 > 28


@criterion(2, "Fano family k=5 n=12 beats C(10,3) at d7", 1)
def test_fano_family_k5():
    f = example_5_2()
    assert is_intersecting(f)
    d7 = degree_profile(f).d(7)
    assert (d7, comb(10, 3)) == (125, 120)


@criterion(3, "k=7 n=16 family beats C(14,5) at d9", 5)
def test_design_family_k7():
    f = example_5_3()
    assert is_intersecting(f)
    d9 = degree_profile(f).d(9)
    assert d9 == 2023, f"construction gives d9 = {d9}, expected 2023 (C(14,5) = {comb(14, 5)})"
    assert d9 > comb(14, 5) == 2002


@criterion(4, "Hilton-Milner and Frankl-Wang degree formulas, n <= 14", 10)
def test_hilton_milner_frankl_wang_formulas():
    checked = 0
    for k in range(2, 7):
        for n in range(2 * k + 1, 15):
            p = degree_profile(hilton_milner(n, k))
            assert p.d(1) == oracles.hilton_milner_d1(n, k), (n, k)
            for j in range(2, k + 2):
                assert p.d(j) == oracles.hilton_milner_d2(n, k), (n, k, j)
            for ell in range(2, k + 2):
                d = degree_profile(frankl_wang_l(n, k, ell)).d(ell + 1)
                assert d == oracles.frankl_wang_d(n, k, ell), (n, k, ell, d)
                checked += 1
    assert checked == 100


@criterion(5, "exhaustive (7,3): max d7 <= C(5,1)", 60)
def test_exhaustive_7_3():
    report = enumerate_maximal_families(build_intersection_graph(7, 3), threads=1)
    assert report.families_enumerated > 0
    assert report.max_d(7) <= comb(5, 1) == 5


@criterion(6, "odd-k majority: d5 = 6 > 5 at n = 7", 1)
def test_odd_k_sharpness():
    f = odd_k_majority(3)
    assert f.n == 7 and is_intersecting(f)
    assert degree_profile(f).d(5) == 6 > comb(5, 1)


@criterion(7, "Kruskal-Katona at n=6, k=3", 30)
def test_kruskal_katona():
    universe = list(enumerate_bits(6, 3))
    assert len(universe) == 20
    violations = []
    for m in range(5):
        bound = kk_lower_bound(3, m, 6)
        for sets in combinations(universe, m):
            if len(shadow(SetFamily(6, 3, sets))) < bound:
                violations.append(sets)
    rng = random.Random(SEED)
    for m in range(5, 13):
        bound = kk_lower_bound(3, m, 6)
        for _ in range(10_000):
            sets = rng.sample(universe, m)
            if len(shadow(SetFamily(6, 3, sets))) < bound:
                violations.append(sets)
    assert violations == []


@criterion(8, "Vandermonde sum for 2 <= k <= 8, 2k+1 <= n <= 30", 1)
def test_vandermonde():
    for k in range(2, 9):
        for n in range(2 * k + 1, 31):
            assert vandermonde_identity(n, k)
            assert oracles.vandermonde_lhs(n, k) == comb(n - 2, k - 2), (n, k)


@criterion(9, "shifting property suite, 1000 instances", 60)
def test_shifting_suite():
    assert SUITES["shifting"](random.Random(SEED), 1000) == []


@criterion(10, "shifted-family lemma sweeps", 120)
def test_lemma_sweeps():
    assert SUITES["lemmas"](random.Random(SEED), 2000) == []


@criterion(11, "clique search matches brute force at (5,2)", 1)
def test_search_oracle_5_2():
    seen = []
    report = enumerate_maximal_families(build_intersection_graph(5, 2), threads=1,
                                        visitor=lambda fid, f: seen.append(f))
    expected = oracles.maximal_intersecting_families(5, 2)
    got = {frozenset(frozenset(s) for s in f.sets()) for f in seen}
    assert report.families_enumerated == len(seen) == len(expected)
    assert got == expected


def main() -> int:
    tests = sorted((v for v in globals().values() if hasattr(v, "criterion")),
                   key=lambda t: t.criterion)
    for test in tests:
        try:
            test()
        except BaseException:
            pass
    for line in RESULTS:
        print(line)
    return 0 if all(line.startswith("PASS") for line in RESULTS) else 1


if __name__ == "__main__":
    sys.exit(main())
