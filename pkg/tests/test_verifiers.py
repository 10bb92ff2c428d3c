import json
import random
from math import comb

import pytest

from intfam import verifiers as V
from intfam.constructions import example_5_1, frankl_wang_l, hilton_milner, odd_k_majority, star
from intfam.errors import InputError, RangeError
from intfam.family import SetFamily, TraceFamily, mdegree, trace, upward_closure
from intfam.shifting import shift_to_fixpoint
from intfam.sweeps import seeded_intersecting

import oracles


def fam(n, k, *sets):
    return SetFamily.from_sets(n, k, sets)


class TestDegreeTheorems:
    def test_hz_examples(self):
        v = V.check_thm_huang_zhao(star(7, 3, 1))
        assert v.holds and v.lhs == v.rhs == 5
        v = V.check_thm_huang_zhao(hilton_milner(10, 4))
        assert v.holds and v.rhs == 28
        v = V.check_thm_huang_zhao(star(8, 4, 1))
        assert not v.hypothesis_met and v.holds is None

    def test_hz_non_intersecting_is_not_checked(self):
        v = V.check_thm_huang_zhao(fam(7, 3, (1, 2, 3), (4, 5, 6)))
        assert v.holds is None

    def test_2k1_examples(self):
        v = V.check_thm_2k1(odd_k_majority(3))
        assert v.holds and v.lhs <= 5
        v = V.check_thm_2k1(star(9, 4, 1))
        assert v.holds and v.lhs == v.rhs == 21
        assert V.check_thm_2k1(star(7, 4, 1)).holds is None

    def test_k2_examples(self):
        v = V.check_thm_k2(example_5_1())
        assert (v.lhs, v.rhs, v.holds, v.hypothesis_met) == (30, 28, False, False)
        for n, k in [(8, 3), (10, 4)]:
            v = V.check_thm_k2(star(n, k, 1))
            assert v.holds and v.lhs == v.rhs == comb(n - 2, k - 2)

    def test_k2_hypothesis_flag(self):
        assert V.check_thm_k2(star(40, 3, 1)).hypothesis_met
        assert not V.check_thm_k2(star(36, 3, 1)).hypothesis_met

    @pytest.mark.parametrize("n,k,ell", [(12, 5, 4), (10, 4, 2), (11, 4, 5), (9, 3, 3)])
    def test_l1_matches_construction(self, n, k, ell):
        v = V.check_thm_l1(frankl_wang_l(n, k, ell), ell)
        assert v.lhs == v.rhs == oracles.frankl_wang_d(n, k, ell)
        assert v.holds

    def test_l1_range(self):
        with pytest.raises(RangeError):
            V.check_thm_l1(star(7, 3), 7)

    def test_l1_default_c_eps(self):
        v = V.check_thm_l1(star(10, 4), 2)
        assert v.params["eps"] == 0.5
        assert v.params["C_eps"] == 3 ** 6

    def test_json_schema(self):
        d = json.loads(V.check_thm_2k1(star(7, 3)).to_json())
        assert {"bound_name", "params", "lhs", "rhs", "holds", "hypothesis_met", "witness"} <= set(d)
        assert d["params"]["n"] == 7 and d["params"]["k"] == 3


class TestShiftedStructure:
    def test_shifted_star(self):
        v = V.check_lemma_2_10(star(9, 3, 1), 6)
        assert v.holds and v.lhs == 0

    def test_needs_shifted_input(self):
        assert V.check_lemma_2_10(star(9, 3, 5), 2).holds is None

    def test_random_shifted(self):
        rng = random.Random(3)
        for _ in range(100):
            k = rng.randint(2, 4)
            n = rng.randint(k + 2, 10)
            ell = rng.randint(1, n)
            f = shift_to_fixpoint(seeded_intersecting(rng, n, k), ell, rename=rng.random() < 0.5).final
            assert V.check_lemma_2_10(f, ell).holds


class TestLowDegree:
    def test_single_set(self):
        res = V.low_degree_element(TraceFamily.of(7, [(1,)]), 7, 3)
        assert res.element == 2 and res.holds

    def test_star_trace(self):
        g = trace(star(9, 3, 1), 7)
        res = V.low_degree_element(g, 7, 3)
        assert res.holds and res.element != 1

    def test_hypothesis(self):
        res = V.low_degree_element(TraceFamily.of(4, [(1,), (2,)]), 7, 3)
        assert res.holds is None
        assert V.low_degree_element(TraceFamily.of(5, [(1,)]), 5, 3).holds is None

    def test_reported_values_reproduce(self):
        rng = random.Random(11)
        for _ in range(60):
            k = rng.randint(2, 3)
            n = rng.randint(2 * k + 1, 11)
            f = shift_to_fixpoint(seeded_intersecting(rng, n, k), 2 * k + 1, rename=True).final
            g = trace(f, 2 * k + 1)
            res = V.low_degree_element(g, 2 * k + 1, k)
            assert res.holds
            closure = upward_closure(g, 2 * k + 1)
            for row in res.per_m:
                assert mdegree(closure, res.element, row["m"]) == row["value"]
                bound = comb(2 * k - 1, row["m"] - 2) if row["m"] >= 2 else 0
                assert row["value"] <= bound

    def test_check_wrapper(self):
        v = V.check_lemma_3_2(star(9, 3, 1))
        assert v.holds and v.params["l"] == 7


class TestCrossSize:
    def test_examples(self):
        a, b = V.check_cross_size(star(10, 3, 1), star(10, 3, 1), 1)
        assert (a.lhs, a.rhs, a.holds) == (36, 168, True)
        assert b.holds
        a, b = V.check_cross_size(fam(7, 2, (1, 2)), fam(7, 2, (1, 3)), 1)
        assert (a.lhs, a.rhs, b.lhs, b.rhs) == (1, 20, 1, 20)

    def test_hypothesis(self):
        a, _ = V.check_cross_size(star(9, 3, 1), star(9, 3, 1), 1)
        assert a.holds is None
        a, _ = V.check_cross_size(SetFamily(10, 3), star(10, 3), 1)
        assert a.holds is None
        with pytest.raises(InputError):
            V.check_cross_size(star(10, 3), star(11, 3), 1)


class TestLargeDegreeDichotomy:
    def test_empty_trace_branch(self):
        f = star(13, 2, 1)
        v = V.check_lemma_4_2(f, 3, [1], [2, 3])
        assert v.hypothesis_met and v.d2 == 0 and v.holds

    def test_empty_subsets(self):
        v = V.check_lemma_4_2(star(13, 2, 1), 3, [], [])
        assert v.hypothesis_met and v.holds is not None

    def test_hypothesis(self):
        assert V.check_lemma_4_2(star(10, 2, 1), 3, [1], [2]).holds is None
        assert V.check_lemma_4_2(star(13, 2, 1), 3, [1], [1]).holds is None

    def test_bound_formula(self):
        assert V.lemma_4_2_bound(20, 3, 2, 1) == 2 ** 2 * comb(16, 1)
        assert V.lemma_4_2_bound(20, 3, 4, 1) == 0

    def test_pairs_count(self):
        for ell in range(1, 6):
            assert sum(1 for _ in V.pairs_of_disjoint(ell)) == 3 ** ell

    def test_all_pairs_on_star(self):
        v = V.check_lemma_4_2_all(star(15, 3, 1), 3)
        assert v.holds and v.params["pairs"] == 27


class TestTraceIntersecting:
    def test_f_monotone_example(self):
        f = V.f_sequence(20, 3, 4, 2)
        assert f[1] <= f[2]

    def test_star(self):
        v = V.check_cor_4_3(star(20, 2, 1), 3)
        assert v.holds and v.witness["G"] == [(1,)]

    def test_empty_g(self):
        v = V.check_cor_4_3(star(20, 3, 1), 1)
        assert v.holds and v.witness["G"] == []

    def test_degenerate_threshold(self):
        v = V.check_cor_4_3(star(20, 2, 1), 8)
        assert v.holds is None and "degenerate" in v.note


class TestVandermonde:
    def test_examples(self):
        assert V.vandermonde_identity(10, 4)
        assert oracles.vandermonde_lhs(10, 4) == 28
        assert oracles.vandermonde_lhs(7, 3) == 5

    def test_sweep(self):
        assert V.vandermonde_sweep(30, 8) == []

    def test_range(self):
        with pytest.raises(RangeError):
            V.vandermonde_identity(6, 3)
