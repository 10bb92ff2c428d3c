from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from intfam.errors import InputError, RangeError
from intfam.family import SetFamily, complement
from intfam.shadow import check_cor_2_7, colex_segment, kk_lower_bound, shadow, upper_shadow

import oracles
from strategies import families


def fam(n, k, *sets):
    return SetFamily.from_sets(n, k, sets)


def full(n, k):
    return SetFamily.from_sets(n, k, combinations(range(1, n + 1), k))


def as_sets(f):
    return {frozenset(s) for s in f.sets()}


class TestShadow:
    def test_examples(self):
        assert shadow(fam(5, 3, (1, 2, 3))).sets() == [(1, 2), (1, 3), (2, 3)]
        assert shadow(full(4, 3)) == full(4, 2)
        assert len(shadow(SetFamily(5, 3))) == 0

    def test_zero_uniform_rejected(self):
        with pytest.raises(InputError):
            shadow(SetFamily(4, 0, [0]))

    @settings(max_examples=200)
    @given(families(k_min=1))
    def test_matches_oracle(self, f):
        got = shadow(f)
        assert as_sets(got) == oracles.shadow(as_sets(f))
        assert len(got) <= f.k * len(f)


class TestUpperShadow:
    def test_examples(self):
        assert upper_shadow(fam(3, 1, (1,))).sets() == [(1, 2), (1, 3)]
        assert upper_shadow(full(4, 2)) == full(4, 3)

    def test_full_uniformity_rejected(self):
        with pytest.raises(InputError):
            upper_shadow(full(4, 4))

    @settings(max_examples=200)
    @given(families(k_max=5))
    def test_duality_and_oracle(self, f):
        if f.k >= f.n:
            return
        got = upper_shadow(f)
        assert as_sets(got) == oracles.upper_shadow(as_sets(f), f.n)
        assert got == complement(shadow(complement(f)))
        assert len(got) <= (f.n - f.k) * len(f)


class TestColexSegment:
    def test_examples(self):
        seg = colex_segment(3, 4, 5)
        assert seg.realized.sets() == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
        assert len(colex_segment(3, 0, 6).realized) == 0
        assert colex_segment(2, 10, 5).realized == full(5, 2)

    def test_out_of_range(self):
        with pytest.raises(RangeError):
            colex_segment(3, 21, 6)
        with pytest.raises(RangeError):
            colex_segment(3, -1, 6)

    def test_segment_is_colex_prefix(self):
        order = sorted(combinations(range(1, 8), 3), key=oracles.colex_key)
        for m in range(comb(7, 3) + 1):
            assert colex_segment(3, m, 7).realized.sets() == order[:m]


class TestKruskalKatona:
    def test_examples(self):
        assert kk_lower_bound(3, 4, 5) == 6
        assert kk_lower_bound(3, 4, 9) == 6
        for k in range(1, 6):
            assert kk_lower_bound(k, 1, 8) == k
        assert kk_lower_bound(2, 3, 4) == 3

    def test_monotone_in_m(self):
        for n, k in [(6, 3), (7, 2), (8, 4)]:
            values = [kk_lower_bound(k, m, n) for m in range(comb(n, k) + 1)]
            assert values == sorted(values)

    @pytest.mark.parametrize("m", range(1, 6))
    def test_bound_is_the_exact_minimum(self, m):
        assert kk_lower_bound(3, m, 6) == oracles.min_shadow(6, 3, m)


class TestCorUpperShadow:
    def test_hypothesis_met_example(self):
        f = SetFamily.from_sets(5, 2, list(combinations(range(1, 5), 2)) + [(1, 5)])
        v = check_cor_2_7(f)
        assert v.hypothesis_met and v.holds
        assert v.upper_shadow_size == len(oracles.upper_shadow(as_sets(f), 5))
        assert v.upper_shadow_size > comb(4, 2)

    def test_below_threshold(self):
        v = check_cor_2_7(fam(6, 2, (1, 2), (3, 4)))
        assert not v.hypothesis_met and v.holds is None
        assert v.to_dict()["bound_name"] == "cor2.7"

    def test_full_family(self):
        v = check_cor_2_7(full(7, 3))
        assert v.holds and v.upper_shadow_size == comb(7, 4)

    def test_one_below_full_ground_set_is_excluded(self):
        v = check_cor_2_7(full(4, 3))
        assert (v.upper_shadow_size, v.bound) == (1, 1)
        assert not v.hypothesis_met and v.holds is None

    @settings(max_examples=200)
    @given(families(n_max=8, max_size=60))
    def test_never_fails(self, f):
        if f.k < f.n:
            assert check_cor_2_7(f).holds is not False
