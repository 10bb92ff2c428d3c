"""Randomized property sweeps over shifted intersecting families.

Each suite takes a seeded ``random.Random`` and an instance count and returns
a list of human-readable violation strings (empty when everything holds).
"""

from __future__ import annotations

import random
from typing import Callable

from .constructions import star
from .family import (
    SetFamily,
    are_cross_t_intersecting,
    degree_profile,
    is_t_intersecting,
    trace,
)
from .random_families import random_cross_t_intersecting, random_t_intersecting
from .shifting import is_l_shifted, shift_family, shift_to_fixpoint, shift_violations
from . import verifiers as V


def _potential(family: SetFamily) -> int:
    return sum(e * ((b >> (e - 1)) & 1) for b in family.bits for e in range(1, family.n + 1))


def seeded_intersecting(rng: random.Random, n: int, k: int) -> SetFamily:
    """A random intersecting family; one in three is a random sub-star."""
    if rng.random() < 1 / 3:
        s = star(n, k, rng.randint(1, n))
        return s.with_bits(rng.sample(s.bits, rng.randint(1, len(s))))
    return random_t_intersecting(rng, n, k, 1)


def check_shifting_instance(rng: random.Random) -> list[str]:
    out: list[str] = []
    k = rng.randint(2, 4)
    n = rng.randint(k + 1, 10)
    t = rng.choice((1, 2))
    family = random_t_intersecting(rng, n, k, t)
    tag = f"n={n} k={k} t={t} F={family.sets()}"

    # single shift: t-intersection, size, uniformity, potential
    i, j = rng.sample(range(1, n + 1), 2)
    shifted = shift_family(family, i, j)
    if not is_t_intersecting(shifted, t):
        out.append(f"shift ({i},{j}) broke t-intersection: {tag}")
    if len(shifted) != len(family) or shifted.k != family.k:
        out.append(f"shift ({i},{j}) changed size or uniformity: {tag}")
    if shifted != family and j < i and not _potential(shifted) < _potential(family):
        out.append(f"shift ({i},{j}) did not lower the element-sum potential: {tag}")

    # simultaneous shift of a cross-t-intersecting pair
    b = rng.randint(t, k)
    f1, f2 = random_cross_t_intersecting(rng, n, k, b, t)
    if not are_cross_t_intersecting(shift_family(f1, i, j), shift_family(f2, i, j), t):
        out.append(f"shift ({i},{j}) broke cross-{t}-intersection: {f1.sets()} / {f2.sets()}")

    # fixpoint
    ell = rng.randint(1, n)
    rename = rng.random() < 0.5
    report = shift_to_fixpoint(family, ell, rename=rename)
    final = report.final
    tag = f"{tag} l={ell} rename={rename}"
    if not is_l_shifted(final, ell):
        out.append(f"fixpoint not {ell}-shifted: {tag}")
    if shift_violations(final, ell):
        out.append(f"fixpoint still admits a shift: {tag}")
    if not is_t_intersecting(final, t) or len(final) != len(family):
        out.append(f"fixpoint lost t-intersection or size: {tag}")
    before, after = degree_profile(family), degree_profile(final)
    if rename:
        if any(x < y for x, y in zip(after.sorted[:ell], before.sorted[:ell])):
            out.append(f"top-{ell} sorted degrees decreased: {tag}")
        if list(after.raw) != list(after.sorted):
            out.append(f"renamed fixpoint degrees not non-increasing: {tag}")
    elif any(after.raw[x] < before.raw[x] for x in range(ell)):
        out.append(f"degree inside [l] decreased: {tag}")
    verdict = V.check_lemma_2_10(final, ell)
    if verdict.holds is not True:
        out.append(f"lemma2.10 {verdict.witness}: {tag}")
    return out


def check_low_degree_instance(rng: random.Random) -> list[str]:
    k = rng.randint(2, 4)
    n = rng.randint(2 * k + 1, 12)
    family = seeded_intersecting(rng, n, k)
    ell = 2 * k + 1
    final = shift_to_fixpoint(family, ell, rename=True).final
    out = []
    res = V.low_degree_element(trace(final, ell), ell, k)
    if res.holds is not True:
        out.append(f"lemma3.2 n={n} k={k}: {res.note} F={family.sets()}")
    v = V.check_thm_2k1(family)
    if v.holds is False:
        out.append(f"thm2k1 n={n} k={k}: d={v.lhs} > {v.rhs} F={family.sets()}")
    return out


def check_cross_instance(rng: random.Random) -> list[str]:
    a, b = rng.randint(1, 3), rng.randint(1, 3)
    t = rng.randint(1, min(a, b))
    n = rng.randint(3 * max(a, b) + 1, 12)
    fa, fb = random_cross_t_intersecting(rng, n, a, b, t)
    out = []
    for v in V.check_cross_size(fa, fb, t):
        if v.holds is not True:
            out.append(f"{v.bound_name} n={n} a={a} b={b} t={t}: {v.lhs} vs {v.rhs}")
    return out


def check_large_degree_instance(rng: random.Random) -> list[str]:
    k = rng.randint(2, 3)
    n = rng.randint(4 * k + 1, 20)
    ell = rng.randint(1, min(8, n - 4 * k))
    family = seeded_intersecting(rng, n, k)
    final = shift_to_fixpoint(family, ell, rename=True).final
    tag = f"n={n} k={k} l={ell} F={final.sets()}"
    out = []
    v = V.check_lemma_4_2_all(final, ell)
    if v.holds is not True:
        out.append(f"lemma4.2 {v.witness}: {tag}")
    c = V.check_cor_4_3(final, ell)
    if c.holds is False:
        out.append(f"cor4.3 {c.witness}: {tag}")
    f = V.f_sequence(n, k, ell, (ell - 1) // 2 + 1)
    if any(x > y for x, y in zip(f, f[1:])):
        out.append(f"f not monotone {f}: n={n} k={k} l={ell}")
    return out


def shifting_suite(rng: random.Random, count: int) -> list[str]:
    out = []
    for _ in range(count):
        out += check_shifting_instance(rng)
    return out


def lemma_suite(rng: random.Random, count: int) -> list[str]:
    out = []
    for _ in range(count):
        out += check_low_degree_instance(rng)
        out += check_cross_instance(rng)
        out += check_large_degree_instance(rng)
    return out


SUITES: dict[str, Callable[[random.Random, int], list[str]]] = {
    "shifting": shifting_suite,
    "lemmas": lemma_suite,
}
