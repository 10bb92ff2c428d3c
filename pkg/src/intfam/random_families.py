"""Seeded generators of random intersecting and cross-intersecting families."""

from __future__ import annotations

import random

from .combinatorics import enumerate_bits
from .family import SetFamily


def random_t_intersecting(rng: random.Random, n: int, k: int, t: int = 1,
                          maximal: bool | None = None) -> SetFamily:
    """Greedy t-intersecting family over a shuffled candidate list.

    With ``maximal`` unset the generator flips a coin between running the
    greedy pass to completion (a maximal family) and stopping at a random size.
    """
    candidates = list(enumerate_bits(n, k))
    rng.shuffle(candidates)
    if maximal is None:
        maximal = rng.random() < 0.5
    stop = len(candidates) if maximal else rng.randint(1, max(1, len(candidates) // 3))
    chosen: list[int] = []
    for b in candidates:
        if all((a & b).bit_count() >= t for a in chosen):
            chosen.append(b)
            if len(chosen) >= stop:
                break
    return SetFamily(n, k, chosen)


def random_cross_t_intersecting(rng: random.Random, n: int, a: int, b: int,
                                t: int = 1) -> tuple[SetFamily, SetFamily]:
    """A non-empty pair (A a-uniform, B b-uniform) with ``|X & Y| >= t`` across."""
    while True:
        b_sets = rng.sample(list(enumerate_bits(n, b)), rng.randint(1, 3))
        pool = [x for x in enumerate_bits(n, a) if all((x & y).bit_count() >= t for y in b_sets)]
        if pool:
            break
    a_sets = rng.sample(pool, rng.randint(1, len(pool)))
    # grow B with every b-set compatible with the chosen A-sets, then subsample
    b_pool = [y for y in enumerate_bits(n, b) if all((x & y).bit_count() >= t for x in a_sets)]
    extra = rng.sample(b_pool, rng.randint(0, len(b_pool)))
    return SetFamily(n, a, a_sets), SetFamily(n, b, set(b_sets) | set(extra))
