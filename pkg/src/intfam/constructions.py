"""Named intersecting families and the small designs they are built from."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinatorics import bits_of, enumerate_bits, full_mask
from .errors import InputError, RangeError
from .family import SetFamily


@dataclass(frozen=True)
class Design:
    """A block system on ``[v]`` with blocks of size ``block_size``."""

    v: int
    blocks: tuple[tuple[int, ...], ...]
    lam: int

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def r(self) -> int:
        return self.lam * (self.v - 1) // (self.block_size - 1)

    def block_bits(self) -> list[int]:
        return [bits_of(b, self.v) for b in self.blocks]

    def validate(self) -> None:
        """Raise :class:`InputError` unless this is a 2-(v, block_size, lam) design."""
        kb = self.block_size
        if any(len(b) != kb for b in self.blocks):
            raise InputError("blocks of unequal size")
        if len(set(self.blocks)) != len(self.blocks):
            raise InputError("repeated block")
        for x, y in combinations(range(1, self.v + 1), 2):
            count = sum(1 for b in self.blocks if x in b and y in b)
            if count != self.lam:
                raise InputError(f"pair {{{x},{y}}} lies in {count} blocks, expected {self.lam}")
        r = Fraction(self.lam * (self.v - 1), kb - 1)
        for x in range(1, self.v + 1):
            if sum(1 for b in self.blocks if x in b) != r:
                raise InputError(f"point {x} has wrong replication (expected {r})")
        b = Fraction(self.lam * self.v * (self.v - 1), kb * (kb - 1))
        if len(self.blocks) != b:
            raise InputError(f"{len(self.blocks)} blocks, expected {b}")


# one triple from each complementary pair in [6]
_DESIGN_6_3_2 = (
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
)

_FANO = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6), (2, 6, 7), (1, 3, 7))


def design_2_6_3_2() -> Design:
    design = Design(6, _DESIGN_6_3_2, 2)
    design.validate()
    return design


def fano_plane() -> Design:
    design = Design(7, _FANO, 1)
    design.validate()
    return design


def star(n: int, k: int, center: int = 1) -> SetFamily:
    """All k-subsets of ``[n]`` containing ``center``."""
    if not 1 <= center <= n:
        raise RangeError(f"center {center} outside [1, {n}]")
    if not 1 <= k <= n:
        raise RangeError(f"k={k} outside [1, {n}]")
    c = 1 << (center - 1)
    return SetFamily(n, k, (b for b in enumerate_bits(n, k) if b & c))


def hilton_milner(n: int, k: int) -> SetFamily:
    """``{2..k+1}`` plus every k-set containing 1 that meets ``{2..k+1}``."""
    if not (2 <= k and 2 * k < n):
        raise RangeError(f"hilton_milner needs n > 2k >= 4 (got n={n}, k={k})")
    return frankl_wang_l(n, k, k)


def frankl_wang_l(n: int, k: int, ell: int) -> SetFamily:
    """k-sets containing 1 and meeting ``{2..ell+1}``, plus k-sets containing ``{2..ell+1}``."""
    if not (2 <= ell <= k + 1 <= n - k):
        raise RangeError(f"frankl_wang_l needs 2 <= ell <= k+1 <= n-k (got n={n}, k={k}, ell={ell})")
    block = full_mask(ell + 1) ^ 1
    return SetFamily(n, k, (
        b for b in enumerate_bits(n, k)
        if (b & 1 and b & block) or b & block == block
    ))


def _upward_family(n: int, k: int, generators: list[int], within: int | None = None) -> SetFamily:
    mask = full_mask(n if within is None else within)
    return SetFamily(n, k, (
        b for b in enumerate_bits(n, k)
        if any(b & mask & g == g for g in generators)
    ))


def example_5_1() -> SetFamily:
    """k=4, n=10: all 4-subsets of [6] plus design blocks extended by one of 7..10."""
    blocks = design_2_6_3_2().block_bits()
    members = list(enumerate_bits(6, 4))
    members += [b | 1 << (x - 1) for b in blocks for x in range(7, 11)]
    return SetFamily(10, 4, members)


def example_5_2() -> SetFamily:
    """k=5, n=12: all 5-sets containing a line of the Fano plane on [7]."""
    return _upward_family(12, 5, fano_plane().block_bits())


def example_5_3_generators() -> list[int]:
    blocks = design_2_6_3_2().block_bits()
    top = bits_of((7, 8, 9), 9)
    gens = [b | 1 << (i - 1) for b in blocks for i in (7, 8, 9)]
    gens += [top | 1 << (j - 1) for j in range(1, 7)]
    return gens


def example_5_3() -> SetFamily:
    """k=7, n=16: 7-sets whose trace on [9] contains a generator."""
    return _upward_family(16, 7, example_5_3_generators(), within=9)


def odd_k_majority(k: int) -> SetFamily:
    """n=2k+1: k-sets meeting ``[k+2]`` in at least ``(k+3)/2`` elements."""
    if k < 3 or k % 2 == 0:
        raise InputError(f"odd_k_majority needs odd k >= 3 (got {k})")
    n = 2 * k + 1
    mask = full_mask(k + 2)
    need = (k + 3) // 2
    return SetFamily(n, k, (b for b in enumerate_bits(n, k) if (b & mask).bit_count() >= need))


CONSTRUCTIONS = ("star", "hilton-milner", "fw-l", "ex5.1", "ex5.2", "ex5.3", "odd-majority")


def construct(name: str, n: int | None = None, k: int | None = None,
              ell: int | None = None, center: int = 1) -> SetFamily:
    """Build a named family; parameters a construction fixes itself are ignored."""

    def need(value: int | None, label: str) -> int:
        if value is None:
            raise InputError(f"construction {name!r} needs --{label}")
        return value

    if name == "star":
        return star(need(n, "n"), need(k, "k"), center)
    if name == "hilton-milner":
        return hilton_milner(need(n, "n"), need(k, "k"))
    if name == "fw-l":
        return frankl_wang_l(need(n, "n"), need(k, "k"), need(ell, "l"))
    if name == "ex5.1":
        return example_5_1()
    if name == "ex5.2":
        return example_5_2()
    if name == "ex5.3":
        return example_5_3()
    if name == "odd-majority":
        return odd_k_majority(need(k, "k"))
    raise InputError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}")
