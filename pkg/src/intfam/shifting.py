"""ij-shifting (compression) of sets and families, and the l-shifted fixpoint."""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import KSet, binom, elements_of
from .errors import InputError, RangeError, ShiftGuardError
from .family import SetFamily, degree_profile, relabel


def _check_pair(n: int, i: int, j: int) -> None:
    if i == j:
        raise InputError("shift needs i != j")
    for e in (i, j):
        if not 1 <= e <= n:
            raise RangeError(f"element {e} outside [1, {n}]")


def shift_set(a: KSet, i: int, j: int, family: SetFamily) -> KSet:
    """Replace ``i`` by ``j`` in ``a`` unless that is blocked.

    The move is blocked when ``i`` is not in ``a``, ``j`` already is, or the
    shifted set is itself a member of ``family``.
    """
    _check_pair(family.n, i, j)
    if a.n != family.n or a.bits not in family.lookup:
        raise InputError(f"{a!r} is not a member of the family")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    if a.bits & bi and not a.bits & bj:
        target = (a.bits ^ bi) | bj
        if target not in family.lookup:
            return KSet(target, a.n)
    return a


def _shift_members(members: set[int], bi: int, bj: int) -> int:
    """Apply one ij-shift to ``members`` in place; return how many sets moved."""
    moving = [b for b in members if b & bi and not b & bj and ((b ^ bi) | bj) not in members]
    for b in moving:
        members.discard(b)
        members.add((b ^ bi) | bj)
    return len(moving)


def shift_family(family: SetFamily, i: int, j: int) -> SetFamily:
    """The family ``{A_ij : A in F}``."""
    _check_pair(family.n, i, j)
    members = set(family.bits)
    if _shift_members(members, 1 << (i - 1), 1 << (j - 1)) == 0:
        return family
    return family.with_bits(members)


def shift_violations(family: SetFamily, ell: int) -> list[tuple[int, int, int]]:
    """Triples ``(A, i, j)`` (A as bits) where the ij-shift of ``A`` leaves the family."""
    n = family.n
    if not 1 <= ell <= n:
        raise RangeError(f"ell={ell} outside [1, {n}]")
    lookup = family.lookup
    out = []
    for b in family.bits:
        for i in elements_of(b >> ell):
            i += ell
            bi = 1 << (i - 1)
            for j in range(1, ell + 1):
                bj = 1 << (j - 1)
                if not b & bj and ((b ^ bi) | bj) not in lookup:
                    out.append((b, i, j))
    return out


def is_l_shifted(family: SetFamily, ell: int) -> bool:
    """True iff ``F_ij == F`` for every ``i > ell`` and ``j <= ell``."""
    return not shift_violations(family, ell)


@dataclass
class ShiftReport:
    rounds: int
    shifts_applied: int
    renamings: int
    final: SetFamily
    # mapping[e - 1] is the final label of input element e
    mapping: tuple[int, ...] = field(default=())


def _sort_labels(family: SetFamily) -> tuple[SetFamily, list[int] | None]:
    """Relabel so degrees are non-increasing (ties keep label order)."""
    perm = degree_profile(family).perm
    if list(perm) == list(range(1, family.n + 1)):
        return family, None
    mapping = [0] * family.n
    for new, old in enumerate(perm, start=1):
        mapping[old - 1] = new
    return relabel(family, mapping), mapping


def shift_to_fixpoint(family: SetFamily, ell: int, rename: bool = False) -> ShiftReport:
    """Shift until ``ell``-shifted; optionally keep degrees sorted by renaming.

    Sweeps run ``j`` over ``[ell]`` ascending and ``i`` over ``(ell, n]``
    ascending, applying each shift immediately.  With ``rename`` the ground set
    is relabeled by (degree descending, label ascending) before shifting and
    after every fixpoint, and shifting resumes until both hold at once.
    """
    n, k = family.n, family.k
    if not 1 <= ell <= n:
        raise RangeError(f"ell={ell} outside [1, {n}]")
    cap = binom(n, k) * max(k, 1) * n
    members = set(family.bits)
    mapping = list(range(1, n + 1))
    rounds = shifts = renamings = 0

    def sweep_to_fixpoint() -> None:
        nonlocal rounds, shifts
        while True:
            rounds += 1
            if rounds > cap:
                raise ShiftGuardError(f"shifting exceeded {cap} sweeps")
            moved_any = False
            for j in range(1, ell + 1):
                bj = 1 << (j - 1)
                for i in range(ell + 1, n + 1):
                    if _shift_members(members, 1 << (i - 1), bj):
                        shifts += 1
                        moved_any = True
            if not moved_any:
                return

    def apply_rename() -> bool:
        nonlocal members, mapping, renamings
        current, step = _sort_labels(SetFamily(n, k, members))
        if step is None:
            return False
        members = set(current.bits)
        mapping = [step[m - 1] for m in mapping]
        renamings += 1
        return True

    if rename:
        apply_rename()
    while True:
        before = degree_profile(SetFamily(n, k, members)).sorted[:ell]
        shifts_before = shifts
        sweep_to_fixpoint()
        if rename and shifts > shifts_before:
            after = degree_profile(SetFamily(n, k, members)).sorted[:ell]
            if not (after > before and all(x >= y for x, y in zip(after, before))):
                raise ShiftGuardError(f"top-{ell} degrees failed to increase: {before} -> {after}")
        if not rename or not apply_rename():
            break
        if is_l_shifted(SetFamily(n, k, members), ell):
            break
    return ShiftReport(rounds, shifts, renamings, SetFamily(n, k, members), tuple(mapping))
