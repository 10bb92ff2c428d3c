"""Exhaustive search over maximal intersecting families.

Maximal t-intersecting k-uniform families on ``[n]`` are the maximal cliques
of the intersection graph whose vertices are the k-subsets of ``[n]``.  They
are enumerated with Bron-Kerbosch (Tomita pivoting) over int bitsets.  Since
adding members never lowers a degree, per-index degree maxima are always
attained by maximal families, so nothing else needs to be visited.

``pruned_scan`` restricts to families that are also ``l``-shifted (closed
under replacing elements above ``l`` by missing elements of ``[l]``).  Every
intersecting family can be pushed to such a family by alternately shifting and
extending, without lowering any of its ``l`` largest sorted degrees, so the
restricted maxima are exact for indices ``1..l`` only.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .combinatorics import binom, enumerate_bits, full_mask
from .errors import CapacityError, InputError, RangeError
from .family import SetFamily, degree_profile
from .fileformat import write_family

DEFAULT_CAP = 4096
MAX_VIOLATIONS = 100

Visitor = Callable[[int, SetFamily], None]


@dataclass(frozen=True)
class IntersectionGraph:
    """Vertices are the k-subsets of ``[n]`` by colex rank; ``adjacency[u]``
    has bit ``v`` set iff ``u != v`` and the two sets share ``>= t`` elements."""

    n: int
    k: int
    t: int
    vertices: tuple[int, ...]
    adjacency: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, u: int) -> int:
        return self.adjacency[u].bit_count()

    @property
    def universe(self) -> int:
        return full_mask(len(self.vertices))


def _check_cap(n: int, k: int, cap: int) -> None:
    if not 0 <= k <= n:
        raise RangeError(f"k={k} outside [0, {n}]")
    size = binom(n, k)
    if size > cap:
        raise CapacityError(
            f"C({n},{k}) = {size} vertices exceeds the search cap of {cap}; "
            "raise --cap, or use --shifted-only to search l-shifted families")


def _rows_to_ints(matrix: np.ndarray) -> tuple[int, ...]:
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


def build_intersection_graph(n: int, k: int, t: int = 1, cap: int = DEFAULT_CAP) -> IntersectionGraph:
    _check_cap(n, k, cap)
    if t < 1:
        raise RangeError(f"t={t} must be positive")
    vertices = tuple(enumerate_bits(n, k))
    arr = np.array(vertices, dtype=np.uint64)
    matrix = np.bitwise_count(arr[:, None] & arr[None, :]) >= t
    np.fill_diagonal(matrix, False)
    return IntersectionGraph(n, k, t, vertices, _rows_to_ints(matrix))


# --- Bron-Kerbosch ------------------------------------------------------------


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _pivot(adj: Sequence[int], p: int, x: int) -> int:
    best, best_count = -1, -1
    for u in _bits(p | x):
        c = (p & adj[u]).bit_count()
        if c > best_count:
            best, best_count = u, c
    return best


def _expand(adj: Sequence[int], r: list[int], p: int, x: int, emit: Callable[[list[int]], None],
            hopeless: Callable[[int], bool] | None = None, rmask: int = 0) -> None:
    """Tomita-pivoted Bron-Kerbosch from the state ``(R, P, X)``, emitting each maximal clique.

    Runs on an explicit stack because cliques (stars) can hold thousands of vertices.
    With ``hopeless``, a subtree is skipped when ``hopeless(R | P)`` is true, where
    ``rmask`` is the bitmask of vertices added beyond the initial ``r``.
    """
    depth = len(r)
    frames: list[list[int]] = []

    def enter(p: int, x: int, rmask: int) -> None:
        if hopeless is not None and hopeless(rmask | p):
            return
        if not p:
            if not x:
                emit(r)
            return
        u = _pivot(adj, p, x)
        frames.append([p, x, p & ~adj[u], rmask])

    enter(p, x, rmask)
    while frames:
        top = frames[-1]
        p, x, cand, rm = top
        if not cand:
            frames.pop()
            if len(r) > depth:
                r.pop()
            continue
        low = cand & -cand
        v = low.bit_length() - 1
        top[0], top[1], top[2] = p ^ low, x | low, cand ^ low
        r.append(v)
        before = len(frames)
        enter(p & adj[v], x & adj[v], rm | low)
        if len(frames) == before:
            r.pop()


def _root_branches(adj: Sequence[int], universe: int) -> list[tuple[int, int, int]]:
    """Split the top level of the recursion into independent ``(v, P, X)`` tasks."""
    p, x = universe, 0
    if not p:
        return []
    u = _pivot(adj, p, x)
    out = []
    for v in _bits(p & ~adj[u]):
        out.append((v, p & adj[v], x & adj[v]))
        p &= ~(1 << v)
        x |= 1 << v
    return out


# --- aggregation ---------------------------------------------------------------


@dataclass
class SearchReport:
    n: int
    k: int
    t: int
    families_enumerated: int = 0
    # index -> (value, witness id)
    max_d_at_index: dict[int, tuple[int, int]] = field(default_factory=dict)
    max_size: tuple[int, int] = (0, -1)
    witnesses: dict[int, SetFamily] = field(default_factory=dict)
    bound_violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    mode: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def max_d(self, index: int) -> int:
        return self.max_d_at_index[index][0]

    def witness_for(self, index: int) -> SetFamily:
        return self.witnesses[self.max_d_at_index[index][1]]

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "t": self.t,
            "families": self.families_enumerated,
            "max_degrees": [
                {"index": j, "value": v, "witness_id": w, "witness_file": witness_name(w)}
                for j, (v, w) in sorted(self.max_d_at_index.items())
            ],
            "max_family_size": None if self.max_size[1] < 0 else {
                "value": self.max_size[0], "witness_id": self.max_size[1],
                "witness_file": witness_name(self.max_size[1])},
            "bound_violations": self.bound_violations,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "mode": self.mode,
            **self.extra,
        }

    def comparable(self) -> dict:
        """The report without timing, for determinism checks."""
        d = self.to_dict()
        d.pop("elapsed_ms")
        d["witnesses"] = {w: f.bits for w, f in sorted(self.witnesses.items())}
        return d

    def write(self, out_dir: str | os.PathLike[str]) -> Path:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for w, fam in sorted(self.witnesses.items()):
            write_family(fam, out / witness_name(w))
        path = out / "report.json"
        path.write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")
        return path


def witness_name(family_id: int) -> str:
    return f"witness_{family_id:04d}.txt"


class _Aggregator:
    def __init__(self, n: int, k: int, t: int, vertices: Sequence[int],
                 accept: Callable[[list[int]], bool] | None = None,
                 validate: Callable[[list[int]], None] | None = None,
                 visitor: Visitor | None = None, sample_every: int = 0):
        self.report = SearchReport(n, k, t)
        self.vertices = vertices
        self.accept = accept
        self.validate = validate
        self.visitor = visitor
        self.sample_every = sample_every
        self.candidates = 0
        self.bound_2k1 = binom(n - 2, k - 2) if n >= 2 * k + 1 else None
        self.bound_hz = binom(n - 2, k - 2) if n > 2 * k else None

    def __call__(self, clique: list[int]) -> None:
        self.candidates += 1
        if self.accept is not None and not self.accept(clique):
            return
        rep = self.report
        fid = rep.families_enumerated
        rep.families_enumerated += 1
        if self.validate is not None and (self.sample_every <= 1 or fid % self.sample_every == 0):
            self.validate(clique)
        family = SetFamily(rep.n, rep.k, [self.vertices[v] for v in clique])
        if self.visitor is not None:
            self.visitor(fid, family)
        profile = degree_profile(family)
        keep = False
        for j, value in enumerate(profile.sorted, start=1):
            cur = rep.max_d_at_index.get(j)
            if cur is None or value > cur[0]:
                rep.max_d_at_index[j] = (value, fid)
                keep = True
        if len(family) > rep.max_size[0]:
            rep.max_size = (len(family), fid)
            keep = True
        if self.bound_2k1 is not None and profile.sorted[2 * rep.k] > self.bound_2k1:
            self._violation(fid, "thm2k1", profile.sorted[2 * rep.k], self.bound_2k1, family)
            keep = True
        if self.bound_hz is not None and profile.sorted[-1] > self.bound_hz:
            self._violation(fid, "hz", profile.sorted[-1], self.bound_hz, family)
            keep = True
        if keep:
            rep.witnesses[fid] = family

    def _violation(self, fid: int, name: str, lhs: int, rhs: int, family: SetFamily) -> None:
        if len(self.report.bound_violations) < MAX_VIOLATIONS:
            self.report.bound_violations.append(
                {"family_id": fid, "bound_name": name, "lhs": lhs, "rhs": rhs,
                 "family": family.sets()})


def _merge(parts: list[SearchReport], base: SearchReport) -> SearchReport:
    """Concatenate partial reports in branch order, renumbering family ids."""
    offset = 0
    for part in parts:
        for j, (value, fid) in sorted(part.max_d_at_index.items()):
            cur = base.max_d_at_index.get(j)
            if cur is None or value > cur[0]:
                base.max_d_at_index[j] = (value, fid + offset)
        if part.max_size[0] > base.max_size[0]:
            base.max_size = (part.max_size[0], part.max_size[1] + offset)
        for v in part.bound_violations:
            if len(base.bound_violations) < MAX_VIOLATIONS:
                base.bound_violations.append({**v, "family_id": v["family_id"] + offset})
        for fid, fam in part.witnesses.items():
            base.witnesses[fid + offset] = fam
        offset += part.families_enumerated
    base.families_enumerated = offset
    return _drop_stale_witnesses(base)


def _drop_stale_witnesses(report: SearchReport) -> SearchReport:
    """Keep only families still referenced by a maximum or a violation."""
    used = {fid for _, fid in report.max_d_at_index.values()}
    used.add(report.max_size[1])
    used.update(v["family_id"] for v in report.bound_violations)
    report.witnesses = {fid: fam for fid, fam in report.witnesses.items() if fid in used}
    return report


# --- process-pool plumbing --------------------------------------------------------

_WORKER: dict = {}


def _init_worker(state: dict) -> None:
    _WORKER.clear()
    _WORKER.update(state)


def _make_aggregator(state: dict) -> _Aggregator:
    accept = None
    if state.get("global_adj") is not None:
        accept = _global_maximality(state["global_adj"])
    validate = _validator(state["check_adj"]) if state["validate"] != "off" else None
    sample = 1 if state["validate"] == "all" else 64
    return _Aggregator(state["n"], state["k"], state["t"], state["vertices"],
                       accept=accept, validate=validate, sample_every=sample)


def _run_branch(task: tuple[int, int, int]) -> tuple[SearchReport, int]:
    agg = _make_aggregator(_WORKER)
    v, p, x = task
    _expand(_WORKER["adj"], [v], p, x, agg)
    return agg.report, agg.candidates


def _global_maximality(global_adj: Sequence[int]) -> Callable[[list[int]], bool]:
    def accept(clique: list[int]) -> bool:
        common = -1
        for v in clique:
            common &= global_adj[v]
            if not common:
                return True
        return not common
    return accept


def _validator(adj: Sequence[int]) -> Callable[[list[int]], None]:
    def validate(clique: list[int]) -> None:
        members = 0
        for v in clique:
            members |= 1 << v
        common = -1
        for v in clique:
            if members & ~(1 << v) & ~adj[v]:
                raise AssertionError(f"visited family is not intersecting: {clique}")
            common &= adj[v]
        if common:
            raise AssertionError(f"visited family is not maximal: {clique}")
    return validate


def _search(state: dict, universe: int, visitor: Visitor | None, threads: int) -> tuple[SearchReport, int]:
    start = time.perf_counter()
    adj = state["adj"]
    if threads <= 1:
        agg = _make_aggregator(state)
        agg.visitor = visitor
        _expand(adj, [], universe, 0, agg)
        report, candidates = _drop_stale_witnesses(agg.report), agg.candidates
    else:
        if visitor is not None:
            raise InputError("custom visitors need threads=1 (workers run in separate processes)")
        tasks = _root_branches(adj, universe)
        with ProcessPoolExecutor(max_workers=threads, initializer=_init_worker,
                                 initargs=(state,)) as pool:
            results = list(pool.map(_run_branch, tasks))
        report = _merge([r for r, _ in results], SearchReport(state["n"], state["k"], state["t"]))
        candidates = sum(c for _, c in results)
    report.elapsed = time.perf_counter() - start
    return report, candidates


def _state(graph: IntersectionGraph, adj: Sequence[int], validate: str,
           global_adj: Sequence[int] | None) -> dict:
    if validate not in ("all", "sample", "off"):
        raise InputError(f"validate must be all, sample or off (got {validate!r})")
    return {"n": graph.n, "k": graph.k, "t": graph.t, "vertices": graph.vertices,
            "adj": tuple(adj), "check_adj": graph.adjacency, "validate": validate,
            "global_adj": global_adj}


def enumerate_maximal_families(graph: IntersectionGraph, visitor: Visitor | None = None,
                               threads: int = 1, validate: str = "sample") -> SearchReport:
    """Visit every maximal clique of ``graph`` once, as a :class:`SetFamily`.

    ``visitor(family_id, family)`` is called in the deterministic sequential
    order; ids in the report refer to that order whatever ``threads`` is.
    ``validate`` chooses how often visited families are re-checked for being
    intersecting and maximal: ``all``, ``sample`` (every 64th) or ``off``.
    """
    state = _state(graph, graph.adjacency, validate, None)
    report, _ = _search(state, graph.universe, visitor, threads)
    report.mode = {"shifted_only": False, "ell": None,
                   "sound_indices": list(range(1, graph.n + 1))}
    return report


# --- shifted-only search --------------------------------------------------------


def down_closure_masks(graph: IntersectionGraph, ell: int) -> list[int]:
    """For each vertex ``A`` the vertex mask of sets ``B`` reachable by l-shifts:
    ``B & [l] >= A & [l]`` and ``B - [l] <= A - [l]``."""
    low = full_mask(ell)
    index = {b: i for i, b in enumerate(graph.vertices)}
    out = []
    for a in graph.vertices:
        inside, outside = a & low, a & ~low
        mask = 0
        for b in graph.vertices:
            if b & inside == inside and b & ~low & ~outside == 0:
                mask |= 1 << index[b]
        out.append(mask)
    return out


def shifted_compatibility(graph: IntersectionGraph, ell: int) -> tuple[list[int], int]:
    """Adjacency on vertices whose down-closures jointly stay t-intersecting.

    Returns the rows and the mask of usable vertices (those whose own
    down-closure is t-intersecting).  Maximal cliques of this graph are exactly
    the l-shifted t-intersecting families maximal among l-shifted ones.
    """
    closures = down_closure_masks(graph, ell)
    size = len(graph.vertices)
    common = []
    for u in range(size):
        acc = -1
        for a in _bits(closures[u]):
            acc &= graph.adjacency[a] | 1 << a
        common.append(acc & full_mask(size))
    usable = 0
    for u in range(size):
        if closures[u] & ~common[u] == 0:
            usable |= 1 << u
    rows = []
    for u in range(size):
        row = 0
        if usable >> u & 1:
            for v in _bits(usable & ~(1 << u)):
                if closures[v] & ~common[u] == 0:
                    row |= 1 << v
        rows.append(row)
    return rows, usable


def pruned_scan(k: int, n: int, restrict_shifted: bool = True, ell: int | None = None,
                t: int = 1, cap: int = DEFAULT_CAP, threads: int = 1,
                validate: str = "sample", visitor: Visitor | None = None) -> SearchReport:
    """Maximal t-intersecting families that are also ``ell``-shifted.

    ``ell`` defaults to ``k + 2``.  Sorted-degree maxima are exact for indices
    up to ``ell``; the report's ``mode.sound_indices`` says so.  Without
    ``restrict_shifted`` this is the full enumeration.
    """
    graph = build_intersection_graph(n, k, t, cap)
    if not restrict_shifted:
        return enumerate_maximal_families(graph, visitor, threads, validate)
    ell = min(k + 2, n) if ell is None else ell
    if not 1 <= ell <= n:
        raise RangeError(f"ell={ell} outside [1, {n}]")
    rows, usable = shifted_compatibility(graph, ell)
    state = _state(graph, rows, validate, graph.adjacency)
    report, candidates = _search(state, usable, visitor, threads)
    report.mode = {"shifted_only": True, "ell": ell,
                   "sound_indices": list(range(1, ell + 1)),
                   "shifted_maximal_candidates": candidates,
                   "note": f"maxima exact for sorted-degree indices 1..{ell} only"}
    return report


def maximize_degree(k: int, n: int, index: int, shifted_only: bool = True, ell: int | None = None,
                    t: int = 1, cap: int = DEFAULT_CAP, validate: str = "sample") -> SearchReport:
    """Largest ``d_index`` over maximal t-intersecting families, by branch and bound.

    Degrees only grow when sets are added, so the degrees of ``R | P`` at a
    search node bound every family below it; subtrees that cannot beat the
    best value so far are skipped.  Only ``index`` is reported.  With
    ``shifted_only`` the search runs on ``ell``-shifted families
    (``ell`` defaults to ``index``, and must be at least ``index``).
    """
    graph = build_intersection_graph(n, k, t, cap)
    if not 1 <= index <= n:
        raise RangeError(f"degree index {index} outside [1, {n}]")
    if shifted_only:
        ell = index if ell is None else ell
        if not index <= ell <= n:
            raise RangeError(f"ell={ell} must lie in [{index}, {n}] to keep d_{index} exact")
        adj, universe = shifted_compatibility(graph, ell)
        state = _state(graph, adj, validate, graph.adjacency)
    else:
        ell = None
        adj, universe = graph.adjacency, graph.universe
        state = _state(graph, adj, validate, None)
    agg = _make_aggregator(state)
    element_masks = []
    for e in range(n):
        mask = 0
        for v, b in enumerate(graph.vertices):
            if b >> e & 1:
                mask |= 1 << v
        element_masks.append(mask)
    best = agg.report.max_d_at_index

    def hopeless(mask: int) -> bool:
        current = best.get(index, (-1, -1))[0]
        degrees = sorted(((mask & m).bit_count() for m in element_masks), reverse=True)
        return degrees[index - 1] <= current

    start = time.perf_counter()
    _expand(adj, [], universe, 0, agg, hopeless)
    report = agg.report
    report.max_d_at_index = {j: v for j, v in report.max_d_at_index.items() if j == index}
    report.max_size = (0, -1)
    report.bound_violations = [v for v in report.bound_violations
                               if v["bound_name"] == "thm2k1" and index == 2 * k + 1]
    report = _drop_stale_witnesses(report)
    report.elapsed = time.perf_counter() - start
    report.mode = {"shifted_only": shifted_only, "ell": ell, "sound_indices": [index],
                   "branch_and_bound": True, "search_leaves": agg.candidates,
                   "note": f"families counts only leaves reached; maximum exact for d_{index} only"}
    return report


def scan_question_5_1(k: int, n: int, shifted_only: bool = False, cap: int = DEFAULT_CAP,
                      threads: int = 1) -> SearchReport:
    """Largest ``d_{k+2}`` over maximal intersecting families vs ``C(n-2, k-2)``."""
    index = k + 2
    if index > n:
        raise RangeError(f"index k+2={index} exceeds n={n}")
    if shifted_only:
        report = pruned_scan(k, n, True, ell=index, cap=cap, threads=threads)
    else:
        report = enumerate_maximal_families(build_intersection_graph(n, k, 1, cap), threads=threads)
    bound = binom(n - 2, k - 2)
    value, fid = report.max_d_at_index.get(index, (0, -1))
    report.extra["question_5_1"] = {
        "index": index, "bound": bound, "max_value": value,
        "witness_id": fid, "exceeds": value > bound,
    }
    return report
