"""Command-line interface.

Exit codes: 0 success / bound holds, 1 a checked bound is violated,
2 usage or input error, 3 capacity or internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import asdict
from typing import Sequence

from . import verifiers as V
from .constructions import CONSTRUCTIONS, construct
from .errors import CapacityError, InputError, IntfamError, ShiftGuardError
from .family import degree_profile
from .fileformat import format_family, read_family, write_family
from .search import (DEFAULT_CAP, build_intersection_graph, enumerate_maximal_families,
                     maximize_degree, pruned_scan)
from .shadow import check_cor_2_7, shadow, upper_shadow
from .shifting import shift_to_fixpoint

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
DEFAULT_SEED = 20251015
MAX_THREADS = 8


def _emit_family(family, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(format_family(family))
    else:
        write_family(family, path)


def degrees_text(family) -> str:
    p = degree_profile(family)
    return (f"n={family.n} k={family.k} size={len(family)}\n"
            f"raw: {' '.join(map(str, p.raw))}\n"
            f"sorted: {' '.join(map(str, p.sorted))}\n"
            f"perm: {' '.join(map(str, p.perm))}\n")


def degrees_json(family) -> str:
    p = degree_profile(family)
    return json.dumps({"n": family.n, "k": family.k, "size": len(family),
                       "raw": list(p.raw), "sorted": list(p.sorted), "perm": list(p.perm)})


def cmd_construct(args) -> int:
    family = construct(args.name, args.n, args.k, args.l, args.center)
    _emit_family(family, args.output)
    return EXIT_OK


def cmd_degrees(args) -> int:
    family = read_family(args.input)
    sys.stdout.write(degrees_json(family) + "\n" if args.json else degrees_text(family))
    return EXIT_OK


def cmd_shift(args) -> int:
    family = read_family(args.input)
    report = shift_to_fixpoint(family, args.l, rename=args.rename)
    _emit_family(report.final, args.output)
    summary = {"rounds": report.rounds, "shifts_applied": report.shifts_applied,
               "renamings": report.renamings, "mapping": list(report.mapping),
               "size": len(report.final), "l": args.l}
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2)
    return EXIT_OK


def cmd_shadow(args) -> int:
    family = read_family(args.input)
    _emit_family(upper_shadow(family) if args.upper else shadow(family), args.output)
    return EXIT_OK


def _parse_subset(text: str | None) -> list[int] | None:
    if text is None:
        return None
    text = text.strip()
    return [int(x) for x in text.replace(",", " ").split()] if text else []


def run_check(args) -> list[dict]:
    family = read_family(args.input)
    check = args.check
    if check == "hz":
        return [V.check_thm_huang_zhao(family).to_dict()]
    if check == "thm2k1":
        return [V.check_thm_2k1(family).to_dict()]
    if check == "thmk2":
        return [V.check_thm_k2(family).to_dict()]
    if check == "cor2.7":
        return [check_cor_2_7(family).to_dict()]
    if check == "lemma3.2":
        return [V.check_lemma_3_2(family, args.l).to_dict()]
    if check == "lemma4.1":
        other = read_family(args.other) if args.other else family
        return [v.to_dict() for v in V.check_cross_size(family, other, args.t)]
    if args.l is None:
        raise InputError(f"--check {check} needs --l")
    if check == "thml1":
        return [V.check_thm_l1(family, args.l).to_dict()]
    if check == "lemma2.10":
        return [V.check_lemma_2_10(family, args.l).to_dict()]
    if check == "cor4.3":
        return [V.check_cor_4_3(family, args.l).to_dict()]
    if check == "lemma4.2":
        s1, s2 = _parse_subset(args.s1), _parse_subset(args.s2)
        if s1 is None and s2 is None:
            return [V.check_lemma_4_2_all(family, args.l).to_dict()]
        v = V.check_lemma_4_2(family, args.l, s1 or [], s2 or [])
        return [{"bound_name": "lemma4.2", "holds": v.holds, "hypothesis_met": v.hypothesis_met,
                 **asdict(v)}]
    raise InputError(f"unknown check {check!r}")


def _verdict_line(d: dict) -> str:
    if d.get("holds") is None:
        status = "hypothesis not met"
    else:
        status = "holds" if d["holds"] else "FAILS"
    parts = [f"{d['bound_name']}: {status}"]
    if d.get("lhs") is not None or d.get("rhs") is not None:
        parts.append(f"lhs={d.get('lhs')} {d.get('relation', '<=')} rhs={d.get('rhs')}")
    if d.get("witness") is not None:
        parts.append(f"witness={d['witness']}")
    if d.get("note"):
        parts.append(f"({d['note']})")
    return "  ".join(parts)


def cmd_verify(args) -> int:
    verdicts = run_check(args)
    if args.json:
        print(json.dumps(verdicts if len(verdicts) > 1 else verdicts[0], sort_keys=True, default=list))
    else:
        for d in verdicts:
            print(_verdict_line(d))
    return EXIT_FAIL if any(d.get("holds") is False for d in verdicts) else EXIT_OK


def cmd_identity(args) -> int:
    failures = V.vandermonde_sweep(args.n_max, args.k_max)
    checked = sum(max(0, args.n_max - 2 * k) for k in range(2, args.k_max + 1))
    if failures:
        print(f"vandermonde: FAILS at {failures}")
        return EXIT_FAIL
    print(f"vandermonde: holds for {checked} (n, k) pairs, 2 <= k <= {args.k_max}, 2k+1 <= n <= {args.n_max}")
    return EXIT_OK


def _default_threads() -> int:
    return max(1, min(os.cpu_count() or 1, MAX_THREADS))


def cmd_search(args) -> int:
    threads = args.threads or _default_threads()
    if args.maximize_index is not None:
        report = maximize_degree(args.k, args.n, args.maximize_index, args.shifted_only,
                                 ell=args.l, t=args.t, cap=args.cap)
    elif args.shifted_only:
        report = pruned_scan(args.k, args.n, True, ell=args.l, t=args.t, cap=args.cap, threads=threads)
    else:
        graph = build_intersection_graph(args.n, args.k, args.t, args.cap)
        report = enumerate_maximal_families(graph, threads=threads)
    path = report.write(args.out)
    maxima = " ".join(f"d{j}={v}" for j, (v, _) in sorted(report.max_d_at_index.items()))
    print(f"{report.families_enumerated} maximal families; max sorted degrees: {maxima}")
    print(f"report: {path}")
    for v in report.bound_violations[:10]:
        print(f"VIOLATION {v['bound_name']}: family {v['family_id']} lhs={v['lhs']} rhs={v['rhs']}")
    return EXIT_FAIL if report.bound_violations else EXIT_OK


def cmd_sweep(args) -> int:
    from .sweeps import SUITES

    print(f"seed={args.seed}")
    failures = SUITES[args.suite](random.Random(args.seed), args.count)
    for line in failures[:20]:
        print(f"VIOLATION {line}")
    print(f"{args.suite}: {args.count} instances, {len(failures)} violations")
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intfam", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family")
    p.add_argument("--name", required=True, choices=CONSTRUCTIONS)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--center", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("degrees", help="print raw and sorted degree profile")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("shift", help="shift to an l-shifted fixpoint")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--rename", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--report")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("shadow", help="shadow or upper shadow")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--upper", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("verify", help="check a degree bound or lemma on a family")
    p.add_argument("--check", required=True, choices=V.CHECKS)
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--other", help="second family for lemma4.1 (default: the input itself)")
    p.add_argument("--s1", help="subset for lemma4.2, e.g. '1,2'")
    p.add_argument("--s2", help="subset for lemma4.2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity-check", help="sweep a binomial identity")
    p.add_argument("--which", choices=("vandermonde",), default="vandermonde")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("search", help="enumerate maximal intersecting families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--shifted-only", action="store_true")
    p.add_argument("--l", type=int, help="shift range for --shifted-only (default k+2)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--maximize-index", type=int, metavar="J",
                   help="only maximize the J-th largest degree, by branch and bound")
    p.add_argument("--threads", type=int, default=0, help="worker processes (default: CPU count, max 8)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", help="randomized property sweep")
    p.add_argument("--suite", choices=("shifting", "lemmas"), required=True)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (CapacityError, ShiftGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntfamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


def main() -> None:
    sys.exit(run())
