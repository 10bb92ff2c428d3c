"""Plain-text family format.

::

    # comments and blank lines are ignored
    n k
    1 2 3
    1 2 4

The header gives the ground set size and uniformity; each further line is one
member as ascending 1-based elements separated by spaces.  Writers always emit
members in colex order.
"""

from __future__ import annotations

import os
from typing import Iterable

from .combinatorics import elements_of
from .errors import InputError, ParseError
from .family import SetFamily


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(fields)!r}", lineno) from None


def parse_family(text: str) -> SetFamily:
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n k' header") from None
    values = _ints(header, lineno)
    if len(values) != 2:
        raise ParseError("header must be exactly 'n k'", lineno)
    n, k = values
    try:
        SetFamily(n, k)
    except InputError as exc:
        raise ParseError(str(exc), lineno) from None
    members = []
    seen: dict[int, int] = {}
    for lineno, fields in lines:
        elems = _ints(fields, lineno)
        if len(elems) != k:
            raise ParseError(f"member has {len(elems)} elements, expected {k}", lineno)
        if any(not 1 <= e <= n for e in elems):
            raise ParseError(f"element outside [1, {n}]", lineno)
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ParseError("elements must be strictly ascending", lineno)
        bits = 0
        for e in elems:
            bits |= 1 << (e - 1)
        if bits in seen:
            raise ParseError(f"duplicate member (first seen on line {seen[bits]})", lineno)
        seen[bits] = lineno
        members.append(bits)
    return SetFamily(n, k, members)


def format_family(family: SetFamily) -> str:
    out = [f"{family.n} {family.k}"]
    out.extend(" ".join(map(str, elements_of(b))) for b in family.bits)
    return "\n".join(out) + "\n"


def read_family(path: str | os.PathLike[str]) -> SetFamily:
    with open(path, encoding="utf-8") as fh:
        return parse_family(fh.read())


def write_family(family: SetFamily, path: str | os.PathLike[str]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_family(family))
