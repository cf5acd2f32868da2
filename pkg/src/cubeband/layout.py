"""Bandwidth / antibandwidth evaluation and the even-then-odd numbering.

Evaluators stream the edges of the cube through the rank table; the full
adjacency matrix is never materialized.  Numbering files use one header
line followed by one "<bitstring>\\t<number>" line per vertex, sorted by
number.
"""

from __future__ import annotations

import re
from typing import IO

import numpy as np

from . import kernels
from .core import check_dim, format_vertex, parse_vertex
from .hales import LayerTable, Numbering, NumberingError, layer_table_recursive

_HEADER_RE = re.compile(r"^# cubeband numbering n=(\d+) kind=(\w+)$")


class NumberingFileError(ValueError):
    """Malformed numbering file; carries the offending 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def bandwidth_of(num: Numbering) -> int:
    """max |rank(u) - rank(v)| over all edges {u, v}."""
    hi, _ = kernels.span_extremes(num.rank_array(), num.n)
    return hi


def antibandwidth_of(num: Numbering) -> int:
    """min |rank(u) - rank(v)| over all edges {u, v}."""
    _, lo = kernels.span_extremes(num.rank_array(), num.n)
    return lo


def even_odd_layer_order(n: int) -> list[int]:
    """Even weights ascending, then odd weights ascending."""
    return list(range(0, n + 1, 2)) + list(range(1, n + 1, 2))


def antiband_numbering(n: int, table: LayerTable | None = None) -> Numbering:
    """Antibandwidth-optimal numbering: even layers first, then odd layers,
    each in Hales order."""
    check_dim(n)
    if table is None:
        table = layer_table_recursive(n)
    order = np.concatenate([table.layer(k) for k in even_odd_layer_order(n)])
    return Numbering(n=n, kind="antiband", order=order)


def write_numbering(num: Numbering, fh: IO[str]) -> None:
    fh.write(f"# cubeband numbering n={num.n} kind={num.kind}\n")
    for v in num.order:
        fh.write(f"{format_vertex(int(v), num.n)}\t{num.rank(int(v))}\n")


def read_numbering(fh: IO[str]) -> Numbering:
    """Parse and validate a numbering file; malformed input and
    non-bijective numberings are rejected with the offending line number."""
    header = fh.readline().rstrip("\n")
    m = _HEADER_RE.match(header)
    if not m:
        raise NumberingFileError(1, f"bad header {header!r}")
    n = int(m.group(1))
    kind = m.group(2)
    try:
        check_dim(n)
    except ValueError as exc:
        raise NumberingFileError(1, str(exc)) from exc
    if kind not in ("hales", "antiband", "custom"):
        raise NumberingFileError(1, f"unknown kind {kind!r}")
    size = 1 << n
    order = np.zeros(size, dtype=np.int64)
    seen_numbers = np.zeros(size + 1, dtype=bool)
    count = 0
    for lineno, line in enumerate(fh, start=2):
        line = line.rstrip("\n")
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise NumberingFileError(lineno, f"expected '<bits>\\t<number>', got {line!r}")
        try:
            v = parse_vertex(parts[0], n)
        except ValueError as exc:
            raise NumberingFileError(lineno, str(exc)) from exc
        try:
            number = int(parts[1])
        except ValueError as exc:
            raise NumberingFileError(lineno, f"bad number {parts[1]!r}") from exc
        if not 1 <= number <= size:
            raise NumberingFileError(lineno, f"number {number} out of range 1..{size}")
        if seen_numbers[number]:
            raise NumberingFileError(lineno, f"number {number} assigned twice")
        if number != count + 1:
            raise NumberingFileError(lineno, f"numbers out of order (expected {count + 1})")
        seen_numbers[number] = True
        order[number - 1] = v
        count += 1
    if count != size:
        raise NumberingFileError(count + 1, f"file lists {count} vertices, expected {size}")
    try:
        return Numbering(n=n, kind=kind, order=order)
    except NumberingError as exc:
        raise NumberingFileError(2, str(exc)) from exc
