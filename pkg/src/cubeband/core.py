"""Hypercube primitives: vertex encoding, Hamming weight, neighbors, edges.

A vertex of the n-cube is an n-bit coordinate tuple c_1 c_2 ... c_n, stored
as a plain unsigned integer with c_1 at bit position 0 (least significant).
With this encoding, comparing two equal-weight vertices numerically is the
same as comparing their coordinate strings right-to-left, which is exactly
the tie-break the Hales order needs.
"""

from __future__ import annotations

from typing import Iterator

# Resource guards.  Enumeration of vertices or edges is capped well below
# the exact-arithmetic formula range.
ENUM_DIM_MAX = 28
FORMULA_DIM_MAX = 512
DELTA_DIM_MAX = 20
FULL_MATRIX_DIM_MAX = 10
ORACLE_DIM_MAX = 3


class CubebandError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(CubebandError, ValueError):
    """Dimension outside the supported range for the requested operation."""


class VertexFormatError(CubebandError, ValueError):
    """A textual vertex is not a valid n-character bitstring."""


def check_dim(n: int, limit: int = ENUM_DIM_MAX) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DimensionError(f"dimension must be an integer, got {n!r}")
    if not 1 <= n <= limit:
        raise DimensionError(f"dimension {n} outside supported range 1..{limit}")
    return n


def weight(v: int) -> int:
    """Hamming weight (number of 1-coordinates) of a vertex."""
    return int(v).bit_count()


def neighbors(v: int, n: int) -> list[int]:
    """The n vertices at Hamming distance 1 from v.

    Ordered by increasing index of the flipped coordinate (c_1 first).
    """
    check_dim(n)
    if not 0 <= v < (1 << n):
        raise DimensionError(f"vertex {v} out of range for dimension {n}")
    return [v ^ (1 << i) for i in range(n)]


def edges(n: int) -> Iterator[tuple[int, int]]:
    """All n * 2^(n-1) edges of the n-cube, each yielded once as (u, v) with
    u < v, in ascending u then ascending flipped-coordinate order."""
    check_dim(n)
    for u in range(1 << n):
        for i in range(n):
            if not (u >> i) & 1:
                yield u, u | (1 << i)


def edge_count(n: int) -> int:
    check_dim(n, FORMULA_DIM_MAX)
    return n << (n - 1)


def parse_vertex(text: str, n: int) -> int:
    """Decode a bitstring c_1 c_2 ... c_n (leftmost character is c_1)."""
    check_dim(n)
    if len(text) != n:
        raise VertexFormatError(
            f"vertex {text!r} has length {len(text)}, expected {n}"
        )
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise VertexFormatError(f"illegal character {ch!r} in vertex {text!r}")
    return bits


def format_vertex(v: int, n: int) -> str:
    """Inverse of parse_vertex."""
    check_dim(n)
    if not 0 <= v < (1 << n):
        raise DimensionError(f"vertex {v} out of range for dimension {n}")
    return "".join("1" if (v >> i) & 1 else "0" for i in range(n))
