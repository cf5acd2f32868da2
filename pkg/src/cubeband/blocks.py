"""Layer-pair adjacency blocks, their recursions, radii and diagonal gaps.

Blocks are stored as sorted coordinate lists; the full 2^n x 2^n adjacency
matrix only ever exists as a block layout plus a stream of edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Literal

from . import kernels
from .core import DELTA_DIM_MAX, DimensionError, check_dim
from .formulas import binomial
from .hales import LayerTable, Numbering, layer_table_recursive
from .layout import even_odd_layer_order


class EmptyBlockError(ValueError):
    """Manhattan radius requested for an all-zero block (r is undefined,
    and silently returning 0 would corrupt the max/min algebra)."""


@dataclass(frozen=True)
class SparseBlock:
    """0/1 matrix as a row-major sorted list of 1-based (i, j) nonzeros."""

    rows: int
    cols: int
    nz: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i, j in self.nz:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise ValueError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        if list(self.nz) != sorted(set(self.nz)):
            raise ValueError("nonzeros must be sorted row-major without duplicates")

    @property
    def nnz(self) -> int:
        return len(self.nz)

    def transpose(self) -> "SparseBlock":
        return SparseBlock(
            rows=self.cols,
            cols=self.rows,
            nz=tuple(sorted((j, i) for i, j in self.nz)),
        )


@dataclass(frozen=True)
class BlockLayout:
    """Global row/column offsets of the weight layers in a 2^n x 2^n matrix."""

    n: int
    order: tuple[int, ...]
    offsets: dict[int, int]

    def offset(self, k: int) -> int:
        if k not in self.offsets:
            raise DimensionError(f"layer {k} not in layout for n={self.n}")
        return self.offsets[k]


Ordering = Literal["standard", "even_odd"]


def block_offsets(n: int, ordering: Ordering = "standard") -> BlockLayout:
    """Prefix-sum offsets of the layer sizes C(n, k) in the given layer order."""
    check_dim(n)
    if ordering == "standard":
        order = list(range(n + 1))
    elif ordering == "even_odd":
        order = even_odd_layer_order(n)
    else:
        raise ValueError(f"unknown ordering {ordering!r}")
    offsets: dict[int, int] = {}
    total = 0
    for k in order:
        offsets[k] = total
        total += binomial(n, k)
    assert total == 1 << n
    return BlockLayout(n=n, order=tuple(order), offsets=offsets)


def layer_adjacency(table: LayerTable, k: int, k2: int) -> SparseBlock:
    """Adjacency block between layers k and k2, built from the definition:
    entry (i, j) is nonzero iff the i-th weight-k vertex and the j-th
    weight-k2 vertex differ in exactly one coordinate."""
    a = table.layer(k)
    b = table.layer(k2)
    nz: list[tuple[int, int]] = []
    if abs(k - k2) == 1:
        pos = {int(v): j for j, v in enumerate(b, start=1)}
        for i, u in enumerate(a, start=1):
            u = int(u)
            for bit in range(table.n):
                j = pos.get(u ^ (1 << bit))
                if j is not None:
                    nz.append((i, j))
    return SparseBlock(rows=len(a), cols=len(b), nz=tuple(sorted(nz)))


@lru_cache(maxsize=None)
def upper_block_recursive(n: int, k: int) -> SparseBlock:
    """Block between layers k and k+1 built purely by recursion:
    top-left the (n-1, k-1) upper block, top-right zero, bottom-left the
    identity of size C(n-1, k), bottom-right the (n-1, k) upper block.
    Base: the k = 0 block is a 1 x n all-ones row."""
    check_dim(n)
    if not 0 <= k <= n - 1:
        raise DimensionError(f"upper block needs 0 <= k <= n-1, got k={k}, n={n}")
    if k == 0:
        return SparseBlock(rows=1, cols=n, nz=tuple((1, j) for j in range(1, n + 1)))
    rows = binomial(n, k)
    cols = binomial(n, k + 1)
    top = upper_block_recursive(n - 1, k - 1)
    r_off = top.rows  # C(n-1, k-1)
    ident = binomial(n - 1, k)
    nz = list(top.nz)
    nz.extend((r_off + i, i) for i in range(1, ident + 1))
    if k <= n - 2:
        bottom = upper_block_recursive(n - 1, k)
        nz.extend((r_off + i, ident + j) for i, j in bottom.nz)
    return SparseBlock(rows=rows, cols=cols, nz=tuple(sorted(nz)))


@lru_cache(maxsize=None)
def lower_block_recursive(n: int, k: int) -> SparseBlock:
    """Block between layers k and k-1 built purely by recursion:
    top-left the (n-1, k-1) lower block, top-right the identity of size
    C(n-1, k-1), bottom-left zero, bottom-right the (n-1, k) lower block.
    Base: the k = 1 block is an n x 1 all-ones column."""
    check_dim(n)
    if not 1 <= k <= n:
        raise DimensionError(f"lower block needs 1 <= k <= n, got k={k}, n={n}")
    if k == 1:
        return SparseBlock(rows=n, cols=1, nz=tuple((i, 1) for i in range(1, n + 1)))
    rows = binomial(n, k)
    cols = binomial(n, k - 1)
    ident = binomial(n - 1, k - 1)
    c_off = binomial(n - 1, k - 2)
    nz: list[tuple[int, int]] = []
    if k - 1 <= n - 1:
        top = lower_block_recursive(n - 1, k - 1)
        nz.extend(top.nz)
    nz.extend((i, c_off + i) for i in range(1, ident + 1))
    if k <= n - 1:
        bottom = lower_block_recursive(n - 1, k)
        nz.extend((ident + i, c_off + j) for i, j in bottom.nz)
    return SparseBlock(rows=rows, cols=cols, nz=tuple(sorted(nz)))


def manhattan_radius(block: SparseBlock) -> int:
    """max(rows - i + j) over nonzeros: the Manhattan distance from the
    farthest nonzero to the imaginary anchor element at (rows, 0)."""
    if not block.nz:
        raise EmptyBlockError("Manhattan radius is undefined for an all-zero block")
    return max(block.rows - i + j for i, j in block.nz)


def matrix_bandwidth(num: Numbering) -> int:
    """Bandwidth of the full adjacency matrix under num, streamed edge by
    edge (max |i - j| over nonzeros, never materialized)."""
    hi, _ = kernels.span_extremes(num.rank_array(), num.n)
    return hi


def delta(n: int, k: int, k2: int, table: LayerTable | None = None) -> int:
    """Minimum Manhattan distance from a nonzero of block (k, k2) to the
    main diagonal of the even-then-odd permuted adjacency matrix."""
    check_dim(n, DELTA_DIM_MAX)
    if abs(k - k2) != 1:
        raise DimensionError(f"delta needs |k - k2| = 1, got ({k}, {k2})")
    if table is None:
        table = layer_table_recursive(n)
    block = layer_adjacency(table, k, k2)
    if not block.nz:
        raise EmptyBlockError(f"block ({k}, {k2}) of n={n} is empty")
    layout = block_offsets(n, "even_odd")
    r_off = layout.offset(k)
    c_off = layout.offset(k2)
    return min(abs((r_off + i) - (c_off + j)) for i, j in block.nz)


def write_matrix_market_block(block: SparseBlock, fh: IO[str]) -> None:
    fh.write("%%MatrixMarket matrix coordinate pattern general\n")
    fh.write(f"{block.rows} {block.cols} {block.nnz}\n")
    for i, j in block.nz:
        fh.write(f"{i} {j}\n")


def write_matrix_market_full(num: Numbering, fh: IO[str]) -> None:
    """Full adjacency matrix under num as a symmetric pattern, lower
    triangle only, row-major sorted."""
    rank = num.rank_array()
    entries = []
    for u in range(1 << num.n):
        for b in range(num.n):
            if not (u >> b) & 1:
                ri = int(rank[u])
                rj = int(rank[u | (1 << b)])
                entries.append((max(ri, rj), min(ri, rj)))
    entries.sort()
    fh.write("%%MatrixMarket matrix coordinate pattern symmetric\n")
    fh.write(f"{num.size} {num.size} {len(entries)}\n")
    for i, j in entries:
        fh.write(f"{i} {j}\n")
