"""The Hales order, the Hales numbering, and its recursive layer table.

Two independent construction paths are provided and cross-checked by the
test suite: an explicit comparator sort (hales_numbering) and a sort-free
recursion over weight layers (layer_table_recursive + numbering_from_table).
The recursion is the default used elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DimensionError, check_dim, weight

KINDS = ("hales", "antiband", "custom")


class NumberingError(ValueError):
    """A candidate numbering is not a bijection onto 1..2^n."""


@dataclass
class Numbering:
    """A bijection between the 2^n vertices and {1..2^n}, stored both ways.

    order[p] is the bits of the vertex numbered p + 1; the inverse rank
    table is built once at construction and validated to be a bijection.
    """

    n: int
    kind: str
    order: np.ndarray
    _rank: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        check_dim(self.n)
        if self.kind not in KINDS:
            raise ValueError(f"unknown numbering kind {self.kind!r}")
        size = 1 << self.n
        self.order = np.ascontiguousarray(self.order, dtype=np.int64)
        if self.order.shape != (size,):
            raise NumberingError(
                f"numbering lists {self.order.size} vertices, expected {size}"
            )
        rank = np.zeros(size, dtype=np.int64)
        rank[self.order] = np.arange(1, size + 1, dtype=np.int64)
        if np.count_nonzero(rank) != size:
            raise NumberingError("numbering is not a bijection (repeated vertex)")
        self._rank = rank

    @property
    def size(self) -> int:
        return 1 << self.n

    def rank_array(self) -> np.ndarray:
        """rank_array()[bits] is the 1-based number of that vertex."""
        return self._rank

    def rank(self, v: int) -> int:
        return int(self._rank[v])

    def vertex_at(self, number: int) -> int:
        if not 1 <= number <= self.size:
            raise IndexError(f"number {number} out of range 1..{self.size}")
        return int(self.order[number - 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Numbering):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.order, other.order)


@dataclass
class LayerTable:
    """For each Hamming weight k, the weight-k vertices in Hales order."""

    n: int
    layers: list[np.ndarray]

    def __post_init__(self) -> None:
        check_dim(self.n)
        if len(self.layers) != self.n + 1:
            raise ValueError(
                f"expected {self.n + 1} layers, got {len(self.layers)}"
            )
        self.layers = [np.ascontiguousarray(a, dtype=np.int64) for a in self.layers]

    def layer(self, k: int) -> np.ndarray:
        if not 0 <= k <= self.n:
            raise DimensionError(f"layer index {k} out of range 0..{self.n}")
        return self.layers[k]


def cmp_hales(u: int, v: int) -> int:
    """-1, 0 or 1 as u comes before, equals, or comes after v in Hales order.

    Lower weight first; within a weight, larger numeric bits first (the
    encoding's form of right-to-left decreasing lexicographic order).
    """
    if u == v:
        return 0
    wu, wv = weight(u), weight(v)
    if wu != wv:
        return -1 if wu < wv else 1
    return -1 if u > v else 1


def hales_numbering(n: int) -> Numbering:
    """Hales numbering by comparator sort of all 2^n vertices."""
    check_dim(n)
    bits = np.arange(1 << n, dtype=np.int64)
    weights = np.bitwise_count(bits).astype(np.int64)
    # lexsort: last key is primary; ties on weight broken by decreasing bits
    order = np.lexsort((-bits, weights))
    return Numbering(n=n, kind="hales", order=bits[order])


def layer_table_recursive(n: int) -> LayerTable:
    """Build the weight layers bottom-up in n, with no sorting.

    Layer k of dimension n is layer k-1 of dimension n-1 with the new
    rightmost coordinate set to 1, followed by layer k of dimension n-1
    with it set to 0.  Layers 0 and n are the all-zero and all-one vertex.
    """
    check_dim(n)
    layers = [np.array([0], dtype=np.int64), np.array([1], dtype=np.int64)]
    for m in range(2, n + 1):
        top = 1 << (m - 1)
        new = [np.array([0], dtype=np.int64)]
        for k in range(1, m):
            new.append(np.concatenate((layers[k - 1] | top, layers[k])))
        new.append(np.array([(1 << m) - 1], dtype=np.int64))
        layers = new
    return LayerTable(n=n, layers=layers)


def numbering_from_table(table: LayerTable) -> Numbering:
    """Number the vertices 1..2^n by concatenating layers 0..n."""
    return Numbering(
        n=table.n, kind="hales", order=np.concatenate(table.layers)
    )
