"""Brute-force ground truth for tiny cubes.

Exhaustive search over all (2^n)! numberings with early pruning; only
feasible for n <= 3 (40320 permutations), which is exactly the scale at
which the constructed numberings' optimality is cross-checked.
"""

from __future__ import annotations

import numpy as np

from .core import FULL_MATRIX_DIM_MAX, ORACLE_DIM_MAX, DimensionError, check_dim
from .blocks import SparseBlock
from .hales import Numbering


def _search(n: int, maximize_min: bool) -> tuple[int, list[int]]:
    """DFS over assignments of vertices to positions 1, 2, ..., 2^n in
    lexicographic order (ascending vertex bits tried first at each
    position).  Prunes a partial assignment as soon as a placed edge can no
    longer beat the incumbent, so the first full assignment recorded at the
    final optimum is the lexicographically first optimal numbering."""
    size = 1 << n
    nbr_masks = [tuple(v ^ (1 << b) for b in range(n)) for v in range(size)]
    pos = [-1] * size  # vertex -> 0-based position, -1 if unplaced
    assigned: list[int] = []
    best = size if not maximize_min else 0
    witness: list[int] = []

    def extend(p: int, partial_extreme: int) -> None:
        nonlocal best, witness
        if p == size:
            # best may have improved mid-branch; only record strict wins
            better = partial_extreme > best if maximize_min else partial_extreme < best
            if better:
                best = partial_extreme
                witness = assigned.copy()
            return
        for v in range(size):
            if pos[v] >= 0:
                continue
            ext = partial_extreme
            ok = True
            for u in nbr_masks[v]:
                if pos[u] >= 0:
                    gap = p - pos[u]
                    if maximize_min:
                        if gap <= best:
                            ok = False
                            break
                        ext = min(ext, gap)
                    else:
                        if gap >= best:
                            ok = False
                            break
                        ext = max(ext, gap)
            if ok:
                pos[v] = p
                assigned.append(v)
                extend(p + 1, ext)
                assigned.pop()
                pos[v] = -1

    extend(0, 0 if not maximize_min else size)
    return best, witness


def brute_force_bandwidth(n: int) -> tuple[int, Numbering]:
    """Exact minimum bandwidth over all numberings, with the
    lexicographically first witness attaining it."""
    check_dim(n, ORACLE_DIM_MAX)
    value, order = _search(n, maximize_min=False)
    return value, Numbering(n=n, kind="custom", order=np.array(order, dtype=np.int64))


def brute_force_antibandwidth(n: int) -> tuple[int, Numbering]:
    """Exact maximum antibandwidth over all numberings, with the
    lexicographically first witness attaining it."""
    check_dim(n, ORACLE_DIM_MAX)
    value, order = _search(n, maximize_min=True)
    return value, Numbering(n=n, kind="custom", order=np.array(order, dtype=np.int64))


def adjacency_from_definition(num: Numbering) -> SparseBlock:
    """The full 2^n-square adjacency matrix under num, materialized as a
    coordinate list straight from the definition.  Only for small n."""
    if num.n > FULL_MATRIX_DIM_MAX:
        raise DimensionError(
            f"full adjacency materialization capped at n={FULL_MATRIX_DIM_MAX}"
        )
    rank = num.rank_array()
    size = 1 << num.n
    nz = []
    for u in range(size):
        ru = int(rank[u])
        for b in range(num.n):
            nz.append((ru, int(rank[u ^ (1 << b)])))
    return SparseBlock(rows=size, cols=size, nz=tuple(sorted(nz)))
