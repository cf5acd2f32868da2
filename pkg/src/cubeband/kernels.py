"""Edge-scan kernels over a rank table.

The only hot loop in the package is scanning all n * 2^(n-1) hypercube edges
to find the largest and smallest rank gap of a numbering.  Two
implementations are provided: a numba @njit kernel and a vectorized
pure-numpy fallback.  Set CUBEBAND_DISABLE_NUMBA=1 to force the numpy path
(the numba path is also skipped automatically when numba is not installed).

Both paths are deterministic and return identical results; see
benchmarks/bench_edge_scan.py for a timing comparison.
"""

from __future__ import annotations

import os

import numpy as np

NUMBA_DISABLED = os.environ.get("CUBEBAND_DISABLE_NUMBA", "").lower() in (
    "1",
    "true",
    "yes",
)

HAVE_NUMBA = False
if not NUMBA_DISABLED:
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:
        pass


def span_extremes_numpy(rank: np.ndarray, n: int) -> tuple[int, int]:
    """(max, min) of |rank[u] - rank[v]| over all edges {u, v} of the n-cube.

    rank maps vertex bits to the 1-based number; len(rank) == 2^n.
    """
    idx = np.arange(1 << n, dtype=np.int64)
    hi = 0
    lo = 1 << n
    for b in range(n):
        u = idx[(idx >> b) & 1 == 0]
        d = np.abs(rank[u | (1 << b)] - rank[u])
        hi = max(hi, int(d.max()))
        lo = min(lo, int(d.min()))
    return hi, lo


if HAVE_NUMBA:

    @njit(cache=True)
    def _span_extremes_jit(rank, n):  # pragma: no cover - exercised via wrapper
        hi = np.int64(0)
        lo = np.int64(1) << n
        for u in range(rank.shape[0]):
            for b in range(n):
                if not (u >> b) & 1:
                    d = rank[u | (1 << b)] - rank[u]
                    if d < 0:
                        d = -d
                    if d > hi:
                        hi = d
                    if d < lo:
                        lo = d
        return hi, lo

    def span_extremes(rank: np.ndarray, n: int) -> tuple[int, int]:
        hi, lo = _span_extremes_jit(np.ascontiguousarray(rank, dtype=np.int64), n)
        return int(hi), int(lo)

else:
    span_extremes = span_extremes_numpy
