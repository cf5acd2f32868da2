"""Timing comparison of the numba and pure-numpy edge-scan kernels.

Usage: python benchmarks/bench_edge_scan.py [n] (default 20)
"""

import sys
import time

from cubeband import kernels
from cubeband.hales import layer_table_recursive, numbering_from_table


def bench(fn, rank, n, repeats=5):
    fn(rank, n)  # warm up (jit compile / cache fill)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(rank, n)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 20
    rank = numbering_from_table(layer_table_recursive(n)).rank_array()
    edges = n << (n - 1)

    t_np, r_np = bench(kernels.span_extremes_numpy, rank, n)
    print(f"n={n} ({edges} edges)")
    print(f"numpy : {t_np * 1e3:8.2f} ms  -> {r_np}")
    if kernels.HAVE_NUMBA:
        t_nb, r_nb = bench(kernels.span_extremes, rank, n)
        assert r_nb == r_np
        print(f"numba : {t_nb * 1e3:8.2f} ms  -> {r_nb}  (speedup {t_np / t_nb:.2f}x)")
    else:
        print("numba : unavailable or disabled (CUBEBAND_DISABLE_NUMBA)")


if __name__ == "__main__":
    main()
