"""Cross-check suite: every structural identity the package relies on,
run at desk scale and reported as a flat list of pass/fail records.

Each record is {"check", "n", "expected", "actual", "pass"}; the record
order and the JSON rendering in the CLI are deterministic.
"""

from __future__ import annotations

from typing import Any

from . import formulas, layout, oracle
from .blocks import (
    delta,
    layer_adjacency,
    lower_block_recursive,
    manhattan_radius,
    upper_block_recursive,
)
from .core import ORACLE_DIM_MAX, check_dim
from .hales import hales_numbering, layer_table_recursive, numbering_from_table

VERIFY_DIM_MAX = 20

# Internal caps per check family (structural checks stay cheap).
LEMMA5_CAP = 12
BLOCK_CAP = 10
RADIUS_CAP = 12
DELTA_CAP = 12
REMARK8_CAP = 8

Record = dict[str, Any]


def _rec(check: str, n: int, expected: Any, actual: Any) -> Record:
    return {
        "check": check,
        "n": n,
        "expected": expected,
        "actual": actual,
        "pass": expected == actual,
    }


def run_checks(n_max: int) -> list[Record]:
    check_dim(n_max, VERIFY_DIM_MAX)
    records: list[Record] = []
    for n in range(1, n_max + 1):
        records.extend(_checks_for(n))
    return records


def _checks_for(n: int) -> list[Record]:
    recs: list[Record] = []
    table = layer_table_recursive(n)
    hales = numbering_from_table(table)
    antiband = layout.antiband_numbering(n, table)

    bw = layout.bandwidth_of(hales)
    abw = layout.antibandwidth_of(antiband)
    recs.append(_rec("bandwidth_formula", n, formulas.hypercube_bandwidth(n), bw))
    recs.append(
        _rec("antibandwidth_formula", n, formulas.hypercube_antibandwidth(n), abw)
    )

    if n <= LEMMA5_CAP:
        same = hales == hales_numbering(n)
        recs.append(_rec("lemma5_numbering_equivalence", n, True, same))

    if n <= BLOCK_CAP:
        up_bad = sum(
            upper_block_recursive(n, k) != layer_adjacency(table, k, k + 1)
            for k in range(n)
        )
        recs.append(_rec("upper_block_recursion", n, 0, up_bad))
        down_bad = sum(
            lower_block_recursive(n, k) != layer_adjacency(table, k, k - 1)
            for k in range(1, n + 1)
        )
        recs.append(_rec("lower_block_recursion", n, 0, down_bad))
        far_nonzero = sum(
            layer_adjacency(table, k, k2).nnz
            for k in range(n + 1)
            for k2 in range(n + 1)
            if abs(k - k2) != 1
        )
        recs.append(_rec("tridiagonal_zero_blocks", n, 0, far_nonzero))
        transpose_bad = sum(
            layer_adjacency(table, k, k + 1).transpose()
            != layer_adjacency(table, k + 1, k)
            for k in range(n)
        )
        recs.append(_rec("transpose_symmetry", n, 0, transpose_bad))
        ident_bad = 0
        for k in range(1, n):
            block = upper_block_recursive(n, k)
            size = formulas.binomial(n - 1, k)
            r_off = formulas.binomial(n - 1, k - 1)
            corner = {
                (i - r_off, j)
                for i, j in block.nz
                if i > r_off and j <= size
            }
            if corner != {(i, i) for i in range(1, size + 1)}:
                ident_bad += 1
        recs.append(_rec("identity_subblock", n, 0, ident_bad))

    if n <= RADIUS_CAP:
        up_bad = sum(
            formulas.radius_up(n, k) != manhattan_radius(upper_block_recursive(n, k))
            for k in range(n)
        )
        recs.append(_rec("radius_up_identity", n, 0, up_bad))
        down_bad = sum(
            formulas.radius_down_closed(n, k)
            != manhattan_radius(lower_block_recursive(n, k))
            for k in range(1, n + 1)
        )
        recs.append(_rec("radius_down_identity", n, 0, down_bad))
        radii = [formulas.radius_up(n, k) for k in range(n)]
        recs.append(
            _rec("radius_max_is_bandwidth", n, formulas.hypercube_bandwidth(n), max(radii))
        )
        recs.append(
            _rec("radius_max_attained_at_half", n, max(radii), radii[n // 2])
        )

    if 2 <= n <= DELTA_CAP:
        odd_down = range(1, 2 * ((n - 1) // 2) + 2, 2)
        down_vals = sorted({delta(n, k, k - 1, table) for k in odd_down})
        recs.append(_rec("delta_down_constant", n, [1 << (n - 1)], down_vals))
        odd_up = range(1, 2 * (n // 2), 2)
        up_min = min(delta(n, k, k + 1, table) for k in odd_up)
        recs.append(
            _rec("delta_up_min", n, formulas.hypercube_antibandwidth(n), up_min)
        )
        combined = min(min(down_vals), up_min)
        recs.append(
            _rec(
                "delta_combined_antibandwidth",
                n,
                formulas.hypercube_antibandwidth(n),
                combined,
            )
        )

    if n <= ORACLE_DIM_MAX:
        value, _ = oracle.brute_force_bandwidth(n)
        recs.append(_rec("oracle_bandwidth", n, bw, value))
        value, _ = oracle.brute_force_antibandwidth(n)
        recs.append(_rec("oracle_antibandwidth", n, abw, value))

    if n <= REMARK8_CAP:
        for num, label in ((hales, "hales"), (antiband, "antiband")):
            mat = oracle.adjacency_from_definition(num)
            mat_bw = max(abs(i - j) for i, j in mat.nz)
            recs.append(
                _rec(f"remark8_matrix_bandwidth_{label}", n, layout.bandwidth_of(num), mat_bw)
            )

    return recs
