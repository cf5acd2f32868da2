"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  All equalities are exact (integer arithmetic, tolerance 0).
"""

import json
import subprocess
import sys

from cubeband import formulas, layout, oracle, verify
from cubeband.blocks import (
    delta,
    layer_adjacency,
    lower_block_recursive,
    manhattan_radius,
    upper_block_recursive,
)
from cubeband.hales import (
    hales_numbering,
    layer_table_recursive,
    numbering_from_table,
)


def _report(name: str, ok: bool) -> bool:
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    return ok


def test_criterion_1_closed_form_bandwidth():
    expected_spot = {1: 1, 2: 2, 3: 4, 4: 7, 5: 13, 10: 274}
    ok = True
    for n in range(1, 21):
        num = numbering_from_table(layer_table_recursive(n))
        bw = layout.bandwidth_of(num)
        ok &= bw == formulas.hypercube_bandwidth(n)
        if n in expected_spot:
            ok &= bw == expected_spot[n]
    assert _report("1 closed-form bandwidth n=1..20", ok)


def test_criterion_2_closed_form_antibandwidth():
    expected_spot = {1: 1, 2: 1, 3: 2, 4: 4, 5: 9, 10: 364}
    ok = True
    for n in range(1, 21):
        abw = layout.antibandwidth_of(layout.antiband_numbering(n))
        ok &= abw == formulas.hypercube_antibandwidth(n)
        if n in expected_spot:
            ok &= abw == expected_spot[n]
    assert _report("2 closed-form antibandwidth n=1..20", ok)


def test_criterion_3_oracle_optimality():
    expected_bw = {1: 1, 2: 2, 3: 4}
    expected_abw = {1: 1, 2: 1, 3: 2}
    ok = True
    for n in (1, 2, 3):
        bw_opt, _ = oracle.brute_force_bandwidth(n)
        abw_opt, _ = oracle.brute_force_antibandwidth(n)
        ok &= bw_opt == expected_bw[n] == layout.bandwidth_of(hales_numbering(n))
        ok &= abw_opt == expected_abw[n] == layout.antibandwidth_of(
            layout.antiband_numbering(n)
        )
    assert _report("3 brute-force optimality n=1..3", ok)


def test_criterion_4_layer_recursion_equivalence():
    ok = all(
        numbering_from_table(layer_table_recursive(n)) == hales_numbering(n)
        for n in range(1, 13)
    )
    assert _report("4 layer recursion vs comparator sort n=1..12", ok)


def test_criterion_5_block_recursion_equivalence():
    ok = True
    for n in range(1, 11):
        table = layer_table_recursive(n)
        for k in range(n):
            ok &= upper_block_recursive(n, k) == layer_adjacency(table, k, k + 1)
        for k in range(1, n + 1):
            ok &= lower_block_recursive(n, k) == layer_adjacency(table, k, k - 1)
    assert _report("5 block recursions vs definition n=1..10", ok)


def test_criterion_6_radius_identities():
    ok = True
    for n in range(1, 13):
        radii = []
        for k in range(n):
            r = manhattan_radius(upper_block_recursive(n, k))
            ok &= formulas.radius_up(n, k) == r
            radii.append(r)
        for k in range(1, n + 1):
            ok &= formulas.radius_down_closed(n, k) == manhattan_radius(
                lower_block_recursive(n, k)
            )
        bw = formulas.hypercube_bandwidth(n)
        ok &= max(radii) == bw and radii[n // 2] == bw
    assert _report("6 radius recursion/closed-form identities n=1..12", ok)


def test_criterion_7_delta_identities():
    ok = True
    for n in range(2, 13):
        table = layer_table_recursive(n)
        down = [
            delta(n, k, k - 1, table)
            for k in range(1, 2 * ((n - 1) // 2) + 2, 2)
        ]
        ok &= all(d == 1 << (n - 1) for d in down)
        up = [delta(n, k, k + 1, table) for k in range(1, 2 * (n // 2), 2)]
        target = (1 << (n - 1)) - formulas.central_binomial_sum(n - 1)
        ok &= min(up) == target
        ok &= min(min(down), min(up)) == formulas.hypercube_antibandwidth(n)
    assert _report("7 diagonal-distance identities n=2..12", ok)


def test_criterion_8_matrix_equals_edge_scan():
    ok = True
    for n in range(1, 9):
        for num in (hales_numbering(n), layout.antiband_numbering(n)):
            mat = oracle.adjacency_from_definition(num)
            ok &= max(abs(i - j) for i, j in mat.nz) == layout.bandwidth_of(num)
    assert _report("8 materialized matrix bandwidth equals edge scan n=1..8", ok)


def test_criterion_9_verify_deterministic(tmp_path):
    outputs = []
    codes = []
    for run in range(2):
        result = subprocess.run(
            [sys.executable, "-m", "cubeband.cli", "verify", "--n-max", "12", "--quiet"],
            capture_output=True,
        )
        outputs.append(result.stdout)
        codes.append(result.returncode)
    records = json.loads(outputs[0])
    ok = (
        codes == [0, 0]
        and outputs[0] == outputs[1]
        and all(r["pass"] for r in records)
    )
    assert _report("9 verify --n-max 12 deterministic and green", ok)
