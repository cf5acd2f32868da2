import math
import random

import pytest

from cubeband import formulas
from cubeband.blocks import (
    lower_block_recursive,
    manhattan_radius,
    upper_block_recursive,
)


def test_binomial_examples():
    assert formulas.binomial(4, 2) == 6
    assert formulas.binomial(3, -1) == 0
    assert formulas.binomial(10, 5) == 252
    assert formulas.binomial(5, 7) == 0
    with pytest.raises(ValueError):
        formulas.binomial(-1, 0)


def test_pascal_identity():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randrange(1, 200)
        k = rng.randrange(0, n + 1)
        assert formulas.binomial(n, k) == formulas.binomial(n - 1, k - 1) + formulas.binomial(n - 1, k)
    for n in range(1, 40):
        assert sum(formulas.binomial(n - 1, k) for k in range(n)) == 1 << (n - 1)


def test_bandwidth_values():
    assert formulas.hypercube_bandwidth(1) == 1
    assert formulas.hypercube_bandwidth(3) == 4
    assert formulas.hypercube_bandwidth(4) == 7
    assert formulas.hypercube_bandwidth(10) == 274


def test_antibandwidth_values():
    assert formulas.hypercube_antibandwidth(1) == 1
    assert formulas.hypercube_antibandwidth(3) == 2
    assert formulas.hypercube_antibandwidth(5) == 9
    assert formulas.hypercube_antibandwidth(10) == 364


def test_formula_range():
    # exact big-integer arithmetic far beyond enumeration scale
    v = formulas.hypercube_bandwidth(512)
    assert v == sum(math.comb(m, m // 2) for m in range(512))
    assert formulas.hypercube_antibandwidth(512) == (1 << 511) - sum(
        math.comb(m, m // 2) for m in range(511)
    )
    with pytest.raises(ValueError):
        formulas.hypercube_bandwidth(513)
    with pytest.raises(ValueError):
        formulas.hypercube_bandwidth(0)


def test_radius_up_examples():
    assert formulas.radius_up(1, 0) == 1
    assert formulas.radius_up(3, 1) == 4
    assert formulas.radius_up(5, 2) == 13 == sum(math.comb(m, m // 2) for m in range(5))


def test_radius_up_k0_uses_anchor_definition():
    # a 1 x n all-ones row has radius n under the anchor definition
    for n in range(2, 8):
        assert formulas.radius_up(n, 0) == n


def test_radius_down_examples():
    assert formulas.radius_down_closed(2, 1) == 2
    assert formulas.radius_down_closed(3, 2) == 4
    for n in range(2, 10):
        assert formulas.radius_down_closed(n, 1) == formulas.binomial(
            n - 1, 1
        ) + formulas.binomial(n - 1, 0)


@pytest.mark.parametrize("n", range(1, 13))
def test_radius_up_matches_direct(n):
    for k in range(n):
        assert formulas.radius_up(n, k) == manhattan_radius(upper_block_recursive(n, k))


@pytest.mark.parametrize("n", range(1, 13))
def test_radius_down_matches_direct(n):
    for k in range(1, n + 1):
        assert formulas.radius_down_closed(n, k) == manhattan_radius(
            lower_block_recursive(n, k)
        )


@pytest.mark.parametrize("n", range(1, 13))
def test_radius_max_at_middle(n):
    radii = [formulas.radius_up(n, k) for k in range(n)]
    bw = formulas.hypercube_bandwidth(n)
    assert max(radii) == bw
    assert radii[n // 2] == bw
    assert all(r <= bw for r in radii)


def test_monotonicity():
    for n in range(2, 65):
        assert formulas.hypercube_bandwidth(n) > formulas.hypercube_bandwidth(n - 1)
        if n >= 3:
            assert formulas.hypercube_antibandwidth(n) > formulas.hypercube_antibandwidth(n - 1)
