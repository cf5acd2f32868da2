"""Exact closed forms: binomials, bandwidth/antibandwidth of the n-cube,
and Manhattan-radius recursions for the layer-pair blocks.

All arithmetic is Python big-integer arithmetic, so the formula range goes
far beyond the enumeration caps (n up to 512).
"""

from __future__ import annotations

import math
from functools import lru_cache

from .core import FORMULA_DIM_MAX, DimensionError, check_dim


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 for k < 0 or k > n.

    The out-of-range-zero convention is load-bearing: the closed form for
    the down-block radius evaluates C(n-1, k-2) at k = 1.
    """
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def central_binomial_sum(terms: int) -> int:
    """Sum of C(m, floor(m/2)) for m = 0 .. terms-1 (empty sum is 0)."""
    return sum(math.comb(m, m // 2) for m in range(terms))


def hypercube_bandwidth(n: int) -> int:
    """Optimal bandwidth of the n-cube."""
    check_dim(n, FORMULA_DIM_MAX)
    return central_binomial_sum(n)


def hypercube_antibandwidth(n: int) -> int:
    """Optimal antibandwidth of the n-cube."""
    check_dim(n, FORMULA_DIM_MAX)
    return (1 << (n - 1)) - central_binomial_sum(n - 1)


@lru_cache(maxsize=None)
def radius_up(n: int, k: int) -> int:
    """Manhattan radius of the weight-k to weight-(k+1) block, by recursion.

    For k >= 1 the radius is C(n-1, k) plus the larger of the two
    sub-block radii from the previous dimension.  The k = 0 block is a
    1 x n all-ones row whose radius is n by the anchor definition (the
    value 1 sometimes quoted for it ignores the column offset; see the
    test suite).
    """
    check_dim(n, FORMULA_DIM_MAX)
    if not 0 <= k <= n - 1:
        raise DimensionError(f"radius_up needs 0 <= k <= n-1, got k={k}, n={n}")
    if k == 0:
        return n
    sub = [radius_up(n - 1, k - 1)]
    if k <= n - 2:
        sub.append(radius_up(n - 1, k))
    return binomial(n - 1, k) + max(sub)


def radius_down_closed(n: int, k: int) -> int:
    """Manhattan radius of the weight-k to weight-(k-1) block, closed form:
    C(n-1, k) + C(n-1, k-2) + C(n-1, k-1)."""
    check_dim(n, FORMULA_DIM_MAX)
    if not 1 <= k <= n:
        raise DimensionError(f"radius_down needs 1 <= k <= n, got k={k}, n={n}")
    return binomial(n - 1, k) + binomial(n - 1, k - 2) + binomial(n - 1, k - 1)
