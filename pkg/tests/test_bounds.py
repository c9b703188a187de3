from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binlrc.bounds import ceil_log2, ell_range, rate_bound, rate_bound_k, singleton_like

from oracles import brute_rate_bound


def test_singleton_like():
    assert singleton_like(15, 6, 2) == 8
    assert singleton_like(2457, 2170, 8) == 17
    with pytest.raises(ValueError):
        singleton_like(5, 5, 2)


def test_ceil_log2():
    assert [ceil_log2(x) for x in (1, 2, 3, 4, 5, 1024, 1025)] == [0, 1, 2, 2, 3, 10, 11]


@pytest.mark.parametrize(
    "n,r,k,branch",
    [(2457, 8, 2170, "log"), (1161, 8, 1019, "log"), (15, 2, 7, "rational"), (153, 8, 126, "log"), (9801, 8, 8696, "log")],
)
def test_rate_bound_values(n, r, k, branch):
    rb = rate_bound(n, r)
    assert (rb.k_max, rb.branch) == (k, branch)


def test_rate_bound_requires_divisibility():
    with pytest.raises(ValueError):
        rate_bound(10, 2)


@given(st.sampled_from([2, 4, 8, 16]), st.integers(1, 10**9))
def test_rate_bound_matches_oracle_large(r, mult):
    n = (r + 1) * mult
    assert rate_bound_k(n, r) == brute_rate_bound(n, r)


def test_rate_bound_oracle_exhaustive():
    """Every (n, r) with r in {2,4,8,16}, (r+1) | n, n <= 10^6."""
    for r in (2, 4, 8, 16):
        for n in range(r + 1, 10**6 + 1, r + 1):
            assert rate_bound_k(n, r) == brute_rate_bound(n, r), (n, r)


def test_ell_range_examples():
    lo, hi = ell_range(3, 0, 12, "full")
    assert (lo, hi) == (Fraction(2047, 36), 65)
    assert int(lo) == 56
    lo, hi = ell_range(3, 2, 12, "full")
    assert (int(lo), hi) == (227, 273)
    lo, hi = ell_range(3, 1, 12, "partial")
    assert hi == 129 and lo == Fraction(455, 4)


def test_ell_range_boundary_is_sharp():
    """Just below the lower bound the construction loses k-optimality."""
    from binlrc.lrc import expected_params

    for b, s, m, kind in [(3, 0, 12, "full"), (3, 2, 12, "full"), (3, 1, 12, "partial")]:
        lo, hi = ell_range(b, s, m, kind)
        first = int(lo) + 1
        for ell, expect in [(first, True), (hi, True), (first - 1, False)]:
            p = expected_params(b, s, m, kind, ell)
            assert (p.k == rate_bound_k(p.n, p.r)) is expect, (b, s, m, ell)


def test_ell_range_errors():
    with pytest.raises(ValueError):
        ell_range(3, 2, 8, "full")
    with pytest.raises(ValueError):
        ell_range(3, 3, 12, "full")
    with pytest.raises(ValueError):
        ell_range(3, 0, 16, "partial")  # z = 4 > b
