from itertools import combinations, product

import pytest

from binlrc.desired import fixture
from binlrc.gf2 import BitMatrix, ints_dependent, nullspace
from binlrc.lrc import LrcCode
from binlrc.verify import (
    DistanceTooExpensive,
    LocalityError,
    check_lemma6,
    claim_report,
    exact_min_distance,
    optimality_report,
    verify_locality,
)


def generic_d_at_least_6(columns) -> bool:
    """Meet-in-the-middle: no set of at most 5 columns sums to zero."""
    cols = list(columns)
    if 0 in cols or len(set(cols)) != len(cols):
        return False
    singles = set(cols)
    pairs = set()
    for a, b in combinations(cols, 2):
        v = a ^ b
        if v in pairs or v in singles:
            return False
        pairs.add(v)
    for a, b, c in combinations(cols, 3):
        if a ^ b ^ c in pairs:
            return False
    return True


def test_lemma6_agrees_with_generic_oracle(desk_code):
    assert check_lemma6(desk_code).passed
    assert generic_d_at_least_6(desk_code.H.columns)


def test_lemma6_tiny_exhaustive(tiny_code):
    assert check_lemma6(tiny_code).passed
    cols = tiny_code.H.columns
    for size in range(1, 6):
        for sub in combinations(cols, size):
            assert not ints_dependent(list(sub))


def _tamper(code: LrcCode, pos: int, value: int) -> LrcCode:
    """Replace the lower part of column ``pos`` with ``value``."""
    ell = code.ell
    cols = list(code.H.columns)
    cols[pos] = (cols[pos] & ((1 << ell) - 1)) | (value << ell)
    H = BitMatrix.from_columns(code.H.nrows, cols)
    return LrcCode(code.params, H, code.groups)


@pytest.mark.parametrize("kind", ["equal", "quad", "cross"])
def test_lemma6_detects_faults(desk_code, kind):
    g0, g1 = desk_code.groups[0], desk_code.groups[1]
    low = desk_code.lower_columns
    if kind == "equal":
        bad = _tamper(desk_code, g0[2], low[g0[1]])
    elif kind == "quad":
        bad = _tamper(desk_code, g0[4], low[g0[1]] ^ low[g0[2]] ^ low[g0[3]])
    else:
        bad = _tamper(desk_code, g1[2], low[g0[1]] ^ low[g0[2]] ^ low[g1[1]])
    report = check_lemma6(bad)
    assert not report.passed
    assert not generic_d_at_least_6(bad.H.columns)
    assert report.witness


def test_lemma6_layout_failure(desk_code):
    rows = list(desk_code.H.rows)
    rows[0] ^= 1 << 20
    bad = LrcCode(desk_code.params, BitMatrix(desk_code.H.nrows, desk_code.n, rows), desk_code.groups)
    report = check_lemma6(bad)
    assert not report.passed and "layout" in report.detail
    with pytest.raises(LocalityError):
        verify_locality(bad)


def test_lemma6_stats_example1(example1):
    report = check_lemma6(example1)
    assert report.passed
    assert report.stats["cross_tests"] == 48117888
    assert report.stats["blocks"] == 273


def brute_distance(code) -> int:
    G = nullspace(code.H).rows
    best = code.n
    for coeffs in product((0, 1), repeat=len(G)):
        if not any(coeffs):
            continue
        v = 0
        for c, g in zip(coeffs, G):
            if c:
                v ^= g
        best = min(best, v.bit_count())
    return best


def test_exact_distance_tiny(tiny_code):
    d = exact_min_distance(tiny_code)
    assert d == brute_distance(tiny_code) == 6


def test_exact_distance_guard(desk_code):
    with pytest.raises(DistanceTooExpensive):
        exact_min_distance(desk_code)


def test_exact_distance_gray_code_path(desk_code):
    """Keeping four groups gives k above the 12-row inner table."""
    from binlrc.lrc import shorten_groups

    code = shorten_groups(desk_code, 13)
    assert 12 < code.k <= 24
    assert exact_min_distance(code) == brute_distance(code) >= 6


def test_optimality_report_example1(example1):
    rep = optimality_report(example1)
    assert rep.k_optimal and rep.rate_bound_k_max == 2170 and rep.min_branch == "log"
    assert rep.singleton_like_d_max == 17
    assert rep.ell_in_range
    lines = rep.lines()
    assert "k_optimal=true" in lines


def test_optimality_report_desk(desk_code):
    rep = optimality_report(desk_code)
    assert rep.rate_bound_k_max == 126
    assert rep.k_optimal
    assert any("m=8 < 4b=12" in c for c in rep.caveats)


def test_optimality_report_tiny(tiny_code):
    rep = optimality_report(tiny_code)
    assert rep.rate_bound_k_max == 7 and rep.min_branch == "rational"
    assert not rep.k_optimal
    assert rep.singleton_like_d_max == 8


def test_claim_report_flags_mismatch(tiny_code):
    rep = claim_report(tiny_code, 15, 10, 6, exact_d=6)
    assert not rep.passed and rep.witness == ("k",)
    assert claim_report(tiny_code, 15, tiny_code.k, 6, exact_d=6).passed
