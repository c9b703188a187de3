from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binlrc._fixtures import FIXTURES
from binlrc.desired import (
    DesiredMatrix,
    DesiredMatrixNotFound,
    InvalidDesiredMatrix,
    cyclic_seed,
    fixture,
    fixture_matrix,
    search_desired,
    small_dependency,
    verify_desired,
)
from binlrc.gf2 import BitMatrix, ints_dependent, matmul, rank


def brute_four_wise(cols):
    return all(not ints_dependent(list(q)) for size in range(1, 5) for q in combinations(cols, size))


GOOD_FIXTURES = [(3, 2), (4, 3), (6, 4), (7, 4)]


@pytest.mark.parametrize("b,s", GOOD_FIXTURES)
def test_fixture_passes(b, s):
    A = fixture(b, s)
    assert A.A.shape == (2 * b, 1 << b)
    assert verify_desired(A.A, s, 2 * b - s).passed


def test_fixture_b5_s4_as_stored_is_rejected():
    """The stored (5, 4) matrix repeats a column in its bottom block."""
    A = fixture_matrix(5, 4)
    report = verify_desired(A, 4, 6)
    assert not report.passed
    assert "repeated column" in report.detail
    with pytest.raises(InvalidDesiredMatrix):
        fixture(5, 4)


def test_fixture_table_complete():
    assert sorted(FIXTURES) == [(3, 2), (4, 3), (5, 4), (6, 4), (7, 4)]


def test_fixture_unknown():
    with pytest.raises(KeyError):
        fixture(3, 1)


def test_verify_desired_four_wise_oracle_b3():
    A = fixture(3, 2).A
    assert brute_four_wise(list(A.columns))


def test_verify_desired_failures():
    A = fixture(3, 2).A
    cols = list(A.columns)
    # duplicate a column: 2-dependent
    bad = BitMatrix.from_columns(6, cols[:7] + [cols[0]])
    rep = verify_desired(bad, 2, 4)
    assert not rep.passed
    # rank deficiency
    assert not verify_desired(BitMatrix.from_columns(6, [c & 0b11111 for c in cols]), 2, 4).passed
    with pytest.raises(ValueError):
        verify_desired(A, 2, 5)


def test_cyclic_seed_b3():
    seed = cyclic_seed(3)
    assert str(seed.min_poly) == "x^6 + x^3 + 1"
    assert seed.Aprime.shape == (6, 8)
    cols = list(seed.Aprime.columns)
    quads = list(combinations(cols, 4))
    assert len(quads) == 70
    assert all(not ints_dependent(list(q)) for q in quads)
    assert rank(seed.Aprime) == 6
    # generator (x+1) M(x) divides x^9 - 1
    from binlrc.gf2ext import Poly2

    assert seed.generator.divides(Poly2.from_exponents(9, 0))


@pytest.mark.parametrize("b", [4, 5, 6, 7])
def test_cyclic_seed_larger(b):
    seed = cyclic_seed(b)
    assert seed.Aprime.shape == (2 * b, 1 << b)
    assert small_dependency(list(seed.Aprime.columns)) is None


@pytest.mark.parametrize("b,s", [(3, 0), (3, 1), (3, 2), (4, 3), (5, 4), (6, 4), (7, 4)])
def test_search_finds_desired(b, s):
    A = search_desired(b, s, seed=1, budget=200)
    assert verify_desired(A.A, s, 2 * b - s).passed


def test_search_deterministic():
    a = search_desired(3, 2, seed=42, budget=200)
    b = search_desired(3, 2, seed=42, budget=200)
    assert a.A == b.A


def test_search_budget_exhausted():
    with pytest.raises(DesiredMatrixNotFound):
        search_desired(7, 6, seed=0, budget=5)


def test_search_disabled_returns_fixture():
    assert search_desired(3, 2, 0, 0, search=False).A == fixture(3, 2).A


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 63), min_size=6, max_size=6))
def test_row_transformation_invariance(rows):
    """Rank and 4-wise independence are preserved by invertible T."""
    T = BitMatrix(6, 6, rows)
    if rank(T) < 6:
        return
    A = cyclic_seed(3).Aprime
    TA = matmul(T, A)
    assert rank(TA) == 6
    assert small_dependency(list(TA.columns)) is None


def test_drop_column():
    A = fixture(3, 2)
    B = A.drop_column(0)
    assert B.r == 7 and B.A.columns == A.A.columns[1:]
    assert isinstance(B, DesiredMatrix)
