import pytest

from binlrc.gf2 import rank_of_ints
from binlrc.subspaces import (
    assemble_gm,
    full_spread,
    full_spread_size,
    partial_spread,
    partial_spread_size,
    verify_family,
)


@pytest.mark.parametrize("m,t,size", [(4, 2, 5), (6, 2, 21), (6, 3, 9), (12, 4, 273), (8, 4, 17)])
def test_full_spread(m, t, size):
    fam = full_spread(m, t)
    assert len(fam) == size == full_spread_size(m, t)
    assert verify_family(fam).passed


def test_full_spread_covers_every_vector_once():
    fam = full_spread(6, 2)
    seen = set()
    for W in fam.members:
        nz = W.span() - {0}
        assert not (nz & seen)
        seen |= nz
    assert len(seen) == 63


@pytest.mark.parametrize("m,t,size", [(12, 5, 129), (7, 3, 17), (14, 4, 1089), (5, 2, 9), (9, 4, 33)])
def test_partial_spread(m, t, size):
    fam = partial_spread(m, t)
    assert len(fam) == size == partial_spread_size(m, t)
    assert fam.kind == "partial"
    if size < 200:
        assert verify_family(fam).passed


def test_partial_spread_12_5_pairwise_trivial():
    fam = partial_spread(12, 5)
    assert len(fam) == 129
    report = verify_family(fam)
    assert report.passed, report.lines()


def test_partial_defers_to_full():
    assert partial_spread(8, 4).kind == "full"


def test_take_and_verify_detects_overlap():
    fam = full_spread(4, 2)
    sub = fam.take(3)
    assert len(sub) == 3 and sub.kind == "partial"
    bad = type(fam)(fam.m, fam.t, (fam.members[0], fam.members[0]), "partial")
    assert not verify_family(bad).passed
    with pytest.raises(ValueError):
        fam.take(0)


def test_full_spread_rejects_nondivisor():
    with pytest.raises(ValueError):
        full_spread(7, 3)


def test_assemble_gm_block_diagonal():
    W = full_spread(4, 2).members[1]
    G = assemble_gm(2, W).matrix
    assert G.shape == (6, 4)
    assert G.columns[:2] == (1, 2)
    assert all(c & 0b11 == 0 for c in G.columns[2:])
    assert rank_of_ints(list(G.columns)) == 4
