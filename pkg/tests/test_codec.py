import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binlrc.codec import (
    RepairError,
    StripeWord,
    UnrecoverableError,
    encode,
    erasure_decode,
    extract_message,
    repair_one,
    syndrome,
    systematic_form,
)


@pytest.fixture(scope="module")
def sc(desk_code):
    return systematic_form(desk_code)


@pytest.fixture(scope="module")
def word(sc):
    rng = np.random.default_rng(7)
    return encode(sc, rng.integers(0, 256, (sc.k, 8), dtype=np.uint8))


def test_systematic_form(desk_code, sc):
    assert sc.k == desk_code.k == 126
    assert sorted(sc.col_perm) == list(range(desk_code.n))
    for g in sc.G.rows:
        for h in desk_code.H.rows:
            assert (g & h).bit_count() % 2 == 0


def test_encode_is_systematic(sc, word):
    msg = extract_message(sc, word)
    again = encode(sc, msg)
    assert np.array_equal(again.symbols, word.symbols)


def test_encoded_word_has_zero_syndrome(desk_code, word):
    assert not syndrome(desk_code, word).any()


def test_flipped_bit_syndrome_is_column(desk_code, word):
    pos = 17
    sym = word.symbols.copy()
    sym[pos, 0] ^= 1
    s = syndrome(desk_code, StripeWord(sym))
    col = desk_code.H.columns[pos]
    expect = [(col >> i) & 1 for i in range(desk_code.H.nrows)]
    assert [int(x) & 1 for x in s[:, 0]] == expect
    assert not s[:, 1:].any()


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 255), min_size=153, max_size=153))
def test_syndrome_matches_column_xor(desk_code, values):
    sym = np.array(values, dtype=np.uint8)
    got = syndrome(desk_code, StripeWord(sym))[:, 0]
    expect = np.zeros(desk_code.H.nrows, dtype=np.uint8)
    for j, v in enumerate(values):
        col = desk_code.H.columns[j]
        for i in range(desk_code.H.nrows):
            if (col >> i) & 1:
                expect[i] ^= v
    assert np.array_equal(got, expect)


def test_syndrome_rejects_erasures(desk_code, word):
    with pytest.raises(ValueError):
        syndrome(desk_code, word.erase([0]))


def test_repair_one_every_position(desk_code, word):
    for pos in range(desk_code.n):
        res = repair_one(desk_code, word.erase([pos]), pos)
        assert len(res.read) == 8 and pos not in res.read
        assert np.array_equal(res.value, word.symbols[pos])


def test_repair_one_errors(desk_code, word):
    g = desk_code.groups[0]
    with pytest.raises(RepairError):
        repair_one(desk_code, word.erase([g[0], g[1]]), g[0])
    with pytest.raises(RepairError):
        repair_one(desk_code, word, 0)


def test_erasure_decode_random_five(desk_code, word):
    rng = random.Random(11)
    for _ in range(1000):
        lost = rng.sample(range(desk_code.n), 5)
        fixed = erasure_decode(desk_code, word.erase(lost))
        assert np.array_equal(fixed.symbols, word.symbols)
        assert not syndrome(desk_code, fixed).any()


def test_erasure_decode_zero_erasures(desk_code, word):
    assert np.array_equal(erasure_decode(desk_code, word).symbols, word.symbols)


def test_erasure_decode_whole_group(desk_code, word):
    lost = list(desk_code.groups[3][:5])
    assert np.array_equal(erasure_decode(desk_code, word.erase(lost)).symbols, word.symbols)


def test_dependent_erasures_unrecoverable(tiny_code):
    """The support of a minimum-weight codeword (weight 6) cannot be decoded."""
    from binlrc.gf2 import nullspace

    G = nullspace(tiny_code.H).rows
    best = None
    for mask in range(1, 1 << len(G)):
        v = 0
        for i, g in enumerate(G):
            if (mask >> i) & 1:
                v ^= g
        if v.bit_count() == 6:
            best = v
            break
    support = [j for j in range(tiny_code.n) if (best >> j) & 1]
    sc = systematic_form(tiny_code)
    w = encode(sc, np.zeros((sc.k, 1), dtype=np.uint8))
    with pytest.raises(UnrecoverableError):
        erasure_decode(tiny_code, w.erase(support))


def test_encode_wrong_length(sc):
    with pytest.raises(ValueError):
        encode(sc, np.zeros((sc.k - 1, 1), dtype=np.uint8))
