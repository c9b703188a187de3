"""Erasure codec on top of a constructed LRC.

Symbols are bit-sliced: each code position holds a byte array, and bit ``b``
of byte ``i`` across all positions forms one codeword. Every XOR therefore
processes ``8 * width`` codewords at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gf2 import BitMatrix, rref
from .lrc import LrcCode


class RepairError(ValueError):
    """The erasure pattern cannot be handled by the requested method."""


class UnrecoverableError(RepairError):
    pass


@dataclass(frozen=True)
class SystematicCode:
    """Generator in systematic form plus the parity-check it annihilates.

    ``info_positions[i]`` carries message symbol ``i``; each parity position
    ``p`` in ``parity_positions`` is the XOR of the info positions listed in
    ``parity_sources[p]``.
    """

    G: BitMatrix
    H: BitMatrix
    info_positions: tuple[int, ...]
    parity_positions: tuple[int, ...]
    parity_sources: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.info_positions)

    @property
    def n(self) -> int:
        return self.G.ncols

    @property
    def col_perm(self) -> tuple[int, ...]:
        """Code positions in systematic order: info first, then parity."""
        return self.info_positions + self.parity_positions


def systematic_form(code: LrcCode) -> SystematicCode:
    """Generator G = [I_k | P] up to the column permutation ``col_perm``.

    The free columns of rref(H) are the information set; each pivot column is
    determined by the free columns appearing in its reduced row.
    """
    H = code.H
    R, pivots = rref(H)
    n = H.ncols
    pivot_set = set(pivots)
    info = tuple(j for j in range(n) if j not in pivot_set)
    if len(info) != code.k:
        raise RepairError("rank mismatch between rref and the code dimension")
    sources = []
    for i, p in enumerate(pivots):
        row = R.rows[i] & ~(1 << p)
        sources.append(tuple(j for j in info if (row >> j) & 1))
    gen = []
    for f in info:
        vec = 1 << f
        for i, p in enumerate(pivots):
            if (R.rows[i] >> f) & 1:
                vec |= 1 << p
        gen.append(vec)
    G = BitMatrix(len(gen), n, gen)
    for g in G.rows:
        for h in H.rows:
            if (g & h).bit_count() & 1:
                raise ArithmeticError("G H^T != 0")
    return SystematicCode(G, H, info, tuple(pivots), tuple(sources))


@dataclass
class StripeWord:
    """n positions of bit-sliced symbols, with a mask of erased positions."""

    symbols: np.ndarray  # shape (n, width), uint8
    erased: np.ndarray = field(default=None)  # shape (n,), bool

    def __post_init__(self) -> None:
        self.symbols = np.asarray(self.symbols, dtype=np.uint8)
        if self.symbols.ndim == 1:
            self.symbols = self.symbols[:, None]
        if self.erased is None:
            self.erased = np.zeros(self.symbols.shape[0], dtype=bool)
        else:
            self.erased = np.asarray(self.erased, dtype=bool)

    @property
    def n(self) -> int:
        return self.symbols.shape[0]

    @property
    def width(self) -> int:
        return self.symbols.shape[1]

    def erase(self, positions) -> "StripeWord":
        symbols = self.symbols.copy()
        erased = self.erased.copy()
        for p in positions:
            erased[p] = True
            symbols[p] = 0
        return StripeWord(symbols, erased)

    def erased_positions(self) -> list[int]:
        return [int(p) for p in np.flatnonzero(self.erased)]


def encode(sc: SystematicCode, message: np.ndarray) -> StripeWord:
    """Place ``k`` message symbols on the info positions and fill in parity."""
    message = np.asarray(message, dtype=np.uint8)
    if message.ndim == 1:
        message = message[:, None]
    if message.shape[0] != sc.k:
        raise ValueError(f"expected {sc.k} message symbols, got {message.shape[0]}")
    symbols = np.zeros((sc.n, message.shape[1]), dtype=np.uint8)
    symbols[list(sc.info_positions)] = message
    for p, src in zip(sc.parity_positions, sc.parity_sources):
        if src:
            symbols[p] = np.bitwise_xor.reduce(symbols[list(src)], axis=0)
    return StripeWord(symbols)


def extract_message(sc: SystematicCode, word: StripeWord) -> np.ndarray:
    return word.symbols[list(sc.info_positions)].copy()


def syndrome(code: LrcCode, word: StripeWord) -> np.ndarray:
    """H * word^T, one bit-sliced row per parity check."""
    if word.erased.any():
        raise ValueError("syndrome of a word with erasures is undefined")
    out = np.zeros((code.H.nrows, word.width), dtype=np.uint8)
    for i, row in enumerate(code.H.rows):
        idx = _support(row)
        if idx:
            out[i] = np.bitwise_xor.reduce(word.symbols[idx], axis=0)
    return out


def _support(row: int) -> list[int]:
    out = []
    while row:
        low = row & -row
        out.append(low.bit_length() - 1)
        row ^= low
    return out


@dataclass(frozen=True)
class RepairResult:
    value: np.ndarray
    read: tuple[int, ...]  # positions read to rebuild the symbol


def repair_one(code: LrcCode, word: StripeWord, pos: int) -> RepairResult:
    """Rebuild one erased symbol from the other members of its repair group."""
    if not word.erased[pos]:
        raise RepairError(f"position {pos} is not erased")
    group = code.groups[code.group_of(pos)]
    others = tuple(p for p in group if p != pos)
    lost = [p for p in others if word.erased[p]]
    if lost:
        raise RepairError(f"positions {lost} in the same repair group are also erased")
    value = np.bitwise_xor.reduce(word.symbols[list(others)], axis=0)
    return RepairResult(value, others)


def erasure_decode(code: LrcCode, word: StripeWord) -> StripeWord:
    """Solve H_E x = H_K c_K for the erased positions E.

    Fails only when the erased columns of H are dependent, which cannot
    happen for at most d - 1 erasures.
    """
    erased = word.erased_positions()
    if not erased:
        return StripeWord(word.symbols.copy())
    index = {p: i for i, p in enumerate(erased)}
    erased_mask = 0
    for p in erased:
        erased_mask |= 1 << p
    equations: list[list] = []
    for row in code.H.rows:
        hit = row & erased_mask
        if not hit:
            continue
        mask = 0
        for p in _support(hit):
            mask |= 1 << index[p]
        known = _support(row & ~erased_mask)
        rhs = (
            np.bitwise_xor.reduce(word.symbols[known], axis=0)
            if known
            else np.zeros(word.width, dtype=np.uint8)
        )
        equations.append([mask, rhs])
    # Gauss-Jordan on the |E| unknowns.
    solved: dict[int, int] = {}
    rank_row = 0
    for col in range(len(erased)):
        bit = 1 << col
        pivot = next((i for i in range(rank_row, len(equations)) if equations[i][0] & bit), None)
        if pivot is None:
            raise UnrecoverableError(f"erased columns {erased} of H are linearly dependent")
        equations[rank_row], equations[pivot] = equations[pivot], equations[rank_row]
        pmask, prhs = equations[rank_row]
        for i in range(len(equations)):
            if i != rank_row and equations[i][0] & bit:
                equations[i][0] ^= pmask
                equations[i][1] = equations[i][1] ^ prhs
        solved[col] = rank_row
        rank_row += 1
    symbols = word.symbols.copy()
    for col, p in enumerate(erased):
        symbols[p] = equations[solved[col]][1]
    return StripeWord(symbols)
