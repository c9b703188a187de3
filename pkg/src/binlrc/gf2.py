"""Dense linear algebra over GF(2).

Rows are packed into Python integers (bit ``j`` of a row holds column ``j``),
so row operations are single XORs on arbitrary-width words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitVec:
    """A bit vector of fixed length; bit ``i`` of ``bits`` is coordinate ``i``."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond length")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "BitVec":
        bits = 0
        for i, v in enumerate(values):
            if v & 1:
                bits |= 1 << i
        return cls(len(values), bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: "BitVec") -> "BitVec":
        if other.length != self.length:
            raise ValueError("length mismatch")
        return BitVec(self.length, self.bits ^ other.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())


class BitMatrix:
    """Immutable dense binary matrix with integer-packed rows."""

    __slots__ = ("nrows", "ncols", "rows", "__dict__")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[int] = ()):
        rows = tuple(rows)
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        limit = 1 << ncols
        for r in rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond column count")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    # construction helpers

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, (1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for line in data:
            if len(line) != ncols:
                raise ValueError("ragged matrix")
            rows.append(BitVec.from_list(line).bits)
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        """Build from strings of '0'/'1' characters; whitespace is ignored."""
        cleaned = ["".join(line.split()) for line in lines]
        return cls.from_lists([[int(ch) for ch in line] for line in cleaned])

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[int]) -> "BitMatrix":
        """Build from column integers (bit ``i`` of a column is row ``i``)."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            if col >> nrows:
                raise ValueError("column has bits beyond row count")
            bit = 1 << j
            i = 0
            while col:
                if col & 1:
                    rows[i] |= bit
                col >>= 1
                i += 1
        return cls(nrows, len(columns), rows)

    # accessors

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(idx)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitVec:
        return BitVec(self.ncols, self.rows[i])

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """Column integers, bit ``i`` = entry in row ``i``."""
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            bit = 1 << i
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= bit
                r ^= low
        return tuple(cols)

    def column(self, j: int) -> BitVec:
        return BitVec(self.nrows, self.columns[j])

    def to_lists(self) -> list[list[int]]:
        return [BitVec(self.ncols, r).to_list() for r in self.rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"

    def __str__(self) -> str:
        return "\n".join(str(BitVec(self.ncols, r)) for r in self.rows)

    # structural operations

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.ncols, self.nrows, self.columns)

    def select_rows(self, idx: Iterable[int]) -> "BitMatrix":
        picked = [self.rows[i] for i in idx]
        return BitMatrix(len(picked), self.ncols, picked)

    def select_columns(self, idx: Sequence[int]) -> "BitMatrix":
        cols = self.columns
        return BitMatrix.from_columns(self.nrows, [cols[j] for j in idx])

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column count mismatch")
        return BitMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.nrows != self.nrows:
            raise ValueError("row count mismatch")
        shift = self.ncols
        return BitMatrix(
            self.nrows,
            self.ncols + other.ncols,
            (a | (b << shift) for a, b in zip(self.rows, other.rows)),
        )

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return matmul(self, other)


def matmul(left: BitMatrix, right: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if left.ncols != right.nrows:
        raise ValueError(f"shape mismatch: {left.shape} @ {right.shape}")
    rrows = right.rows
    out = []
    for row in left.rows:
        acc = 0
        while row:
            low = row & -row
            acc ^= rrows[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return BitMatrix(left.nrows, right.ncols, out)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form and ascending pivot columns.

    Zero rows are kept at the bottom so the shape is preserved.
    """
    work = list(m.rows)
    pivots: list[int] = []
    rank = 0
    for col in range(m.ncols):
        bit = 1 << col
        pivot = None
        for i in range(rank, len(work)):
            if work[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & bit:
                work[i] ^= prow
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return BitMatrix(m.nrows, m.ncols, work), pivots


def row_basis(rows: Iterable[int]) -> dict[int, int]:
    """Echelon basis keyed by leading (highest) bit."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return basis


def rank_of_ints(rows: Iterable[int]) -> int:
    return len(row_basis(rows))


def rank(m: BitMatrix) -> int:
    """Dimension of the row space over GF(2)."""
    if m.nrows > m.ncols:
        return rank_of_ints(m.columns)
    return rank_of_ints(m.rows)


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis of ``{x : M x^T = 0}`` as the rows of a matrix.

    One basis vector per free column ``f``: it has bit ``f`` set and is zero on
    every other free column.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        vec = 1 << f
        fbit = 1 << f
        for i, p in enumerate(pivots):
            if reduced.rows[i] & fbit:
                vec |= 1 << p
        basis.append(vec)
    return BitMatrix(len(basis), m.ncols, basis)


def ints_dependent(vectors: Sequence[int]) -> bool:
    """True iff some nonempty subset of ``vectors`` XORs to zero."""
    # Subset sums built incrementally: 2^k - 1 XORs for k vectors.
    sums = [0]
    for v in vectors:
        new = [s ^ v for s in sums]
        if 0 in new:
            return True
        sums.extend(new)
    return False


def columns_dependent(m: BitMatrix, idx: Iterable[int]) -> bool:
    """True iff the selected columns are linearly dependent over GF(2)."""
    idx = list(idx)
    for j in idx:
        if not 0 <= j < m.ncols:
            raise IndexError(f"column index {j} out of range for {m.ncols} columns")
    if len(set(idx)) != len(idx):
        return True
    cols = m.columns
    return ints_dependent([cols[j] for j in idx])


def any_dependent_subset(vectors: Sequence[int], size: int) -> tuple[int, ...] | None:
    """First ``size``-subset (by index, lexicographic) whose XOR is zero."""
    for combo in combinations(range(len(vectors)), size):
        acc = 0
        for i in combo:
            acc ^= vectors[i]
        if acc == 0:
            return combo
    return None
