"""Desired matrices: the per-group column pattern of the construction.

A desired matrix ``A`` is a (s+t) x r binary matrix of full row rank whose
bottom ``t`` rows have pairwise distinct nonzero columns, and (for t >= 3)
any 4 of whose columns are linearly independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from ._fixtures import FIXTURES
from .gf2 import BitMatrix, matmul, nullspace, rank, rank_of_ints, row_basis
from .gf2ext import Poly2, minimal_polynomial, nth_root_context
from .report import CheckReport


class InvalidDesiredMatrix(ValueError):
    """A matrix failed desired-matrix verification."""

    def __init__(self, report: CheckReport):
        super().__init__(f"{report.detail} (columns {report.witness})")
        self.report = report


class DesiredMatrixNotFound(LookupError):
    pass


@dataclass(frozen=True)
class DesiredMatrix:
    s: int
    t: int
    A: BitMatrix

    @property
    def r(self) -> int:
        return self.A.ncols

    @property
    def A1(self) -> BitMatrix:
        return self.A.select_rows(range(self.s))

    @property
    def A2(self) -> BitMatrix:
        return self.A.select_rows(range(self.s, self.s + self.t))

    def drop_column(self, j: int) -> "DesiredMatrix":
        keep = [c for c in range(self.r) if c != j]
        return DesiredMatrix(self.s, self.t, self.A.select_columns(keep))


def small_dependency(cols: list[int]) -> tuple[int, ...] | None:
    """First set of at most 4 column indices summing to zero, else None.

    Uses the pair-sum table, so the cost is O(r^2) rather than C(r, 4).
    """
    seen: dict[int, int] = {}
    for j, c in enumerate(cols):
        if c == 0:
            return (j,)
        if c in seen:
            return (seen[c], j)
        seen[c] = j
    pair_sums: dict[int, tuple[int, int]] = {}
    for i, j in combinations(range(len(cols)), 2):
        v = cols[i] ^ cols[j]
        if v in seen:
            return tuple(sorted((i, j, seen[v])))
        if v in pair_sums:
            return tuple(sorted(pair_sums[v] + (i, j)))
        pair_sums[v] = (i, j)
    return None


def verify_desired(A: BitMatrix, s: int, t: int) -> CheckReport:
    """Check the desired-matrix conditions for the row split (s, t).

    Full rank is read as full *row* rank: with r > s + t columns, full column
    rank is impossible.
    """
    if A.nrows != s + t:
        raise ValueError(f"matrix has {A.nrows} rows, expected s + t = {s + t}")
    name = "desired"
    stats = {"s": s, "t": t, "r": A.ncols}
    rk = rank(A)
    if rk != s + t:
        return CheckReport(name, False, f"rank {rk} < {s + t}", (), stats)
    low = [c >> s for c in A.columns]
    seen: dict[int, int] = {}
    for j, c in enumerate(low):
        if c == 0:
            return CheckReport(name, False, "zero column in bottom block", (j,), stats)
        if c in seen:
            return CheckReport(name, False, "repeated column in bottom block", (seen[c], j), stats)
        seen[c] = j
    if t >= 3:
        dep = small_dependency(list(A.columns))
        if dep is not None:
            return CheckReport(name, False, f"{len(dep)} dependent columns", dep, stats)
    return CheckReport(name, True, "", (), stats)


def as_desired(A: BitMatrix, s: int, t: int) -> DesiredMatrix:
    report = verify_desired(A, s, t)
    if not report.passed:
        raise InvalidDesiredMatrix(report)
    return DesiredMatrix(s, t, A)


def fixture(b: int, s: int) -> DesiredMatrix:
    """Published desired matrix for (b, s), re-verified before use."""
    try:
        rows = FIXTURES[(b, s)]
    except KeyError:
        raise KeyError(f"no stored desired matrix for b={b}, s={s}; have {sorted(FIXTURES)}") from None
    A = BitMatrix.from_strings(rows)
    return as_desired(A, s, 2 * b - s)


def fixture_matrix(b: int, s: int) -> BitMatrix:
    """The stored matrix without verification."""
    return BitMatrix.from_strings(FIXTURES[(b, s)])


@dataclass(frozen=True)
class CyclicSeed:
    b: int
    n: int
    min_poly: Poly2
    generator: Poly2
    Aprime: BitMatrix


def cyclic_seed(b: int) -> CyclicSeed:
    """Parity check of the punctured length-(2^b + 1) cyclic code.

    The cyclic code generated by (x + 1) M(x), with M the minimal polynomial
    of an element ``beta`` of order 2^b + 1, has parity-check columns
    (1, beta^j). Eliminating the coordinate j = 0 against the all-ones row
    and deleting it leaves the 2b x 2^b matrix with columns ``1 + beta^j``,
    j = 1..2^b, of a [2^b, 2^b - 2b, >=5] code.
    """
    if not 3 <= b <= 7:
        raise ValueError("b must lie in [3, 7]")
    n = (1 << b) + 1
    ctx, beta = nth_root_context(n)
    mpoly = minimal_polynomial(ctx, beta)
    if mpoly.degree != 2 * b:
        raise ArithmeticError(f"minimal polynomial degree {mpoly.degree} != {2 * b}")
    gen = Poly2(0b11) * mpoly
    cols = [ctx.pow(beta, j) ^ 1 for j in range(1, n)]
    Aprime = BitMatrix.from_columns(ctx.m, cols)
    if rank(Aprime) != 2 * b:
        raise ArithmeticError("seed matrix is rank deficient")
    dep = small_dependency(cols)
    if dep is not None:
        raise ArithmeticError(f"seed matrix has dependent columns {dep}")
    return CyclicSeed(b, n, mpoly, gen, Aprime)


def _grow_kernel(rng: random.Random, dim: int, width: int, forbidden: set[int]) -> list[int] | None:
    """Randomly grow a ``dim``-dimensional subspace of F_2^width avoiding ``forbidden``."""
    members = [0]
    basis: list[int] = []
    candidates = [v for v in range(1, 1 << width) if v not in forbidden]
    rng.shuffle(candidates)
    member_set = {0}
    for v in candidates:
        if len(basis) == dim:
            break
        if v in member_set:
            continue
        coset = [v ^ u for u in members]
        if any(x in forbidden for x in coset):
            continue
        basis.append(v)
        members.extend(coset)
        member_set.update(coset)
    return basis if len(basis) == dim else None


def search_desired(b: int, s: int, seed: int, budget: int, *, search: bool = True) -> DesiredMatrix:
    """Find an invertible T with T * A' desired for the split (s, 2b - s).

    Row operations keep rank and 4-wise independence, so only the bottom
    block needs checking: its rows L must be injective and nonzero on the
    columns of A'. Each attempt grows a random kernel for L that avoids every
    column and every pairwise column sum, then completes L to an invertible T.
    With ``search=False`` the stored fixture is returned instead.
    """
    if not search:
        return fixture(b, s)
    if not 0 <= s < b:
        raise ValueError("need 0 <= s < b")
    width = 2 * b
    t = width - s
    seed_code = cyclic_seed(b)
    cols = list(seed_code.Aprime.columns)
    forbidden = set(cols)
    forbidden.update(a ^ c for a, c in combinations(cols, 2))
    rng = random.Random(seed)
    for _ in range(budget):
        kernel = _grow_kernel(rng, s, width, forbidden)
        if kernel is None:
            continue
        if s:
            L = nullspace(BitMatrix(s, width, kernel))
        else:
            L = BitMatrix.identity(width)
        top: list[int] = []
        basis = row_basis(L.rows)
        for i in rng.sample(range(width), width):
            if len(top) == s:
                break
            if rank_of_ints(list(basis.values()) + top + [1 << i]) > len(basis) + len(top):
                top.append(1 << i)
        T = BitMatrix(width, width, top + list(L.rows))
        A = matmul(T, seed_code.Aprime)
        if verify_desired(A, s, t).passed:
            return DesiredMatrix(s, t, A)
    raise DesiredMatrixNotFound(f"no desired matrix for b={b}, s={s} within {budget} attempts (seed {seed})")
