"""Parity-check assembly for LRCs built from intersection subspaces, and shortening."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Sequence

from .desired import DesiredMatrix, InvalidDesiredMatrix, small_dependency, verify_desired
from .gf2 import BitMatrix, rank
from .subspaces import (
    SpreadFamily,
    Subspace,
    full_spread,
    full_spread_size,
    partial_spread,
    partial_spread_size,
)


class OptimalityWarning(UserWarning):
    """Parameters outside the range where k-optimality is guaranteed."""


@dataclass(frozen=True)
class LrcParams:
    b: int
    s: int
    t: int
    m: int
    r: int
    ell: int
    n: int
    k: int
    kind: str
    z: int = 0

    def caveats(self) -> list[str]:
        """Reasons k-optimality is not guaranteed (d >= 6 is unaffected)."""
        out = []
        if self.m < 4 * self.b:
            out.append(f"m={self.m} < 4b={4 * self.b}")
        if self.kind == "partial" and self.z > self.b:
            out.append(f"z={self.z} > b={self.b}")
        return out


def expected_params(b: int, s: int, m: int, kind: str, ell: int | None = None) -> LrcParams:
    """Parameters promised by the construction, by arithmetic alone.

    ``ell`` selects a sub-family of the spread; the default uses all of it.
    """
    if b < 1:
        raise ValueError("b must be positive")
    if not 0 <= s < b:
        raise ValueError(f"need 0 <= s < b (got s={s}, b={b})")
    t = 2 * b - s
    if kind == "full":
        if m % t:
            raise ValueError(f"full spread needs t={t} to divide m={m}")
        z = 0
        size = full_spread_size(m, t)
    elif kind == "partial":
        if m % t == 0:
            raise ValueError(f"t={t} divides m={m}; use kind='full'")
        if m < t:
            raise ValueError(f"m={m} smaller than t={t}")
        z = m % t
        size = partial_spread_size(m, t)
    else:
        raise ValueError(f"unknown spread kind {kind!r}")
    if ell is None:
        ell = size
    elif not 1 <= ell <= size:
        raise ValueError(f"ell must be in [1, {size}]")
    r = 1 << b
    n = (r + 1) * ell
    return LrcParams(b, s, t, m, r, ell, n, n - s - ell - m, kind, z)


@dataclass(frozen=True)
class LrcCode:
    """A binary LRC given by its parity-check matrix.

    The first ``len(groups)`` rows of ``H`` are the locality rows; row ``i``
    is the indicator of ``groups[i]``.
    """

    params: LrcParams
    H: BitMatrix
    groups: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.H.ncols

    @property
    def ell(self) -> int:
        return len(self.groups)

    @cached_property
    def rank(self) -> int:
        return rank(self.H)

    @property
    def k(self) -> int:
        return self.n - self.rank

    @property
    def locality(self) -> int:
        return max(len(g) for g in self.groups) - 1

    @cached_property
    def lower_columns(self) -> tuple[int, ...]:
        """Columns of H with the locality rows stripped."""
        ell = self.ell
        return tuple(c >> ell for c in self.H.columns)

    def group_of(self, pos: int) -> int:
        return self._group_index[pos]

    @cached_property
    def _group_index(self) -> dict[int, int]:
        return {p: i for i, g in enumerate(self.groups) for p in g}

    @classmethod
    def from_matrix(cls, H: BitMatrix, ell: int, params: LrcParams) -> "LrcCode":
        """Wrap H, reading the repair groups off its first ``ell`` rows."""
        groups = []
        for row in H.rows[:ell]:
            groups.append(tuple(j for j in range(H.ncols) if (row >> j) & 1))
        return cls(params, H, tuple(groups))


def _spread(m: int, t: int, kind: str) -> SpreadFamily:
    return full_spread(m, t) if kind == "full" else partial_spread(m, t)


def _group_lower_columns(s: int, W: Subspace, pattern: BitMatrix) -> list[int]:
    """Columns of (0 | G_M * A) for one group, as (s+m)-bit ints."""
    low_mask = (1 << s) - 1
    basis = W.vectors
    out = [0]
    for a in pattern.columns:
        top = a & low_mask
        x = a >> s
        w = 0
        j = 0
        while x:
            if x & 1:
                w ^= basis[j]
            x >>= 1
            j += 1
        out.append(top | (w << s))
    return out


def assemble(s: int, members: Sequence[Subspace], patterns: Sequence[BitMatrix]) -> tuple[BitMatrix, tuple[tuple[int, ...], ...]]:
    """Stack locality rows over the per-group blocks (0 | G_M_i * A_i)."""
    if len(members) != len(patterns):
        raise ValueError("one pattern per member required")
    m = members[0].m
    ell = len(members)
    lower: list[int] = []
    groups = []
    local_rows = []
    for W, pattern in zip(members, patterns):
        cols = _group_lower_columns(s, W, pattern)
        start = len(lower)
        lower.extend(cols)
        groups.append(tuple(range(start, len(lower))))
        local_rows.append(((1 << len(cols)) - 1) << start)
    n = len(lower)
    low = BitMatrix.from_columns(s + m, lower)
    H = BitMatrix(ell, n, local_rows).vstack(low)
    return H, tuple(groups)


def _check_desired(A: DesiredMatrix, b: int, s: int) -> None:
    t = 2 * b - s
    if (A.s, A.t) != (s, t):
        raise ValueError(f"desired matrix split ({A.s}, {A.t}) does not match (s, t) = ({s}, {t})")
    if A.r != 1 << b:
        raise ValueError(f"desired matrix has {A.r} columns, expected 2^b = {1 << b}")
    report = verify_desired(A.A, s, t)
    if not report.passed:
        raise InvalidDesiredMatrix(report)


def _warn_caveats(params: LrcParams) -> None:
    for note in params.caveats():
        warnings.warn(f"k-optimality not guaranteed: {note}", OptimalityWarning, stacklevel=3)


def construct(
    b: int,
    s: int,
    m: int,
    kind: str,
    A: DesiredMatrix,
    ell: int | None = None,
    *,
    verify: bool = True,
) -> LrcCode:
    """Build the parity-check matrix from a (partial) spread and a desired matrix.

    ``ell`` keeps only the first ``ell`` spread members. m < 4b (or z > b for
    partial spreads) only triggers an :class:`OptimalityWarning`.
    """
    params = expected_params(b, s, m, kind, ell)
    if verify:
        _check_desired(A, b, s)
    _warn_caveats(params)
    family = _spread(m, params.t, kind)
    members = family.members[: params.ell]
    H, groups = assemble(s, members, [A.A] * len(members))
    return LrcCode(params, H, groups)


def shorten_groups(code: LrcCode, a: int) -> LrcCode:
    """Drop the first ``a`` repair groups: their locality rows and columns."""
    if not 1 <= a < code.ell:
        raise ValueError(f"a must be in [1, {code.ell - 1}]")
    removed = {p for g in code.groups[:a] for p in g}
    keep = [j for j in range(code.n) if j not in removed]
    H = code.H.select_columns(keep).select_rows(range(a, code.H.nrows))
    p = code.params
    ell = code.ell - a
    params = replace(p, ell=ell, n=len(keep), k=p.k - a * p.r)
    return LrcCode.from_matrix(H, ell, params)


def removable_column(A: DesiredMatrix, preferred: int | None = None) -> int:
    """A column whose removal keeps every 4 columns independent."""
    order = list(range(A.r))
    if preferred is not None:
        order.remove(preferred)
        order.insert(0, preferred)
    tried = []
    for j in order:
        reduced = A.drop_column(j)
        if small_dependency(list(reduced.A.columns)) is None:
            return j
        tried.append(j)
    raise ValueError(f"no removable column keeps 4-wise independence; tried {tried}")


def shorten_columns(
    b: int,
    s: int,
    m: int,
    kind: str,
    A: DesiredMatrix,
    tau: int,
    drop: int = 0,
    ell: int | None = None,
) -> LrcCode:
    """Narrow the first ``tau`` groups by building them from A minus one column.

    Yields [n - tau, k - tau, d]; the locality becomes r - 1 when every group
    is narrowed.
    """
    params = expected_params(b, s, m, kind, ell)
    if not 0 <= tau <= params.ell:
        raise ValueError(f"tau must be in [0, {params.ell}]")
    _check_desired(A, b, s)
    _warn_caveats(params)
    if tau == 0:
        return construct(b, s, m, kind, A, ell, verify=False)
    j = removable_column(A, drop)
    narrow = A.drop_column(j).A
    family = _spread(m, params.t, kind)
    members = family.members[: params.ell]
    patterns = [narrow] * tau + [A.A] * (params.ell - tau)
    H, groups = assemble(s, members, patterns)
    r = params.r - 1 if tau == params.ell else params.r
    new = replace(params, r=r, n=params.n - tau, k=params.k - tau)
    return LrcCode(new, H, groups)
