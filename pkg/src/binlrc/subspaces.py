"""Spreads and partial spreads of V_m = GF(2)^m, and direct-sum generators."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf2 import BitMatrix, rank_of_ints
from .gf2ext import field_ctx
from .report import CheckReport


@dataclass(frozen=True)
class Subspace:
    """A t-dimensional subspace of GF(2)^m; ``basis`` is m x t, columns are basis vectors."""

    m: int
    t: int
    basis: BitMatrix

    @property
    def vectors(self) -> tuple[int, ...]:
        """Basis vectors as m-bit integers."""
        return self.basis.columns

    def span(self) -> set[int]:
        out = {0}
        for v in self.vectors:
            out |= {u ^ v for u in out}
        return out


@dataclass(frozen=True)
class SpreadFamily:
    m: int
    t: int
    members: tuple[Subspace, ...]
    kind: str  # "full" or "partial"
    z: int = 0

    def __len__(self) -> int:
        return len(self.members)

    def take(self, count: int) -> "SpreadFamily":
        """The first ``count`` members (still pairwise trivially intersecting)."""
        if not 1 <= count <= len(self.members):
            raise ValueError(f"count must be in [1, {len(self.members)}]")
        kind = self.kind if count == len(self.members) else "partial"
        return SpreadFamily(self.m, self.t, self.members[:count], kind, self.z)


@dataclass(frozen=True)
class DirectSumGen:
    s: int
    matrix: BitMatrix  # (s+m) x (s+t), block diagonal


def _subspace(m: int, vectors: list[int]) -> Subspace:
    return Subspace(m, len(vectors), BitMatrix.from_columns(m, vectors))


def full_spread_size(m: int, t: int) -> int:
    return ((1 << m) - 1) // ((1 << t) - 1)


def partial_spread_size(m: int, t: int) -> int:
    """Guaranteed partial t-spread size in GF(2)^m, with z = m mod t."""
    z = m % t
    return ((1 << m) - (1 << t) * ((1 << z) - 1) - 1) // ((1 << t) - 1)


def full_spread(m: int, t: int) -> SpreadFamily:
    """The Desarguesian t-spread: W_i = a^(i-1) * GF(2^t) inside GF(2^m).

    GF(2^t) is the span of 1, g, ..., g^(t-1) with g = a^ell, ell the number
    of members.
    """
    if t < 1 or m > 32 or m % t:
        raise ValueError(f"full spread needs t | m and m <= 32 (got m={m}, t={t})")
    ell = full_spread_size(m, t)
    if m == 1:
        return SpreadFamily(1, 1, (_subspace(1, [1]),), "full")
    ctx = field_ctx(m)
    gamma = ctx.alpha_pow(ell)
    sub_basis = [ctx.pow(gamma, j) for j in range(t)]
    members = []
    shift = 1
    for _ in range(ell):
        members.append(_subspace(m, [ctx.mul(shift, g) for g in sub_basis]))
        shift = ctx.mul(shift, ctx.alpha)
    return SpreadFamily(m, t, tuple(members), "full")


def _multiplication_block(width: int, t: int) -> list[list[int]]:
    """For each c in GF(2^width), the images c * a^j (j < t) as ints.

    The map x -> c x restricted to span{1, a, ..., a^(t-1)} is injective for
    c != 0, and differences of two such maps are again such maps.
    """
    ctx = field_ctx(width)
    sub_basis = [ctx.alpha_pow(j) for j in range(t)]
    return [[ctx.mul(c, x) for x in sub_basis] for c in range(1 << width)]


def partial_spread(m: int, t: int) -> SpreadFamily:
    """Partial t-spread of GF(2)^m meeting the size guarantee for t not dividing m.

    Level by level, with current ambient dimension n' >= 2t (coordinates
    ``offset .. m-1``), emit rowspace[I_t | M_c] for every c in GF(2^(n'-t)),
    then recurse into the last n' - t coordinates. The terminal level has
    dimension t + z and contributes the span of its last t coordinates.
    """
    if not 1 <= t <= m or m > 32:
        raise ValueError(f"need 1 <= t <= m <= 32 (got m={m}, t={t})")
    if m % t == 0:
        return full_spread(m, t)
    z = m % t
    members = []
    offset = 0
    ambient = m
    while ambient >= 2 * t:
        width = ambient - t
        for images in _multiplication_block(width, t):
            vectors = [(1 << (offset + j)) | (img << (offset + t)) for j, img in enumerate(images)]
            members.append(_subspace(m, vectors))
        offset += t
        ambient = width
    # ambient == t + z here; the last t coordinates.
    members.append(_subspace(m, [1 << (offset + z + j) for j in range(t)]))
    family = SpreadFamily(m, t, tuple(members), "partial", z)
    if len(family) != partial_spread_size(m, t):
        raise AssertionError("partial spread size does not match the guarantee")
    return family


def verify_family(family: SpreadFamily) -> CheckReport:
    """Member ranks, pairwise trivial intersections, and (full) coverage count."""
    t = family.t
    name = "spread"
    stats = {"m": family.m, "t": t, "kind": family.kind, "count": len(family)}
    vecs = [m.vectors for m in family.members]
    for i, v in enumerate(vecs):
        if len(v) != t or rank_of_ints(v) != t:
            return CheckReport(name, False, "member rank below t", (i,), stats)
    for i, j in combinations(range(len(vecs)), 2):
        if rank_of_ints(vecs[i] + vecs[j]) != 2 * t:
            return CheckReport(name, False, "members intersect nontrivially", (i, j), stats)
    if family.kind == "full":
        covered = len(vecs) * ((1 << t) - 1)
        if covered != (1 << family.m) - 1:
            return CheckReport(name, False, f"covers {covered} nonzero vectors, not {(1 << family.m) - 1}", (), stats)
    return CheckReport(name, True, "", (), stats)


def assemble_gm(s: int, W: Subspace) -> DirectSumGen:
    """Block-diagonal [[I_s, 0], [0, G_W]] of shape (s+m) x (s+t)."""
    if s < 0:
        raise ValueError("s must be non-negative")
    cols = [1 << i for i in range(s)] + [v << s for v in W.vectors]
    return DirectSumGen(s, BitMatrix.from_columns(s + W.m, cols))
