"""Certification of distance, locality, dimension and optimality."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .bounds import ell_in_range, ell_range, rate_bound, singleton_like
from .gf2 import nullspace
from .lrc import LrcCode
from .report import CheckReport


class LocalityError(ValueError):
    pass


def verify_locality(code: LrcCode) -> int:
    """Check the locality rows form disjoint repair groups covering [n]; return r."""
    H = code.H
    covered = 0
    for i, group in enumerate(code.groups):
        row = H.rows[i]
        mask = 0
        for p in group:
            mask |= 1 << p
        if row != mask:
            raise LocalityError(f"locality row {i} does not match group {i}")
        if covered & mask:
            raise LocalityError(f"group {i} overlaps an earlier group")
        if len(group) < 2:
            raise LocalityError(f"group {i} has fewer than two positions")
        covered |= mask
    if covered != (1 << code.n) - 1:
        missing = [j for j in range(code.n) if not (covered >> j) & 1]
        raise LocalityError(f"positions not covered by any group: {missing[:10]}")
    return code.locality


def check_lemma6(code: LrcCode) -> CheckReport:
    """Certify d >= 6 from the block structure of the lower rows.

    With disjoint all-ones locality rows every codeword has even weight and
    meets each group in an even number of positions, so a dependency among
    at most 5 columns is either two equal columns in one block (1), four
    columns of one block summing to zero (2), or two columns from each of two
    blocks with equal pair sums (3). Every such combination is covered
    exactly: (1)/(2) by per-block pair-sum tables, (3) by one table of pair
    sums shared across blocks.
    """
    name = "lemma6"
    try:
        verify_locality(code)
    except LocalityError as exc:
        return CheckReport(name, False, f"layout: {exc}")
    lower = code.lower_columns
    widths = [len(g) for g in code.groups]
    stats = {
        "blocks": len(widths),
        "pair_tests": sum(comb(w, 2) for w in widths),
        "quad_tests": sum(comb(w, 4) for w in widths),
        "cross_tests": _cross_count(widths),
    }
    owner: dict[int, tuple[int, int, int]] = {}
    for gi, group in enumerate(code.groups):
        cols = [lower[p] for p in group]
        seen: dict[int, int] = {}
        for j, c in enumerate(cols):
            if c in seen:
                return CheckReport(name, False, "condition 1: equal columns in a block", (gi, seen[c], j), stats)
            seen[c] = j
        local: dict[int, tuple[int, int]] = {}
        for j1, j2 in combinations(range(len(cols)), 2):
            v = cols[j1] ^ cols[j2]
            if v in local:
                return CheckReport(
                    name, False, "condition 2: four columns of a block sum to zero", (gi,) + local[v] + (j1, j2), stats
                )
            local[v] = (j1, j2)
        for v, pair in local.items():
            prev = owner.get(v)
            if prev is not None:
                return CheckReport(
                    name, False, "condition 3: two pairs from two blocks sum to zero", prev + (gi,) + pair, stats
                )
            owner[v] = (gi,) + pair
    return CheckReport(name, True, "", (), stats)


def _cross_count(widths: list[int]) -> int:
    pair_counts = [comb(w, 2) for w in widths]
    total = sum(pair_counts)
    return (total * total - sum(c * c for c in pair_counts)) // 2


class DistanceTooExpensive(ValueError):
    pass


def _packed(vec: int, nbytes: int) -> np.ndarray:
    return np.frombuffer(vec.to_bytes(nbytes, "little"), dtype=np.uint8)


def exact_min_distance(code: LrcCode, max_k: int = 24) -> int:
    """Minimum weight over all 2^k - 1 nonzero codewords (small k only)."""
    G = nullspace(code.H)
    k = G.nrows
    if k > max_k:
        raise DistanceTooExpensive(f"k={k} exceeds the enumeration limit {max_k}")
    if k == 0:
        raise ValueError("code has no nonzero codewords")
    nbytes = (code.n + 7) // 8
    rows = [_packed(r, nbytes) for r in G.rows]
    inner = min(k, 12)
    table = np.zeros((1, nbytes), dtype=np.uint8)
    for r in rows[:inner]:
        table = np.concatenate([table, table ^ r])
    weights_base = np.bitwise_count(table).sum(axis=1)
    best = int(weights_base[1:].min()) if len(table) > 1 else code.n + 1
    outer = rows[inner:]
    offset = np.zeros(nbytes, dtype=np.uint8)
    # Gray-code walk over the outer rows; every step changes one row.
    for step in range(1, 1 << len(outer)):
        flip = (step & -step).bit_length() - 1
        offset = offset ^ outer[flip]
        w = int(np.bitwise_count(table ^ offset).sum(axis=1).min())
        if w < best:
            best = w
    return best


@dataclass
class BoundReport:
    n: int
    k: int
    r: int
    singleton_like_d_max: int
    rate_bound_k_max: int
    min_branch: str
    k_optimal: bool
    d_optimal_singleton: bool
    preconditions_met: bool
    d_certified: int | None = None
    ell_range: tuple | None = None
    ell_in_range: bool | None = None
    caveats: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"n={self.n}",
            f"k={self.k}",
            f"r={self.r}",
            f"d_certified={'>=' + str(self.d_certified) if self.d_certified else 'none'}",
            f"singleton_like_d_max={self.singleton_like_d_max}",
            f"rate_bound_k_max={self.rate_bound_k_max}",
            f"min_branch={self.min_branch}",
            f"k_optimal={str(self.k_optimal).lower()}",
            f"d_optimal_singleton={str(self.d_optimal_singleton).lower()}",
            f"preconditions_met={str(self.preconditions_met).lower()}",
        ]
        if self.ell_range is not None:
            lo, hi = self.ell_range
            out.append(f"ell_range=({lo},{hi}]")
            out.append(f"ell_in_range={str(self.ell_in_range).lower()}")
        for c in self.caveats:
            out.append(f"warning={c}")
        return out


def optimality_report(code: LrcCode, lemma6: CheckReport | None = None) -> BoundReport:
    """Compare the rank-derived dimension with the explicit rate bound."""
    n, k = code.n, code.k
    r = code.locality
    if lemma6 is None:
        lemma6 = check_lemma6(code)
    d_cert = 6 if lemma6.passed else None
    rb = rate_bound(n, r) if n % (r + 1) == 0 else None
    d_max = singleton_like(n, k, r)
    p = code.params
    caveats = p.caveats()
    lrange = in_range = None
    try:
        lrange = ell_range(p.b, p.s, p.m, p.kind)
        in_range = ell_in_range(code.ell, lrange)
    except ValueError as exc:
        caveats.append(f"ell range n/a: {exc}")
    if rb is None:
        caveats.append(f"r+1={r + 1} does not divide n={n}; rate bound n/a")
    return BoundReport(
        n=n,
        k=k,
        r=r,
        singleton_like_d_max=d_max,
        rate_bound_k_max=rb.k_max if rb else -1,
        min_branch=rb.branch if rb else "n/a",
        k_optimal=rb is not None and k == rb.k_max,
        d_optimal_singleton=d_cert is not None and d_cert == d_max,
        preconditions_met=bool(rb and rb.preconditions_met and d_cert),
        d_certified=d_cert,
        ell_range=lrange,
        ell_in_range=in_range,
        caveats=caveats,
    )


def claim_report(code: LrcCode, n: int, k: int, d: int, exact_d: int | None = None) -> CheckReport:
    """Compare computed parameters with claimed [n, k, d]; mismatches are flagged."""
    stats = {"claimed": f"[{n},{k},{d}]", "computed": f"[{code.n},{code.k},{exact_d if exact_d is not None else '?'}]"}
    mismatches = []
    if code.n != n:
        mismatches.append("n")
    if code.k != k:
        mismatches.append("k")
    if exact_d is not None and exact_d != d:
        mismatches.append("d")
    detail = "mismatch in " + ",".join(mismatches) if mismatches else ""
    return CheckReport("claim", not mismatches, detail, tuple(mismatches), stats)
