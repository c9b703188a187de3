"""Upper bounds for binary LRCs, in exact integer/rational arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ceil_log2(x: int) -> int:
    """Smallest e with 2^e >= x, for x >= 1."""
    if x < 1:
        raise ValueError("x must be >= 1")
    return (x - 1).bit_length()


def singleton_like(n: int, k: int, r: int) -> int:
    """Largest distance allowed by d <= n - k - ceil(k/r) + 2."""
    if not (n > k >= 1 and r >= 1):
        raise ValueError("need n > k >= 1 and r >= 1")
    return n - k - ceil_div(k, r) + 2


def _pow2_exceeds(L: int, p: int, q: int) -> bool:
    """Exactly decide L < 2^(p/q), i.e. L^q < 2^p, for L >= 1, q >= 1, p >= 0."""
    bl = L.bit_length()
    # 2^(bl-1) <= L < 2^bl
    if q * bl <= p:
        return True
    if q * (bl - 1) >= p:
        return False
    return L ** q < (1 << p)


@dataclass(frozen=True)
class RateBound:
    k_max: int
    branch: str  # "log" or "rational": which term attains the min
    preconditions_met: bool


def rate_bound(n: int, r: int) -> RateBound:
    """Largest integer k with k <= rn/(r+1) - min{log2(1 + rn/2), rn/((r+1)(r+2))}.

    With (r+1) | n both rn/(r+1) and rn/2 are integers. The min is resolved
    by comparing L = 1 + rn/2 with 2^R through integer powers; no floating
    point is involved.
    """
    if r < 1 or n < 1:
        raise ValueError("need n, r >= 1")
    if n % (r + 1):
        raise ValueError(f"r+1={r + 1} does not divide n={n}")
    I = r * n // (r + 1)
    L = 1 + r * n // 2
    R = Fraction(r * n, (r + 1) * (r + 2))
    if _pow2_exceeds(L, R.numerator, R.denominator):
        k_max, branch = I - ceil_log2(L), "log"
    else:
        k_max, branch = math.floor(I - R), "rational"
    return RateBound(k_max, branch, 2 <= r and 2 * r <= n - 4)


def rate_bound_k(n: int, r: int) -> int:
    return rate_bound(n, r).k_max


def ell_lower_exclusive(b: int, s: int, m: int) -> Fraction:
    """(2^(m+s-1) - 1) / (2^(b-1) (2^b + 1)); ell must exceed it for optimality."""
    return Fraction((1 << (m + s - 1)) - 1, (1 << (b - 1)) * ((1 << b) + 1))


def ell_range(b: int, s: int, m: int, kind: str) -> tuple[Fraction, int]:
    """(exclusive lower bound, inclusive upper bound) on ell for k-optimal codes."""
    from .subspaces import full_spread_size, partial_spread_size

    t = 2 * b - s
    if not 0 <= s < b:
        raise ValueError(f"need 0 <= s < b (got s={s}, b={b})")
    if m < 4 * b:
        raise ValueError(f"the optimal ell range requires m >= 4b (m={m}, b={b})")
    if kind == "full":
        if m % t:
            raise ValueError(f"t={t} does not divide m={m}")
        hi = full_spread_size(m, t)
    elif kind == "partial":
        z = m % t
        if z == 0:
            raise ValueError(f"t={t} divides m={m}; use kind='full'")
        if z > b:
            raise ValueError(f"z = m mod t = {z} exceeds b = {b}")
        hi = partial_spread_size(m, t)
    else:
        raise ValueError(f"unknown spread kind {kind!r}")
    return ell_lower_exclusive(b, s, m), hi


def ell_in_range(ell: int, bounds: tuple[Fraction, int]) -> bool:
    lo, hi = bounds
    return lo < ell <= hi
