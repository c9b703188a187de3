"""GF(2^m) arithmetic in the polynomial basis, plus binary polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2 import BitVec

# One fixed primitive polynomial per degree, bit i = coefficient of x^i.
PRIMITIVE_POLYS: dict[int, int] = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: (1 << 9) | (1 << 4) | 1,
    10: (1 << 10) | (1 << 3) | 1,
    11: (1 << 11) | (1 << 2) | 1,
    12: (1 << 12) | (1 << 6) | (1 << 4) | (1 << 1) | 1,
    13: (1 << 13) | (1 << 4) | (1 << 3) | (1 << 1) | 1,
    14: (1 << 14) | (1 << 10) | (1 << 6) | (1 << 1) | 1,
    15: (1 << 15) | (1 << 1) | 1,
    16: (1 << 16) | (1 << 12) | (1 << 3) | (1 << 1) | 1,
    17: (1 << 17) | (1 << 3) | 1,
    18: (1 << 18) | (1 << 7) | 1,
    19: (1 << 19) | (1 << 5) | (1 << 2) | (1 << 1) | 1,
    20: (1 << 20) | (1 << 3) | 1,
    21: (1 << 21) | (1 << 2) | 1,
    22: (1 << 22) | (1 << 1) | 1,
    23: (1 << 23) | (1 << 5) | 1,
    24: (1 << 24) | (1 << 7) | (1 << 2) | (1 << 1) | 1,
    25: (1 << 25) | (1 << 3) | 1,
    26: (1 << 26) | (1 << 6) | (1 << 2) | (1 << 1) | 1,
    27: (1 << 27) | (1 << 5) | (1 << 2) | (1 << 1) | 1,
    28: (1 << 28) | (1 << 3) | 1,
    29: (1 << 29) | (1 << 2) | 1,
    30: (1 << 30) | (1 << 23) | (1 << 2) | (1 << 1) | 1,
    31: (1 << 31) | (1 << 3) | 1,
    32: (1 << 32) | (1 << 22) | (1 << 2) | (1 << 1) | 1,
}

MIN_DEGREE = 2
MAX_DEGREE = 32


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (fine for n < 2^33)."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


@dataclass(frozen=True)
class Poly2:
    """Binary polynomial; bit ``i`` of ``coeffs`` is the coefficient of x^i."""

    coeffs: int

    @classmethod
    def from_exponents(cls, *exps: int) -> "Poly2":
        c = 0
        for e in exps:
            c ^= 1 << e
        return cls(c)

    @property
    def degree(self) -> int:
        return self.coeffs.bit_length() - 1

    def __mul__(self, other: "Poly2") -> "Poly2":
        return Poly2(clmul(self.coeffs, other.coeffs))

    def __divmod__(self, other: "Poly2") -> tuple["Poly2", "Poly2"]:
        q, r = poly_divmod(self.coeffs, other.coeffs)
        return Poly2(q), Poly2(r)

    def __mod__(self, other: "Poly2") -> "Poly2":
        return divmod(self, other)[1]

    def divides(self, other: "Poly2") -> bool:
        return (other % self).coeffs == 0

    def coefficient_list(self) -> list[int]:
        """Coefficients, lowest degree first."""
        return [(self.coeffs >> i) & 1 for i in range(max(self.degree + 1, 1))]

    def __str__(self) -> str:
        if self.coeffs == 0:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            if (self.coeffs >> e) & 1:
                terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)


class FieldCtx:
    """GF(2^m) with elements as m-bit ints in the basis {1, a, ..., a^(m-1)}.

    ``a`` (the residue of x) is primitive; this is re-checked on construction.
    """

    def __init__(self, m: int, prim_poly: int):
        if prim_poly.bit_length() - 1 != m:
            raise ValueError("polynomial degree does not match m")
        self.m = m
        self.prim_poly = prim_poly
        self.order = (1 << m) - 1
        self.alpha = 2 if m > 1 else 1
        if not self._alpha_is_primitive():
            raise ValueError(f"polynomial {Poly2(prim_poly)} is not primitive")

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, prim_poly={Poly2(self.prim_poly)})"

    def _alpha_is_primitive(self) -> bool:
        if self.pow(self.alpha, self.order) != 1:
            return False
        return all(self.pow(self.alpha, self.order // p) != 1 for p in prime_factors(self.order))

    def mul(self, a: int, b: int) -> int:
        m, poly = self.m, self.prim_poly
        top = 1 << m
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= poly
        return out

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 1)

    def alpha_pow(self, e: int) -> int:
        return self.pow(self.alpha, e % self.order)

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order
        for p in prime_factors(self.order):
            while n % p == 0 and self.pow(a, n // p) == 1:
                n //= p
        return n


@lru_cache(maxsize=None)
def field_ctx(m: int) -> FieldCtx:
    """Context for GF(2^m) over the built-in primitive polynomial."""
    if not MIN_DEGREE <= m <= MAX_DEGREE:
        raise ValueError(f"extension degree {m} outside supported range [{MIN_DEGREE}, {MAX_DEGREE}]")
    return FieldCtx(m, PRIMITIVE_POLYS[m])


def elem_to_vec(ctx: FieldCtx, x: int) -> BitVec:
    """Coordinates of ``x`` in the polynomial basis; position 0 is the constant term."""
    return BitVec(ctx.m, x)


def conjugates(ctx: FieldCtx, beta: int) -> list[int]:
    out = [beta]
    nxt = ctx.mul(beta, beta)
    while nxt != beta:
        out.append(nxt)
        nxt = ctx.mul(nxt, nxt)
    return out


def minimal_polynomial(ctx: FieldCtx, beta: int) -> Poly2:
    """Minimal polynomial of ``beta`` over GF(2).

    Multiplies out (x + c) over the Frobenius orbit of ``beta`` inside
    GF(2^m), then checks that every coefficient landed in GF(2).
    """
    if beta == 0:
        raise ValueError("beta must be nonzero")
    coeffs = [1]  # field-valued, lowest degree first
    for c in conjugates(ctx, beta):
        shifted = [0] + coeffs
        for i, a in enumerate(coeffs):
            shifted[i] ^= ctx.mul(a, c)
        coeffs = shifted
    out = 0
    for i, a in enumerate(coeffs):
        if a not in (0, 1):
            raise ArithmeticError("minimal polynomial has coefficients outside GF(2)")
        out |= a << i
    return Poly2(out)


def multiplicative_order_of_two(n: int) -> int:
    if n % 2 == 0 or n < 3:
        raise ValueError("n must be odd and at least 3")
    e, v = 1, 2 % n
    while v != 1:
        v = (v * 2) % n
        e += 1
    return e


def nth_root_context(n: int) -> tuple[FieldCtx, int]:
    """Smallest field GF(2^e) holding a primitive n-th root of unity, and that root."""
    e = multiplicative_order_of_two(n)
    if e > MAX_DEGREE:
        raise ValueError(f"ord_{n}(2) = {e} exceeds the supported degree {MAX_DEGREE}")
    ctx = field_ctx(max(e, MIN_DEGREE))
    beta = ctx.alpha_pow(ctx.order // n)
    return ctx, beta
