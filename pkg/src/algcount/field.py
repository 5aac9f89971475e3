"""Finite fields F_q, q = p^e, in a polynomial basis over F_p.

Elements are plain ints in ``range(q)``.  The int ``c_0 + c_1 p + ... +
c_{e-1} p^{e-1}`` stands for the polynomial ``c_0 + c_1 x + ...`` reduced
modulo the field's reduction polynomial, so integer order is the canonical
element order: ``0, 1, ..., p-1, x, x+1, ...``.  All arithmetic goes through
precomputed tables.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import DivisionByZero, FieldTooLarge, NonPrimeCharacteristic

DEFAULT_MAX_Q = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- polynomials over F_p as coefficient lists, low degree first ----------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(a, b, p):
    """Remainder of a modulo b over F_p (b nonzero)."""
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bc) % p
        a = _trim(a)
    return a


def _monic_polys(p, degree):
    """All monic polynomials of the given degree, low coefficient first."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _pmod(poly, g, p):
                return False
    return True


def smallest_irreducible(p: int, e: int):
    """Lexicographically smallest monic irreducible of degree e.

    Coefficient vectors are compared from the constant term upward, which
    is exactly the order ``itertools.product`` produces.
    """
    for poly in _monic_polys(p, e):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


class FieldCtx:
    """Arithmetic context for F_q.  Immutable; share freely."""

    def __init__(self, p: int, e: int, reduction_poly=None):
        self.p = p
        self.e = e
        self.q = p**e
        self.reduction_poly = tuple(reduction_poly) if e > 1 else None
        q = self.q
        self.elements = tuple(range(q))
        self.zero = 0
        self.one = 1

        if e == 1:
            self.add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            coeffs = [self.to_coeffs(a) for a in range(q)]
            self.add = [
                [self.from_coeffs([(x + y) % p for x, y in zip(coeffs[a], coeffs[b])])
                 for b in range(q)]
                for a in range(q)
            ]
            self.mul = [[0] * q for _ in range(q)]
            for a in range(q):
                for b in range(a, q):
                    prod = [0] * (2 * e - 1)
                    for i, x in enumerate(coeffs[a]):
                        if x:
                            for j, y in enumerate(coeffs[b]):
                                prod[i + j] = (prod[i + j] + x * y) % p
                    r = _pmod(prod, self.reduction_poly, p)
                    c = self.from_coeffs(r + [0] * (e - len(r)))
                    self.mul[a][b] = self.mul[b][a] = c

        self.neg = [row.index(0) for row in self.add]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]
        self.inv = [None] * q
        for a in range(1, q):
            self.inv[a] = self.mul[a].index(1)

    def __reduce__(self):
        return make_field, (self.p, self.e)

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.e, self.reduction_poly)
            == (other.p, other.e, other.reduction_poly)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.reduction_poly))

    def __repr__(self):
        if self.e == 1:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.q}, mod {format_fp_poly(self.reduction_poly)})"

    def to_coeffs(self, a: int) -> tuple:
        """Coefficient vector of ``a`` over F_p, constant term first."""
        out = []
        for _ in range(self.e):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        a = 0
        for c in reversed(tuple(coeffs)):
            a = a * self.p + c % self.p
        return a

    def element_str(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        return format_fp_poly(self.to_coeffs(a)) or "0"

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a = f_inv(self, a)
            k = -k
        result = 1
        while k:
            if k & 1:
                result = self.mul[result][a]
            a = self.mul[a][a]
            k >>= 1
        return result


def format_fp_poly(coeffs, var: str = "x") -> str:
    """Render a coefficient vector (constant first) as ``x^2+x+1``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        coef = "" if (c == 1 and k > 0) else str(c)
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append(f"{coef}{var}")
        else:
            terms.append(f"{coef}{var}^{k}")
    return "+".join(terms)


@lru_cache(maxsize=None)
def _make_field(p: int, e: int) -> FieldCtx:
    poly = smallest_irreducible(p, e) if e > 1 else None
    return FieldCtx(p, e, poly)


def make_field(p: int, e: int = 1, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    """Build (or fetch the cached) context for F_{p^e}."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if p**e > max_q:
        raise FieldTooLarge(f"q = {p}^{e} = {p**e} exceeds the bound {max_q}")
    return _make_field(p, e)


def f_add(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.add[a][b]


def f_mul(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.mul[a][b]


def f_neg(ctx: FieldCtx, a: int) -> int:
    return ctx.neg[a]


def f_sub(ctx: FieldCtx, a: int, b: int) -> int:
    return ctx.sub[a][b]


def f_inv(ctx: FieldCtx, a: int) -> int:
    if a == 0:
        raise DivisionByZero("0 has no multiplicative inverse")
    return ctx.inv[a]


def all_elements(ctx: FieldCtx) -> tuple:
    """Every element in canonical order; 0 first, 1 second."""
    return ctx.elements
