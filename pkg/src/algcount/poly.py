"""Univariate polynomials over F_q.

A polynomial is a tuple of field elements, constant term first, with no
trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from .field import FieldCtx, format_fp_poly

ZERO = ()


def trim(c) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(a: tuple) -> int:
    return len(a) - 1  # -1 for the zero polynomial


def p_add(ctx: FieldCtx, a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    add = ctx.add
    out = list(a)
    for i, y in enumerate(b):
        out[i] = add[out[i]][y]
    return trim(out)


def p_sub(ctx: FieldCtx, a: tuple, b: tuple) -> tuple:
    sub = ctx.sub
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return trim(sub[x][y] for x, y in zip(a, b))


def p_mul(ctx: FieldCtx, a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ZERO
    add, mul = ctx.add, ctx.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            mx = mul[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][mx[y]]
    return trim(out)


def p_divmod(ctx: FieldCtx, a: tuple, b: tuple):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    mul, sub = ctx.mul, ctx.sub
    r = list(a)
    db = len(b) - 1
    inv_lead = ctx.inv[b[-1]]
    if len(r) <= db:
        return ZERO, tuple(r)
    quot = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        f = mul[c][inv_lead]
        quot[k - db] = f
        mf = mul[f]
        shift = k - db
        for i, y in enumerate(b):
            if y:
                r[shift + i] = sub[r[shift + i]][mf[y]]
    return trim(quot), trim(r[:db])


def p_mod(ctx: FieldCtx, a: tuple, b: tuple) -> tuple:
    return p_divmod(ctx, a, b)[1]


def p_monic(ctx: FieldCtx, a: tuple) -> tuple:
    if not a or a[-1] == 1:
        return a
    mi = ctx.mul[ctx.inv[a[-1]]]
    return tuple(mi[x] for x in a)


def p_scale(ctx: FieldCtx, c: int, a: tuple) -> tuple:
    mc = ctx.mul[c]
    return trim(mc[x] for x in a)


def format_poly(ctx: FieldCtx, a: tuple, var: str = "x") -> str:
    """Descending powers, e.g. ``x^2+x+1``.

    Over F_p coefficients are printed as integers in [0, p).  Over F_{p^e}
    with e > 1 a coefficient outside F_p is written as a polynomial in
    ``a``, the class of x in the field, e.g. ``x^2+(a+1)x+a``.
    """
    if not a:
        return "0"
    if ctx.e == 1:
        return format_fp_poly(a, var)
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        if c < ctx.p:
            cs = "" if (c == 1 and k > 0) else str(c)
        else:
            cs = format_fp_poly(ctx.to_coeffs(c), "a")
            if "+" in cs and k > 0:
                cs = f"({cs})"
        if k == 0:
            terms.append(cs)
        elif k == 1:
            terms.append(f"{cs}{var}")
        else:
            terms.append(f"{cs}{var}^{k}")
    return "+".join(terms)
