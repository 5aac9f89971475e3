"""Structure tensors, the algebras they define, and the GL_n action on them.

A structure tensor is an n-tuple (M_1, ..., M_n) of n x n matrices.  It
defines the bilinear product ``x * y = sum_i x_i M_i y`` on F_q^n, so M_i
is the matrix of left multiplication by the basis vector e_i and
``e_i * e_j`` is column j of M_i.

Internally a tensor is stored as its stacked column vectorisation
``Vec = vec(M_1) + ... + vec(M_n)``.  With this layout the product
``e_i * e_j`` is the contiguous slice ``Vec[i n^2 + j n : i n^2 + j n + n]``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .errors import BudgetExceeded, DimensionMismatch, UnknownPredicate
from .field import FieldCtx
from .matrix import (
    MatF,
    _rref_generic,
    mat_add,
    mat_inverse,
    mat_rank,
    mat_scale,
    unvec,
    vec,
)

DEFAULT_PAIR_BUDGET = 2**24


class StructureTensor:
    __slots__ = ("ctx", "n", "vec", "_mats")

    def __init__(self, ctx: FieldCtx, n: int, vec_entries: Sequence[int]):
        vec_entries = tuple(vec_entries)
        if len(vec_entries) != n**3:
            raise DimensionMismatch(f"need {n**3} coordinates, got {len(vec_entries)}")
        self.ctx = ctx
        self.n = n
        self.vec = vec_entries
        self._mats = None

    @classmethod
    def from_mats(cls, ctx: FieldCtx, mats: Sequence[MatF]) -> "StructureTensor":
        n = len(mats)
        if any(m.shape != (n, n) for m in mats):
            raise DimensionMismatch(f"expected {n} matrices of shape {n}x{n}")
        return cls(ctx, n, (x for m in mats for x in vec(m)))

    @classmethod
    def from_products(cls, ctx: FieldCtx, table) -> "StructureTensor":
        """Build from a multiplication table: ``table[i][j]`` = coords of e_i e_j."""
        n = len(table)
        return cls(ctx, n, (x for i in range(n) for j in range(n) for x in table[i][j]))

    @classmethod
    def zero(cls, ctx: FieldCtx, n: int) -> "StructureTensor":
        return cls(ctx, n, (0,) * n**3)

    @property
    def mats(self) -> tuple:
        if self._mats is None:
            n, n2 = self.n, self.n**2
            self._mats = tuple(
                unvec(self.ctx, self.vec[i * n2:(i + 1) * n2], n, n) for i in range(n)
            )
        return self._mats

    def product(self, i: int, j: int) -> tuple:
        """Coordinates of e_i * e_j."""
        n = self.n
        start = i * n * n + j * n
        return self.vec[start:start + n]

    def products(self) -> list:
        return [[self.product(i, j) for j in range(self.n)] for i in range(self.n)]

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.n == other.n and self.vec == other.vec and self.ctx == other.ctx

    def __hash__(self):
        return hash((self.n, self.vec))

    def __repr__(self):
        return f"StructureTensor(n={self.n}, mats={list(self.mats)!r})"


# -- index encoding of F_q^{n^3}, lexicographic on Vec -------------------

def tensor_index(t: StructureTensor) -> int:
    q = t.ctx.q
    idx = 0
    for x in t.vec:
        idx = idx * q + x
    return idx


def tensor_from_index(ctx: FieldCtx, n: int, idx: int) -> StructureTensor:
    q = ctx.q
    out = []
    for _ in range(n**3):
        idx, r = divmod(idx, q)
        out.append(r)
    return StructureTensor(ctx, n, reversed(out))


def all_tensors(ctx: FieldCtx, n: int):
    """Every structure tensor, in lexicographic Vec order."""
    for v in itertools.product(range(ctx.q), repeat=n**3):
        yield StructureTensor(ctx, n, v)


# -- multiplication and the action ----------------------------------------

def alg_mul(t: StructureTensor, x: Sequence[int], y: Sequence[int]) -> tuple:
    """x * y = sum_{i,j} x_i y_j (e_i * e_j)."""
    n = t.n
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"elements must have length {n}")
    add, mul = t.ctx.add, t.ctx.mul
    out = [0] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = mul[xi][yj]
            mc = mul[c]
            for k, z in enumerate(t.product(i, j)):
                if z:
                    out[k] = add[out[k]][mc[z]]
    return tuple(out)


def _flat_mul(ctx: FieldCtx, a, b, n: int) -> list:
    """Product of two n x n row-major flat lists."""
    add, mul = ctx.add, ctx.mul
    out = [0] * (n * n)
    for i in range(n):
        for k in range(n):
            x = a[i * n + k]
            if not x:
                continue
            mx = mul[x]
            for j in range(n):
                y = b[k * n + j]
                if y:
                    out[i * n + j] = add[out[i * n + j]][mx[y]]
    return out


def apply_action(t: StructureTensor, g: MatF, g_inv: MatF | None = None) -> StructureTensor:
    """phi(M, G): component l is G^{-1} (sum_i G[i, l] M_i) G."""
    n = t.n
    if g.shape != (n, n):
        raise DimensionMismatch(f"group element must be {n}x{n}")
    if g_inv is None:
        g_inv = mat_inverse(g)
    ctx = t.ctx
    add, mul = ctx.add, ctx.mul
    mats = [m.entries for m in t.mats]
    out = []
    for l in range(n):
        acc = [0] * (n * n)
        for i in range(n):
            c = g[i, l]
            if c:
                mc = mul[c]
                acc = [add[a][mc[b]] for a, b in zip(acc, mats[i])]
        prod = _flat_mul(ctx, _flat_mul(ctx, g_inv.entries, acc, n), g.entries, n)
        out.append(MatF(ctx, n, n, prod))
    return StructureTensor.from_mats(ctx, out)


def iso_check(t: StructureTensor, t2: StructureTensor, g: MatF) -> bool:
    """Whether x -> Gx is an algebra isomorphism alg(t) -> alg(t2).

    Checked on basis pairs only; equivalent to ``apply_action(t2, g) == t``.
    """
    mat_inverse(g)  # raises Singular
    n = t.n
    cols = [tuple(g[k, j] for k in range(n)) for j in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = g @ t.product(i, j)
            if lhs != alg_mul(t2, cols[i], cols[j]):
                return False
    return True


# -- isomorphism-invariant predicates ---------------------------------------

def is_commutative(t: StructureTensor, **_) -> bool:
    return all(t.product(i, j) == t.product(j, i)
               for i in range(t.n) for j in range(i + 1, t.n))


def is_anticommutative(t: StructureTensor, **_) -> bool:
    neg = t.ctx.neg
    for i in range(t.n):
        for j in range(i, t.n):
            if t.product(i, j) != tuple(neg[z] for z in t.product(j, i)):
                return False
    return True


def is_associative(t: StructureTensor, **_) -> bool:
    n = t.n
    basis = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            ij = t.product(i, j)
            for k in range(n):
                if alg_mul(t, ij, basis[k]) != alg_mul(t, basis[i], t.product(j, k)):
                    return False
    return True


def is_unital(t: StructureTensor, **_) -> bool:
    """Solve u e_j = e_j and e_j u = e_j (2n^2 equations in u) for a unit u."""
    n = t.n
    rows = []
    for j in range(n):
        for k in range(n):
            rhs = int(j == k)
            rows.append([t.product(i, j)[k] for i in range(n)] + [rhs])
            rows.append([t.product(j, i)[k] for i in range(n)] + [rhs])
    _, pivots = _rref_generic(t.ctx, rows, n + 1)
    return n not in pivots


def is_zero_divisor_free(t: StructureTensor, budget: int = DEFAULT_PAIR_BUDGET, **_) -> bool:
    """No x, y both nonzero with x * y = 0.

    For each nonzero x, left multiplication ``y -> x * y`` must be
    injective; that is a rank check on sum_i x_i M_i, which covers every
    pair (x, y) at once.
    """
    q, n = t.ctx.q, t.n
    if q ** (2 * n) > budget:
        raise BudgetExceeded(
            f"zero-divisor check over q^(2n) = {q ** (2 * n)} pairs exceeds {budget}"
        )
    mats = t.mats
    for x in itertools.product(range(q), repeat=n):
        if not any(x):
            continue
        left = MatF.zeros(t.ctx, n)
        for xi, m in zip(x, mats):
            if xi:
                left = mat_add(left, mat_scale(xi, m))
        if mat_rank(left) < n:
            return False
    return True


def always_true(t: StructureTensor, **_) -> bool:
    return True


PREDICATES: dict[str, Callable[..., bool]] = {
    "commutative": is_commutative,
    "associative": is_associative,
    "unital": is_unital,
    "anticommutative": is_anticommutative,
    "zero-divisor-free": is_zero_divisor_free,
}

# accepted as a filter, but not one of the algebra subclasses
TRIVIAL_PREDICATES: dict[str, Callable[..., bool]] = {"always-true": always_true}


def get_predicate(name: str) -> Callable[..., bool]:
    try:
        return PREDICATES.get(name) or TRIVIAL_PREDICATES[name]
    except KeyError:
        raise UnknownPredicate(name) from None


def predicate(name: str, t: StructureTensor, **kwargs) -> bool:
    return get_predicate(name)(t, **kwargs)
