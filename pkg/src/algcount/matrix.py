"""Dense matrices over F_q with exact Gaussian elimination.

Vectors (``VecF``) are plain tuples of field elements.  Over F_2 the
elimination routines switch to rows packed into Python ints; the result is
identical to the generic path.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ContextMismatch, DimensionMismatch, Singular
from .field import FieldCtx

VecF = tuple


class MatF:
    """An immutable rows x cols matrix over a fixed field, stored row-major."""

    __slots__ = ("ctx", "rows", "cols", "entries", "_hash")

    def __init__(self, ctx: FieldCtx, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{len(entries)} entries for a {rows}x{cols} matrix"
            )
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> "MatF":
        rows = [tuple(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(ctx, len(rows), ncols, (x for r in rows for x in r))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "MatF":
        return cls(ctx, n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int | None = None) -> "MatF":
        cols = rows if cols is None else cols
        return cls(ctx, rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, MatF):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.entries == other.entries
            and self.ctx == other.ctx
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.q, self.rows, self.cols, self.entries))
        return self._hash

    def __getstate__(self):
        return self.ctx, self.rows, self.cols, self.entries

    def __setstate__(self, state):
        self.ctx, self.rows, self.cols, self.entries = state
        self._hash = None

    def __matmul__(self, other):
        if isinstance(other, MatF):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    @property
    def T(self):
        return mat_transpose(self)

    def __repr__(self):
        s = self.ctx.element_str
        body = ", ".join("[" + ", ".join(s(x) for x in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"MatF([{body}])"


def _same_ctx(a: MatF, b: MatF):
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx!r} vs {b.ctx!r}")


def mat_mul(a: MatF, b: MatF) -> MatF:
    _same_ctx(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    add, mul = a.ctx.add, a.ctx.mul
    bcols = [b.entries[j::b.cols] for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for col in bcols:
            s = 0
            for x, y in zip(arow, col):
                if x and y:
                    s = add[s][mul[x][y]]
            out.append(s)
    return MatF(a.ctx, a.rows, b.cols, out)


def mat_vec(a: MatF, x: Sequence[int]) -> VecF:
    if len(x) != a.cols:
        raise DimensionMismatch(f"{a.shape} matrix times length-{len(x)} vector")
    add, mul = a.ctx.add, a.ctx.mul
    out = []
    for i in range(a.rows):
        s = 0
        for u, v in zip(a.row(i), x):
            if u and v:
                s = add[s][mul[u][v]]
        out.append(s)
    return tuple(out)


def mat_transpose(a: MatF) -> MatF:
    return MatF(a.ctx, a.cols, a.rows,
                (a.entries[i * a.cols + j] for j in range(a.cols) for i in range(a.rows)))


def mat_add(a: MatF, b: MatF) -> MatF:
    _same_ctx(a, b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    add = a.ctx.add
    return MatF(a.ctx, a.rows, a.cols, (add[x][y] for x, y in zip(a.entries, b.entries)))


def mat_sub(a: MatF, b: MatF) -> MatF:
    _same_ctx(a, b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot subtract {b.shape} from {a.shape}")
    sub = a.ctx.sub
    return MatF(a.ctx, a.rows, a.cols, (sub[x][y] for x, y in zip(a.entries, b.entries)))


def mat_scale(c: int, a: MatF) -> MatF:
    mc = a.ctx.mul[c]
    return MatF(a.ctx, a.rows, a.cols, (mc[x] for x in a.entries))


def kron(a: MatF, b: MatF) -> MatF:
    """Kronecker product; block (i, j) of the result is ``a[i, j] * b``."""
    _same_ctx(a, b)
    mul = a.ctx.mul
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for k in range(b.rows):
            brow = b.row(k)
            for x in arow:
                mx = mul[x]
                out.extend(mx[y] for y in brow)
    return MatF(a.ctx, a.rows * b.rows, a.cols * b.cols, out)


def vec(m: MatF) -> VecF:
    """Stack the columns of ``m``, first column on top."""
    return tuple(m.entries[i * m.cols + j] for j in range(m.cols) for i in range(m.rows))


def unvec(ctx: FieldCtx, v: Sequence[int], rows: int, cols: int) -> MatF:
    if len(v) != rows * cols:
        raise DimensionMismatch(f"length {len(v)} cannot fill {rows}x{cols}")
    return MatF(ctx, rows, cols, (v[j * rows + i] for i in range(rows) for j in range(cols)))


# -- elimination ------------------------------------------------------------

def _rref_generic(ctx: FieldCtx, rows, ncols):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    mul, sub, inv = ctx.mul, ctx.sub, ctx.inv
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if lead != 1:
            mi = mul[inv[lead]]
            rows[r] = [mi[x] for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                mf = mul[f]
                rows[i] = [sub[x][mf[y]] for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _pack_gf2(rows):
    return [sum(1 << j for j, x in enumerate(r) if x) for r in rows]


def _rref_gf2_packed(packed, ncols):
    rows = list(packed)
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        bit = 1 << c
        pr = next((i for i in range(r, nrows) if rows[i] & bit), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _is_gf2(ctx: FieldCtx) -> bool:
    return ctx.q == 2


def rref(a: MatF, use_gf2: bool = True):
    """Return (reduced nonzero rows as lists, pivot columns)."""
    rows = a.to_rows()
    if use_gf2 and _is_gf2(a.ctx):
        packed, pivots = _rref_gf2_packed(_pack_gf2(rows), a.cols)
        return [[(w >> j) & 1 for j in range(a.cols)] for w in packed], pivots
    return _rref_generic(a.ctx, rows, a.cols)


def mat_rank(a: MatF, use_gf2: bool = True) -> int:
    if use_gf2 and _is_gf2(a.ctx):
        return len(_rref_gf2_packed(_pack_gf2(a.to_rows()), a.cols)[1])
    return len(_rref_generic(a.ctx, a.to_rows(), a.cols)[1])


def mat_nullity(a: MatF, use_gf2: bool = True) -> int:
    return a.cols - mat_rank(a, use_gf2)


def null_space_basis(a: MatF, use_gf2: bool = True) -> list:
    """Basis of {x : a x = 0}, one vector per free column (ascending)."""
    red, pivots = rref(a, use_gf2)
    neg = a.ctx.neg
    pivot_set = set(pivots)
    basis = []
    for f in range(a.cols):
        if f in pivot_set:
            continue
        x = [0] * a.cols
        x[f] = 1
        for r, pc in enumerate(pivots):
            x[pc] = neg[red[r][f]]
        basis.append(tuple(x))
    return basis


def mat_inverse(a: MatF) -> MatF:
    """Gauss-Jordan inverse; raises Singular when rank < n."""
    if not a.is_square():
        raise DimensionMismatch(f"cannot invert a {a.rows}x{a.cols} matrix")
    n = a.rows
    aug = [list(a.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    red, pivots = _rref_generic(a.ctx, aug, n)
    if len(pivots) < n or pivots[-1] >= n:
        raise Singular("matrix is not invertible")
    return MatF(a.ctx, n, n, (x for r in red for x in r[n:]))


def is_invertible(a: MatF) -> bool:
    return a.is_square() and mat_rank(a) == a.rows


def mat_det(a: MatF) -> int:
    """Determinant via forward elimination (used by tests and sanity checks)."""
    if not a.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    ctx = a.ctx
    mul, sub, inv, neg = ctx.mul, ctx.sub, ctx.inv, ctx.neg
    rows = a.to_rows()
    n = a.rows
    det = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            det = neg[det]
        lead = rows[c][c]
        det = mul[det][lead]
        li = inv[lead]
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                mf = mul[mul[f][li]]
                rows[i] = [sub[x][mf[y]] for x, y in zip(rows[i], rows[c])]
    return det


def vec_add(ctx: FieldCtx, x: Sequence[int], y: Sequence[int]) -> VecF:
    add = ctx.add
    return tuple(add[u][v] for u, v in zip(x, y))


def vec_scale(ctx: FieldCtx, c: int, x: Sequence[int]) -> VecF:
    mc = ctx.mul[c]
    return tuple(mc[u] for u in x)


def stack_rows(ctx: FieldCtx, vectors: Sequence[Sequence[int]], ncols: int) -> MatF:
    return MatF(ctx, len(vectors), ncols, (x for v in vectors for x in v))
