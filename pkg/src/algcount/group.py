"""Enumeration of GL_n(F_q) and its partition into similarity classes."""

from __future__ import annotations

import itertools
import os
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded, DimensionMismatch
from .field import FieldCtx
from .matrix import MatF
from .poly import ZERO, format_poly, p_add, p_divmod, p_monic, p_mul, p_sub

DEFAULT_GROUP_BUDGET = 2**32


@dataclass(frozen=True)
class GroupSpec:
    ctx: FieldCtx
    n: int
    budget: int = DEFAULT_GROUP_BUDGET

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")

    @property
    def q(self) -> int:
        return self.ctx.q

    def check_budget(self):
        total = self.q ** (self.n * self.n)
        if total > self.budget:
            raise BudgetExceeded(
                f"q^(n^2) = {self.q}^{self.n * self.n} candidate matrices exceeds "
                f"the enumeration budget {self.budget}"
            )


@dataclass(frozen=True)
class ClassInfo:
    key: tuple
    representative: MatF
    class_size: int


def group_order(spec: GroupSpec) -> int:
    """|GL_n(F_q)| = prod_{i<n} (q^n - q^i)."""
    q, n = spec.q, spec.n
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


# -- enumeration --------------------------------------------------------------

def _row_space(ctx: FieldCtx, n: int):
    vectors = list(itertools.product(range(ctx.q), repeat=n))
    index = {v: k for k, v in enumerate(vectors)}
    return vectors, index


def _gl_rows(ctx: FieldCtx, n: int, first_rows=None):
    """Yield invertible matrices as tuples of row indices, in lex order.

    Each row is drawn, in increasing order, from the vectors outside the
    span of the rows above it.  ``first_rows`` restricts the first row to
    an index range, which is how the space is sharded.
    """
    vectors, index = _row_space(ctx, n)
    add, mul = ctx.add, ctx.mul
    nvec = len(vectors)
    nonzero_scalars = range(1, ctx.q)

    def extend(prefix, span):
        level = len(prefix)
        if level == n - 1:
            for v in range(nvec):
                if v not in span:
                    yield prefix + (v,)
            return
        for v in range(nvec):
            if v in span:
                continue
            vv = vectors[v]
            new_span = set(span)
            for c in nonzero_scalars:
                cv = [mul[c][x] for x in vv]
                for s in span:
                    sv = vectors[s]
                    new_span.add(index[tuple(add[a][b] for a, b in zip(sv, cv))])
            yield from extend(prefix + (v,), new_span)

    if n == 1:
        rng = range(1, nvec) if first_rows is None else first_rows
        for v in rng:
            if v != 0:
                yield (v,)
        return
    rng = range(nvec) if first_rows is None else first_rows
    for v in rng:
        if v == 0:
            continue
        vv = vectors[v]
        span = {0} | {index[tuple(mul[c][x] for x in vv)] for c in nonzero_scalars}
        yield from extend((v,), span)


def enumerate_gl(spec: GroupSpec, first_rows=None):
    """Yield every element of GL_n(F_q) once, lexicographically by entries."""
    spec.check_budget()
    ctx, n = spec.ctx, spec.n
    vectors, _ = _row_space(ctx, n)
    for rows in _gl_rows(ctx, n, first_rows):
        yield MatF(ctx, n, n, (x for r in rows for x in vectors[r]))


# -- similarity keys ----------------------------------------------------------

def _smith_diagonal(ctx: FieldCtx, a):
    """Diagonal of the Smith normal form of a square polynomial matrix."""
    a = [list(r) for r in a]
    n = len(a)
    for t in range(n):
        while True:
            best = None
            best_len = None
            for i in range(t, n):
                for j in range(t, n):
                    e = a[i][j]
                    if e and (best is None or len(e) < best_len):
                        best, best_len = (i, j), len(e)
                        if best_len == 1:
                            break
                if best_len == 1:
                    break
            if best is None:
                return [p_monic(ctx, a[k][k]) for k in range(t)] + [ZERO] * (n - t)
            i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
            piv = a[t][t]
            clean = True
            for i in range(t + 1, n):
                if a[i][t]:
                    quo, rem = p_divmod(ctx, a[i][t], piv)
                    at, ai = a[t], a[i]
                    for k in range(t, n):
                        if at[k]:
                            ai[k] = p_sub(ctx, ai[k], p_mul(ctx, quo, at[k]))
                    if rem:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    quo, rem = p_divmod(ctx, a[t][j], piv)
                    for k in range(t, n):
                        if a[k][t]:
                            a[k][j] = p_sub(ctx, a[k][j], p_mul(ctx, quo, a[k][t]))
                    if rem:
                        clean = False
            if not clean:
                continue
            if len(piv) > 1:
                bad = next(
                    (i for i in range(t + 1, n) for j in range(t + 1, n)
                     if a[i][j] and p_divmod(ctx, a[i][j], piv)[1]),
                    None,
                )
                if bad is not None:
                    a[t] = [p_add(ctx, x, y) for x, y in zip(a[t], a[bad])]
                    continue
            break
    return [p_monic(ctx, a[k][k]) for k in range(n)]


def characteristic_matrix(m: MatF):
    """The polynomial matrix xI - M."""
    ctx = m.ctx
    neg = ctx.neg
    n = m.rows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            c = neg[m[i, j]]
            if i == j:
                row.append((c, 1))
            else:
                row.append((c,) if c else ZERO)
        out.append(row)
    return out


def similarity_key(m: MatF) -> tuple:
    """Invariant factors of xI - M, each dividing the next.

    Constant factors are dropped, so the key of the n x n identity over F_2
    is ``((1, 1), (1, 1))``, i.e. ``[x+1, x+1]``.
    """
    if not m.is_square():
        raise DimensionMismatch("similarity key of a non-square matrix")
    diag = _smith_diagonal(m.ctx, characteristic_matrix(m))
    return tuple(d for d in diag if len(d) > 1)


def format_key(ctx: FieldCtx, key: tuple) -> list:
    return [format_poly(ctx, f) for f in key]


# -- class partition ----------------------------------------------------------

def sampled(m: MatF, fraction: float) -> bool:
    """Deterministic pseudo-random membership test, independent of sharding."""
    if fraction <= 0:
        return False
    return zlib.crc32(bytes(m.entries)) < fraction * 2**32


def _partition_shard(spec: GroupSpec, first_rows, sample_fraction: float):
    classes = {}
    samples = []
    for m in enumerate_gl(spec, first_rows):
        key = similarity_key(m)
        entry = classes.get(key)
        if entry is None:
            classes[key] = [m, 1]
        else:
            entry[1] += 1
        if sampled(m, sample_fraction):
            samples.append((m, key))
    return classes, samples


def _shard_ranges(spec: GroupSpec, shards: int):
    """Split the first-row index space into contiguous ranges."""
    nvec = spec.q**spec.n
    shards = max(1, min(shards, nvec - 1))
    bounds = [1 + (nvec - 1) * k // shards for k in range(shards + 1)]
    return [range(bounds[k], bounds[k + 1]) for k in range(shards)]


def partition_with_samples(spec: GroupSpec, shards: int = 1, sample_fraction: float = 0.0):
    """Class partition plus a deterministic sample of (matrix, key) pairs."""
    spec.check_budget()
    ranges = _shard_ranges(spec, shards)
    if len(ranges) == 1:
        results = [_partition_shard(spec, ranges[0], sample_fraction)]
    else:
        workers = min(len(ranges), os.cpu_count() or 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                _partition_shard,
                [spec] * len(ranges),
                ranges,
                [sample_fraction] * len(ranges),
            ))
    merged = {}
    samples = []
    for classes, shard_samples in results:
        for key, (rep, size) in classes.items():
            if key in merged:
                merged[key][1] += size
            else:
                merged[key] = [rep, size]
        samples.extend(shard_samples)
    table = [ClassInfo(key, rep, size) for key, (rep, size) in merged.items()]
    return table, samples


def class_partition(spec: GroupSpec, shards: int = 1) -> list:
    """Similarity classes of GL_n(F_q) in order of first appearance.

    The representative of each class is its lexicographically first member.
    """
    return partition_with_samples(spec, shards)[0]
