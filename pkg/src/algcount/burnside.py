"""Burnside counting of isomorphism classes of n-dimensional algebras.

The number of orbits of GL_n(F_q) on structure tensors is the average
number of fixed tensors.  The tensors fixed by M form the eigenvalue-1
eigenspace of ``M^T (x) M^T (x) M^{-1}``, so each group element contributes
``q^{nullity(K - I)}``.  The sum is taken class by class, since the
nullity only depends on the similarity class of M.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BudgetExceeded, InternalNonDivisible, InvariantViolation
from .group import GroupSpec, format_key, group_order, partition_with_samples
from .matrix import MatF, kron, mat_inverse, mat_nullity, mat_sub, mat_transpose, null_space_basis
from .tensor import DEFAULT_PAIR_BUDGET, StructureTensor, get_predicate

DEFAULT_FILTER_BUDGET = 2**28


@dataclass
class FixClassRecord:
    key: tuple
    representative: MatF
    class_size: int
    fix_dim: int
    # tensors fixed by the representative that pass the filter; q^fix_dim unfiltered
    fixed_count: int

    @property
    def contribution(self) -> int:
        return self.class_size * self.fixed_count


@dataclass
class CountReport:
    p: int
    e: int
    q: int
    n: int
    group_order: int
    burnside_sum: int
    orbit_count: int
    lower_bound_num: int
    lower_bound_den: int
    filter: str | None = None
    class_table: list = field(default_factory=list)

    @property
    def lower_bound(self) -> Fraction:
        return Fraction(self.lower_bound_num, self.lower_bound_den)

    def histogram(self) -> dict:
        """fix_dim -> number of group elements with that fix_dim."""
        hist = Counter()
        for rec in self.class_table:
            hist[rec.fix_dim] += rec.class_size
        return dict(sorted(hist.items()))


def fixpoint_operator(m: MatF) -> MatF:
    """M^T (x) M^T (x) M^{-1}, acting on stacked vectorisations."""
    mt = mat_transpose(m)
    return kron(kron(mt, mt), mat_inverse(m))


def fix_dim(m: MatF) -> int:
    """Dimension of the space of structure tensors fixed by M."""
    k = fixpoint_operator(m)
    return mat_nullity(mat_sub(k, MatF.identity(m.ctx, k.rows)))


def fixed_subspace(m: MatF) -> list:
    """Basis (as Vec coordinate tuples) of the tensors fixed by M."""
    k = fixpoint_operator(m)
    return null_space_basis(mat_sub(k, MatF.identity(m.ctx, k.rows)))


def lower_bound(spec: GroupSpec) -> tuple:
    """(q^{n^3}, |GL_n|): the identity's share of the Burnside sum."""
    return spec.q ** spec.n**3, group_order(spec)


def _check_samples(samples, dims: dict):
    for m, key in samples:
        got = fix_dim(m)
        if got != dims[key]:
            raise InvariantViolation(
                f"memoized fix_dim {dims[key]} disagrees with direct value {got} for {m!r}"
            )


def _finish(spec: GroupSpec, records: list, filter_name) -> CountReport:
    order = group_order(spec)
    total = sum(rec.contribution for rec in records)
    count, rem = divmod(total, order)
    if rem:
        raise InternalNonDivisible(
            f"Burnside sum {total} is not divisible by |GL_{spec.n}(F_{spec.q})| = {order}"
        )
    num, den = lower_bound(spec)
    ctx = spec.ctx
    return CountReport(
        p=ctx.p, e=ctx.e, q=ctx.q, n=spec.n,
        group_order=order, burnside_sum=total, orbit_count=count,
        lower_bound_num=num, lower_bound_den=den,
        filter=filter_name, class_table=records,
    )


def count_algebras(spec: GroupSpec, shards: int = 1, validate_fraction: float = 0.0) -> CountReport:
    """Number of isomorphism classes of n-dimensional algebras over F_q.

    ``validate_fraction`` recomputes fix_dim directly for a deterministic
    pseudo-random sample of group elements and checks it against the value
    memoized for their class.
    """
    classes, samples = partition_with_samples(spec, shards, validate_fraction)
    q = spec.q
    records = []
    dims = {}
    for c in classes:
        d = fix_dim(c.representative)
        dims[c.key] = d
        records.append(FixClassRecord(c.key, c.representative, c.class_size, d, q**d))
    _check_samples(samples, dims)
    return _finish(spec, records, None)


def iter_subspace(ctx, basis: list, length: int):
    """All linear combinations of ``basis``, first basis vector slowest."""
    add, mul = ctx.add, ctx.mul
    scalars = range(ctx.q)

    def rec(k, partial):
        if k == len(basis):
            yield partial
            return
        b = basis[k]
        for c in scalars:
            if c == 0:
                yield from rec(k + 1, partial)
            else:
                mc = mul[c]
                yield from rec(k + 1, tuple(add[x][mc[y]] for x, y in zip(partial, b)))

    yield from rec(0, (0,) * length)


def count_filtered(
    spec: GroupSpec,
    predicate_name: str,
    shards: int = 1,
    budget: int = DEFAULT_FILTER_BUDGET,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> CountReport:
    """Number of isomorphism classes of algebras satisfying a predicate.

    The predicate must be invariant under isomorphism; then the tensors
    satisfying it form a GL_n-stable set and Burnside applies to it.  Each
    class representative's fixed subspace is enumerated in full.
    """
    pred = get_predicate(predicate_name)
    classes, _ = partition_with_samples(spec, shards)
    ctx, n, q = spec.ctx, spec.n, spec.q
    records = []
    for c in classes:
        basis = fixed_subspace(c.representative)
        d = len(basis)
        if q**d > budget:
            raise BudgetExceeded(
                f"class {format_key(ctx, c.key)} fixes q^{d} = {q**d} tensors, "
                f"over the filter budget {budget}"
            )
        hits = sum(
            1 for v in iter_subspace(ctx, basis, n**3)
            if pred(StructureTensor(ctx, n, v), budget=pair_budget)
        )
        records.append(FixClassRecord(c.key, c.representative, c.class_size, d, hits))
    return _finish(spec, records, predicate_name)
