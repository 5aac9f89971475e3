"""Brute-force orbit enumeration, independent of the Burnside pipeline.

Every structure tensor is mapped to its canonical form, the
lexicographically smallest Vec in its orbit, and distinct canonical forms
are counted.  Tensors are identified with their index in lexicographic
Vec order.

The action is linear in the tensor, so for each group element we push the
n^3 unit tensors through ``apply_action`` once and then map whole blocks of
tensors with table lookups in numpy.  No Kronecker product or eigenspace
computation is involved.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceeded
from .field import FieldCtx
from .group import GroupSpec, enumerate_gl, group_order
from .matrix import mat_inverse
from .tensor import StructureTensor, apply_action, get_predicate, tensor_from_index

DEFAULT_ORACLE_BUDGET = 2**24
DEFAULT_WORK_BUDGET = 2**30
CHUNK = 2**16


def _check_budget(ctx: FieldCtx, n: int, budget: int, work_budget: int):
    total = ctx.q ** n**3
    if total > budget:
        raise BudgetExceeded(
            f"q^(n^3) = {ctx.q}^{n**3} tensors exceeds the oracle budget {budget}"
        )
    work = total * group_order(GroupSpec(ctx, n))
    if work > work_budget:
        raise BudgetExceeded(f"oracle work {work} exceeds the work budget {work_budget}")
    return total


def action_images(ctx: FieldCtx, n: int, g) -> np.ndarray:
    """Row k holds the Vec of apply_action(unit tensor k, g)."""
    size = n**3
    g_inv = mat_inverse(g)
    out = np.zeros((size, size), dtype=np.int64)
    for k in range(size):
        unit = [0] * size
        unit[k] = 1
        out[k] = apply_action(StructureTensor(ctx, n, unit), g, g_inv).vec
    return out


def _decode(ctx: FieldCtx, size: int, indices: np.ndarray) -> np.ndarray:
    q = ctx.q
    coords = np.empty((len(indices), size), dtype=np.int64)
    rest = indices.copy()
    for k in range(size - 1, -1, -1):
        coords[:, k] = rest % q
        rest //= q
    return coords


def _encode(ctx: FieldCtx, coords: np.ndarray) -> np.ndarray:
    q = ctx.q
    idx = np.zeros(coords.shape[0], dtype=np.int64)
    for k in range(coords.shape[1]):
        idx = idx * q + coords[:, k]
    return idx


def canonical_forms(
    ctx: FieldCtx,
    n: int,
    shards: int = 1,
    budget: int = DEFAULT_ORACLE_BUDGET,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> np.ndarray:
    """canon[i] = smallest index in the orbit of tensor i.

    The tensor space is processed in independent contiguous blocks; the
    shard count only changes the block boundaries, never the result.
    """
    total = _check_budget(ctx, n, budget, work_budget)
    size = n**3
    add = np.array(ctx.add, dtype=np.int64)
    mul = np.array(ctx.mul, dtype=np.int64)
    images = [action_images(ctx, n, g) for g in enumerate_gl(GroupSpec(ctx, n))]

    block = max(1, min(CHUNK, -(-total // max(1, shards))))
    canon = np.empty(total, dtype=np.int64)
    for start in range(0, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        coords = _decode(ctx, size, idx)
        best = idx.copy()
        for img in images:
            acc = np.zeros_like(coords)
            for k in range(size):
                acc = add[acc, mul[coords[:, k:k + 1], img[k][None, :]]]
            np.minimum(best, _encode(ctx, acc), out=best)
        canon[start:start + len(idx)] = best
    return canon


def oracle_count_orbits(
    ctx: FieldCtx,
    n: int,
    predicate_name: str | None = None,
    shards: int = 1,
    budget: int = DEFAULT_ORACLE_BUDGET,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> int:
    """Number of orbits, optionally only among tensors passing a predicate."""
    pred = get_predicate(predicate_name) if predicate_name else None
    canon = canonical_forms(ctx, n, shards, budget, work_budget)
    if pred is None:
        return int(np.unique(canon).size)
    # every tensor is tested, so a non-invariant predicate cannot hide here
    passing = {
        c for i, c in enumerate(canon.tolist())
        if pred(tensor_from_index(ctx, n, i))
    }
    return len(passing)


def oracle_transversal(
    ctx: FieldCtx,
    n: int,
    shards: int = 1,
    budget: int = DEFAULT_ORACLE_BUDGET,
    work_budget: int = DEFAULT_WORK_BUDGET,
) -> list:
    """Canonical orbit representatives in lexicographic order."""
    canon = canonical_forms(ctx, n, shards, budget, work_budget)
    return [tensor_from_index(ctx, n, int(r)) for r in np.unique(canon)]


def orbit_partition(ctx: FieldCtx, n: int, **kwargs) -> dict:
    """canonical index -> list of member indices."""
    canon = canonical_forms(ctx, n, **kwargs)
    out: dict = {}
    for i, c in enumerate(canon.tolist()):
        out.setdefault(c, []).append(i)
    return out
