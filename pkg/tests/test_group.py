import itertools
import random

import pytest

from algcount.errors import BudgetExceeded
from algcount.field import make_field
from algcount.group import (
    GroupSpec,
    characteristic_matrix,
    class_partition,
    enumerate_gl,
    format_key,
    group_order,
    similarity_key,
)
from algcount.matrix import MatF, is_invertible, mat_det, mat_inverse, mat_mul
from algcount.poly import p_add, p_divmod, p_mul, p_sub

from conftest import mat


def brute_gl(ctx, n):
    """Filter all q^(n^2) matrices by invertibility, in lexicographic order."""
    for entries in itertools.product(range(ctx.q), repeat=n * n):
        m = MatF(ctx, n, n, entries)
        if is_invertible(m):
            yield m


def brute_charpoly(m):
    """det(xI - M) by the Leibniz expansion over F_q[x]."""
    ctx, n = m.ctx, m.rows
    a = characteristic_matrix(m)
    total = ()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (1,)
        for i in range(n):
            term = p_mul(ctx, term, a[i][perm[i]])
        total = p_sub(ctx, total, term) if inversions % 2 else p_add(ctx, total, term)
    return total


def test_group_order_examples(f2, f3):
    assert group_order(GroupSpec(f2, 2)) == 6
    assert group_order(GroupSpec(f2, 1)) == 1
    assert group_order(GroupSpec(f3, 2)) == 48


def test_enumerate_small(f2):
    assert list(enumerate_gl(GroupSpec(f2, 1))) == [mat(f2, [[1]])]
    listed = [
        [[1, 0], [0, 1]], [[0, 1], [1, 0]], [[1, 0], [1, 1]],
        [[1, 1], [0, 1]], [[0, 1], [1, 1]], [[1, 1], [1, 0]],
    ]
    assert set(enumerate_gl(GroupSpec(f2, 2))) == {mat(f2, r) for r in listed}


def test_enumerate_f3(f3):
    els = list(enumerate_gl(GroupSpec(f3, 2)))
    assert len(els) == 48 == len(set(els))
    assert all(mat_det(m) != 0 for m in els)


@pytest.mark.parametrize("p,e,n", [(2, 1, 1), (2, 1, 2), (3, 1, 2), (2, 2, 2), (2, 1, 3), (5, 1, 2)])
def test_span_generator_matches_filter(p, e, n):
    ctx = make_field(p, e)
    spec = GroupSpec(ctx, n)
    fast = list(enumerate_gl(spec))
    assert fast == list(brute_gl(ctx, n))  # same set, same order
    assert len(fast) == group_order(spec)


def test_budget(f2, f3):
    with pytest.raises(BudgetExceeded):
        list(enumerate_gl(GroupSpec(f2, 3, budget=2**8)))
    with pytest.raises(BudgetExceeded):
        class_partition(GroupSpec(f3, 2, budget=80))
    assert len(list(enumerate_gl(GroupSpec(f2, 3, budget=2**9)))) == 168


def test_similarity_key_examples(f2):
    assert format_key(f2, similarity_key(MatF.identity(f2, 2))) == ["x+1", "x+1"]
    assert format_key(f2, similarity_key(mat(f2, [[1, 1], [0, 1]]))) == ["x^2+1"]
    assert format_key(f2, similarity_key(mat(f2, [[0, 1], [1, 1]]))) == ["x^2+x+1"]


def _conjugacy_classes(ctx, n):
    """Brute-force conjugation orbits of GL_n(F_q)."""
    group = list(brute_gl(ctx, n))
    inverses = [mat_inverse(g) for g in group]
    seen = {}
    classes = []
    for m in group:
        if m in seen:
            continue
        orbit = {mat_mul(mat_mul(g, m), gi) for g, gi in zip(group, inverses)}
        for x in orbit:
            seen[x] = len(classes)
        classes.append(orbit)
    return classes


@pytest.mark.parametrize("p,e,n", [(2, 1, 2), (3, 1, 2), (2, 2, 2), (2, 1, 3)])
def test_key_equality_iff_similar(p, e, n):
    ctx = make_field(p, e)
    classes = _conjugacy_classes(ctx, n)
    keys = [{similarity_key(m) for m in orbit} for orbit in classes]
    assert all(len(k) == 1 for k in keys)
    assert len({next(iter(k)) for k in keys}) == len(classes)


@pytest.mark.parametrize("p,e,n", [(2, 1, 3), (3, 1, 3), (2, 2, 2), (2, 1, 4)])
def test_key_invariants(p, e, n):
    ctx = make_field(p, e)
    rng = random.Random(p * 100 + n)
    group = list(enumerate_gl(GroupSpec(ctx, n)))
    for m in rng.sample(group, min(40, len(group))):
        key = similarity_key(m)
        g = rng.choice(group)
        assert similarity_key(mat_mul(mat_mul(g, m), mat_inverse(g))) == key
        prod = (1,)
        for f in key:
            assert f[-1] == 1 and len(f) > 1
            prod = p_mul(ctx, prod, f)
        assert prod == brute_charpoly(m)
        for f, g_ in zip(key, key[1:]):
            assert p_divmod(ctx, g_, f)[1] == ()


def test_class_partition_examples(f2, f3):
    classes = class_partition(GroupSpec(f2, 2))
    assert sorted(c.class_size for c in classes) == [1, 2, 3]
    assert [c.class_size for c in class_partition(GroupSpec(f2, 1))] == [1]
    classes = class_partition(GroupSpec(f3, 2))
    assert sum(c.class_size for c in classes) == 48
    # valid invariant-factor sequences for n = 2 over F_3: [f] with deg f = 2,
    # f(0) != 0 (q^2 - q of them) or [x-a, x-a] with a != 0 (q - 1)
    assert len(classes) == (9 - 3) + 2


@pytest.mark.parametrize("p,e,n", [(2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 2)])
def test_partition_properties(p, e, n):
    ctx = make_field(p, e)
    spec = GroupSpec(ctx, n)
    order = group_order(spec)
    classes = class_partition(spec)
    assert sum(c.class_size for c in classes) == order
    assert all(order % c.class_size == 0 for c in classes)
    group = list(enumerate_gl(spec))
    first = {}
    for m in group:
        first.setdefault(similarity_key(m), m)
    assert [(c.key, c.representative) for c in classes] == list(first.items())


def test_partition_independent_of_shards(f2):
    spec = GroupSpec(f2, 3)
    one = class_partition(spec, shards=1)
    assert class_partition(spec, shards=3) == one
    assert class_partition(spec, shards=8) == one
