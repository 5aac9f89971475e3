import random

import numpy as np
import pytest

from algcount.burnside import count_algebras
from algcount.errors import BudgetExceeded
from algcount.field import make_field
from algcount.group import GroupSpec, enumerate_gl, group_order
from algcount.matrix import mat_inverse
from algcount.oracle import (
    action_images,
    canonical_forms,
    oracle_count_orbits,
    oracle_transversal,
    orbit_partition,
)
from algcount.tensor import PREDICATES, StructureTensor, apply_action, iso_check, predicate, tensor_from_index, tensor_index


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_one_dimensional(p, e):
    assert oracle_count_orbits(make_field(p, e), 1) == 2


def test_examples(f2, f3):
    assert oracle_count_orbits(f2, 2) == 52
    assert oracle_count_orbits(f3, 2) == count_algebras(GroupSpec(f3, 2)).orbit_count == 162


def test_linear_images_match_action(f3):
    rng = random.Random(0)
    group = list(enumerate_gl(GroupSpec(f3, 2)))
    add, mul = f3.add, f3.mul
    for g in rng.sample(group, 5):
        img = action_images(f3, 2, g)
        for _ in range(20):
            t = StructureTensor(f3, 2, [rng.randrange(3) for _ in range(8)])
            out = [0] * 8
            for k, c in enumerate(t.vec):
                for j in range(8):
                    out[j] = add[out[j]][mul[c][int(img[k, j])]]
            assert tuple(out) == apply_action(t, g).vec


def test_canonical_form_is_orbit_minimum(f2):
    canon = canonical_forms(f2, 2)
    group = list(enumerate_gl(GroupSpec(f2, 2)))
    for i in range(256):
        t = tensor_from_index(f2, 2, i)
        assert canon[i] == min(tensor_index(apply_action(t, g)) for g in group)


def test_orbit_sizes_divide_group_order(f2):
    order = group_order(GroupSpec(f2, 2))
    parts = orbit_partition(f2, 2)
    assert len(parts) == 52
    assert sum(len(v) for v in parts.values()) == 256
    assert all(order % len(v) == 0 for v in parts.values())


def test_orbits_are_isomorphism_classes(f2):
    group = list(enumerate_gl(GroupSpec(f2, 2)))
    canon = canonical_forms(f2, 2).tolist()
    tensors = [tensor_from_index(f2, 2, i) for i in range(256)]
    reps = {c: tensors[c] for c in set(canon)}
    for i, t in enumerate(tensors):
        for c, r in reps.items():
            linked = any(iso_check(r, t, g) for g in group)
            assert linked == (canon[i] == c)


def test_predicates_constant_on_orbits(f2):
    for members in orbit_partition(f2, 2).values():
        for name in PREDICATES:
            values = {predicate(name, tensor_from_index(f2, 2, i)) for i in members}
            assert len(values) == 1


def test_transversal(f2):
    reps = oracle_transversal(f2, 2)
    assert len(reps) == 52
    assert reps[0] == StructureTensor.zero(f2, 2)
    idx = [tensor_index(t) for t in reps]
    assert idx == sorted(idx)
    assert len(oracle_transversal(f2, 1)) == 2


def test_filtered_counts(f2):
    expected = {"commutative": 16, "associative": 8, "unital": 3,
                "anticommutative": 16, "zero-divisor-free": 5}
    for name, value in expected.items():
        assert oracle_count_orbits(f2, 2, name) == value
    assert oracle_count_orbits(f2, 2, "always-true") == 52


def test_sharding_does_not_change_result(f3):
    base = canonical_forms(f3, 2)
    for shards in (2, 7, 100):
        assert np.array_equal(canonical_forms(f3, 2, shards=shards), base)


def test_budgets(f2):
    with pytest.raises(BudgetExceeded):
        oracle_count_orbits(f2, 3)  # 2^27 tensors
    with pytest.raises(BudgetExceeded):
        oracle_count_orbits(f2, 2, budget=255)
    with pytest.raises(BudgetExceeded):
        oracle_count_orbits(f2, 2, work_budget=256 * 6 - 1)
