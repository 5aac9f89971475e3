"""Exact counts of isomorphism classes of finite-dimensional algebras over F_q."""

from .burnside import CountReport, FixClassRecord, count_algebras, count_filtered, fix_dim, lower_bound
from .field import FieldCtx, make_field
from .group import GroupSpec, class_partition, enumerate_gl, group_order, similarity_key
from .matrix import MatF
from .oracle import oracle_count_orbits, oracle_transversal
from .tensor import StructureTensor, alg_mul, apply_action, iso_check, predicate

__all__ = [
    "CountReport", "FixClassRecord", "FieldCtx", "GroupSpec", "MatF", "StructureTensor",
    "alg_mul", "apply_action", "class_partition", "count_algebras", "count_filtered",
    "enumerate_gl", "fix_dim", "group_order", "iso_check", "lower_bound", "make_field",
    "oracle_count_orbits", "oracle_transversal", "predicate", "similarity_key",
]
