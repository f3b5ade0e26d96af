"""Exact computations with Schur rings over small finite groups."""

from .groups import (
    Group,
    GroupError,
    Subgroup,
    build_alternating,
    build_cyclic,
    build_dihedral,
    build_extraspecial,
    build_frobenius,
    build_psl27,
    build_quaternion,
    build_symmetric,
    conjugacy_classes,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
)
from .sring import SRing, class_algebra, enumerate_central_srings, from_partition, is_primitive, trivial_sring

__version__ = "0.1.0"
