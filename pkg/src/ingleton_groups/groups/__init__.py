"""Finite groups: permutations, matrices and projective matrices over F_q."""

from .actions import (
    ProjectivePoint,
    Subspace,
    act,
    domain,
    orbit,
    point_stabilizer,
    pointwise_stabilizer,
    projective_points,
    setwise_stabilizer,
    subspace_stabilizer,
)
from .core import (
    Group,
    ProductGroup,
    Subgroup,
    alternating_group,
    center,
    closure,
    conjugate,
    cyclic_group,
    dihedral_group,
    direct_product,
    element_order,
    general_linear_group,
    intersect,
    intersect_all,
    is_normal,
    normalizer,
    permutation_group,
    product_subgroup,
    projective_linear_group,
    set_product,
    set_product_commutes,
    symmetric_group,
)
from .descriptors import format_generators, parse_generators, parse_group
from .lattice import SubgroupLattice, enumerate_subgroups, subgroup_lattice
from .quotient import NaturalMap, preimage_subgroup, projective_map, quotient

__all__ = [name for name in dir() if not name.startswith("_")]
