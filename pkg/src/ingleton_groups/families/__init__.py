"""Explicit Ingleton-violating families and their verifiers."""

from .formulas import (
    COLLAPSE_P2,
    expected_difference,
    expected_profile,
    gl_order,
    pgl2_ratio,
    pgln_index_g1_g12,
    pgl_order,
    pgln_expected_orders,
    pgln_predicted,
    pgln_ratio_formula,
    table_row,
    twotrans_expected,
    twotrans_ratio,
)
from .gl2 import gl2_context, gl2_instance, gl2_tuple, verify_structure_maps
from .pgl2 import (
    FlowerReport,
    Pgl2FamilyData,
    flower_check,
    g4_is_conjugate_of_g3,
    generates_whole_group,
    pgl2_family,
    pgl2_flower,
    pgl2_tuple,
    presentation_report,
    verify_presentation_relations,
)
from .pgln import pgln_points_tuple, pgln_subspace_tuple
from .twotrans import TwoTransitiveSetup, predicted_ratio, two_transitive_setup, two_transitive_tuple

__all__ = [name for name in dir() if not name.startswith("_")]
