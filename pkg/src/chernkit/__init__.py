"""Symbolic intersection theory: Chern and Segre classes, projective bundles,
expected degrees of discriminant loci, and rank-2 bundles on surfaces."""

from .bundle_calculus import (
    BundleClass,
    CharacterClass,
    character_to_chern,
    chern_character,
    difference_class,
    direct_sum,
    dual,
    jet1_line,
    segre_total,
    sym_power,
    tensor,
    trivial_bundle,
    twist_by_line,
)
from .catalog import cotangent, line_bundle, multi_projective, projective_space, tangent
from .discriminant import (
    classify,
    closed_form_degree,
    expected_degree,
    jet_route_degree,
    ramification_profile,
)
from .graded_ring import (
    Generator,
    GradedClass,
    VarietyModel,
    class_mul,
    component,
    integrate,
    invert_unit,
    make_variety,
)
from .proj_bundle import ProjBundle, make_proj_bundle, relative_canonical_class, relative_cotangent

__version__ = "0.1.0"
