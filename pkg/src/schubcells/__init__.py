"""Schubert cells through vanishing patterns of generalized Plucker coordinates.

The package provides Weyl groups with Bruhat order and parabolic quotients,
Plucker weights and economical orderings, exact rational flags, vanishing
patterns and acceptability, short cell descriptions, oracle-driven cell
recognition with decision trees, poset and Weyl-group bases, and the
quantitative lower-bound constructions, plus a CLI wiring it all together.
"""

from .base import (
    BaseElement,
    FinitePoset,
    base_weights,
    bigrassmannian_typeA,
    bruhat_poset,
    embedding_minimality_check,
    generic_recognize_from_base,
    minimality_check,
    poset_base,
    supremum,
    weyl_base,
)
from .bounds import (
    ChainReport,
    CodeFamily,
    FeedbackFreeResult,
    WitnessFamily,
    chain_corollary_check,
    code_bound_check,
    construct_witness_family,
    defining_set_lower_bound,
    feedback_free_min_set,
    minimum_defining_hitting_set,
    variety_equation_count,
)
from .cartan import CartanDatum, cartan_datum, parse_group_spec, weyl_order
from .cells import (
    CellDescription,
    VarietyDescription,
    cell_description_economical,
    cell_description_general,
    cell_description_typeA,
    cell_description_typeD,
    variety_equations,
    verify_description,
)
from .errors import UnacceptableInputError, UnsupportedGroupError
from .flags import (
    Flag,
    coordinate_flag,
    load_flag,
    plucker_coordinate,
    random_cell_point,
    type_a_group,
    vanishing_pattern,
)
from .patterns import (
    AcceptabilityReport,
    PatternPoset,
    RealizableSet,
    VanishingPattern,
    check_acceptable,
    generic_pattern,
    pattern_poset,
    random_acceptable,
    realizable_full_patterns,
    realizable_restricted_patterns,
)
from .plucker import (
    PluckerWeight,
    WeightOrdering,
    is_economical_index,
    is_economical_ordering,
    linear_order_check,
    mu,
    orbit,
    orbit_bruhat_leq,
    reflection_weight_map,
    roots_R,
    standard_ordering,
    subset_of,
    weight_from_subset,
    weight_of,
)
from .recognition import (
    CountingOracle,
    DecisionTree,
    FlagOracle,
    PatternOracle,
    QueryLog,
    build_decision_tree,
    recognize_general,
    recognize_typeA,
    worst_case_queries,
)
from .weyl import Root, WeylElement, WeylGroup, build_group, weyl_group

__all__ = [
    "AcceptabilityReport",
    "BaseElement",
    "CartanDatum",
    "CellDescription",
    "ChainReport",
    "CodeFamily",
    "CountingOracle",
    "DecisionTree",
    "FeedbackFreeResult",
    "FinitePoset",
    "Flag",
    "FlagOracle",
    "PatternOracle",
    "PatternPoset",
    "PluckerWeight",
    "QueryLog",
    "RealizableSet",
    "Root",
    "UnacceptableInputError",
    "UnsupportedGroupError",
    "VanishingPattern",
    "VarietyDescription",
    "WeightOrdering",
    "WeylElement",
    "WeylGroup",
    "WitnessFamily",
    "base_weights",
    "bigrassmannian_typeA",
    "bruhat_poset",
    "build_decision_tree",
    "build_group",
    "cartan_datum",
    "cell_description_economical",
    "cell_description_general",
    "cell_description_typeA",
    "cell_description_typeD",
    "chain_corollary_check",
    "check_acceptable",
    "code_bound_check",
    "construct_witness_family",
    "coordinate_flag",
    "defining_set_lower_bound",
    "embedding_minimality_check",
    "feedback_free_min_set",
    "generic_pattern",
    "generic_recognize_from_base",
    "is_economical_index",
    "is_economical_ordering",
    "linear_order_check",
    "load_flag",
    "minimality_check",
    "minimum_defining_hitting_set",
    "mu",
    "orbit",
    "orbit_bruhat_leq",
    "parse_group_spec",
    "pattern_poset",
    "plucker_coordinate",
    "poset_base",
    "random_acceptable",
    "random_cell_point",
    "realizable_full_patterns",
    "realizable_restricted_patterns",
    "recognize_general",
    "recognize_typeA",
    "reflection_weight_map",
    "roots_R",
    "standard_ordering",
    "subset_of",
    "supremum",
    "type_a_group",
    "vanishing_pattern",
    "variety_equation_count",
    "variety_equations",
    "verify_description",
    "weight_from_subset",
    "weight_of",
    "weyl_base",
    "weyl_group",
    "weyl_order",
    "worst_case_queries",
]
