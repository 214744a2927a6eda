"""
schubsing: singular loci of Schubert varieties in SL(n)/B.

The package computes, for any permutation w, the irreducible components of
the singular locus of the Schubert variety X_w (polynomial time), tests
smoothness at any T-fixed point, and evaluates Kazhdan-Lusztig polynomials
at maximal singular points, with exponential brute-force oracles used to
validate the fast path at small n.
"""

from .perm import (
    Perm,
    apply_cycle,
    apply_transposition,
    as_perm,
    avoids_pattern,
    compose,
    flatten,
    format_one_line,
    identity,
    inverse,
    length,
    parse_one_line,
    pattern_occurrences,
    unflatten,
)
from .bruhat import (
    DiffTable,
    bruhat_leq,
    delta_positions,
    diff_table,
    extra_set,
    interval_below,
    phi_map,
    rank,
    reflection_set,
    region_signed_count,
    tilde_restrict,
)
from .oracle import (
    SmoothnessReport,
    ew_maximal,
    is_msp,
    is_msp_by_family,
    is_smooth_point,
    is_smooth_variety,
    maxsing_bruteforce,
)
from .maxsing_fast import (
    Component,
    FamilyParams,
    canonical_family,
    enumerate_components,
    maxsing,
    useful_pattern_count,
    verify_component,
)
from .kl import (
    KLCache,
    classify_msp,
    format_poly,
    kl_at_msp,
    kl_recursive,
    mu_coefficient,
)
from .diagram import diagram_ascii, diagram_svg

__version__ = "0.1.0"

__all__ = [
    "Perm",
    "apply_cycle",
    "apply_transposition",
    "as_perm",
    "avoids_pattern",
    "compose",
    "flatten",
    "format_one_line",
    "identity",
    "inverse",
    "length",
    "parse_one_line",
    "pattern_occurrences",
    "unflatten",
    "DiffTable",
    "bruhat_leq",
    "delta_positions",
    "diff_table",
    "extra_set",
    "interval_below",
    "phi_map",
    "rank",
    "reflection_set",
    "region_signed_count",
    "tilde_restrict",
    "SmoothnessReport",
    "ew_maximal",
    "is_msp",
    "is_msp_by_family",
    "is_smooth_point",
    "is_smooth_variety",
    "maxsing_bruteforce",
    "Component",
    "FamilyParams",
    "canonical_family",
    "enumerate_components",
    "maxsing",
    "useful_pattern_count",
    "verify_component",
    "KLCache",
    "classify_msp",
    "format_poly",
    "kl_at_msp",
    "kl_recursive",
    "mu_coefficient",
    "diagram_ascii",
    "diagram_svg",
]
