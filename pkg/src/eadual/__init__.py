"""Exact state/effect duality for finite effect algebras and polytopes."""

from .convexity import AffineMap, Distribution, check_em_laws, d_flatten, d_pushforward, d_unit, em_eval
from .duality import (
    counit, dual_bns_to_ous, dual_ous_to_bns, eff_pm, extend_base_map,
    extend_interval_morphism, restrict_rho, stat_pm, triangle_identities, unit_map,
)
from .effect_algebras import (
    FiniteEffectAlgebra, boolean_ea, chain_ea, is_morphism, mo_ea, product_ea,
    state_polytope, validate,
)
from .ordered_spaces import (
    PolyhedralBNS, PolyhedralOUS, PredicateOUS2, Variant, base_of, classify_archimedean,
    norm, order_leq, unit_ball_of, unit_interval,
)
from .polyhedra import QCone, QPolytope, contains, dd_convert, dual_cone, gauge, solve_linear

__version__ = "0.1.0"
