# hamspec/spectral/__init__.py

from .bounds import hong_bound, hsk_f, min_edges_for_radius, min_edges_for_radius_hong, nikiforov_bound
from .decide import ThresholdDecision, compare_to_threshold, estimate_with_retry, integer_or_none
from .formulas import (
    appendix_bracket_g2,
    appendix_bracket_k1join,
    bipartite_closed_form,
    bracket_signs,
    cubic_largest_root,
    g1_cubic,
    g2_cubic,
    increasing_above_base,
    k1_join_cubic,
    rho_split_closed_form,
    sign_changes_on_grid,
)
from .power import (
    BatchBrackets,
    equitable_partition,
    is_adjacency_eigenvalue,
    radius_equals_integer,
    quotient_radius,
    spectral_radius,
    spectral_radius_batch,
)

__all__ = [
    "spectral_radius",
    "spectral_radius_batch",
    "BatchBrackets",
    "quotient_radius",
    "equitable_partition",
    "is_adjacency_eigenvalue",
    "radius_equals_integer",
    "rho_split_closed_form",
    "bipartite_closed_form",
    "cubic_largest_root",
    "g1_cubic",
    "g2_cubic",
    "k1_join_cubic",
    "appendix_bracket_g2",
    "appendix_bracket_k1join",
    "bracket_signs",
    "increasing_above_base",
    "sign_changes_on_grid",
    "hong_bound",
    "nikiforov_bound",
    "hsk_f",
    "min_edges_for_radius",
    "min_edges_for_radius_hong",
    "compare_to_threshold",
    "estimate_with_retry",
    "ThresholdDecision",
    "integer_or_none",
]
