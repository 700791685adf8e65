# hamspec/hamilton/__init__.py

from .conditions import (
    OreBondyOutcome,
    chvatal_check,
    chvatal_guaranteed_mask,
    chvatal_path_mask,
    erdos_gallai_guarantee,
    is_graphic,
    lemma_edge_threshold_cycle,
    lemma_edge_threshold_path,
    ore_bondy_check,
)
from .kernels import circumference_many, hamiltonian_many, traceable_many
from .search import (
    circumference,
    has_hamilton_cycle,
    has_hamilton_path,
    hamilton_path_via_join,
    join_k1,
    verify_walk,
)

__all__ = [
    "has_hamilton_path",
    "has_hamilton_cycle",
    "circumference",
    "join_k1",
    "hamilton_path_via_join",
    "verify_walk",
    "traceable_many",
    "hamiltonian_many",
    "circumference_many",
    "chvatal_check",
    "chvatal_guaranteed_mask",
    "chvatal_path_mask",
    "ore_bondy_check",
    "OreBondyOutcome",
    "lemma_edge_threshold_cycle",
    "lemma_edge_threshold_path",
    "erdos_gallai_guarantee",
    "is_graphic",
]
