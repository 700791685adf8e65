# hamspec/graphs/__init__.py

from .constructors import (
    disjoint_union,
    join,
    k_copies,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
)
from .families import (
    CYCLE_SET_FIXED,
    NAMED_FIXTURES,
    PATH_SET_FIXED,
    fiedler_nikiforov_exception,
    match_member,
    matches_family,
    members_of_order,
    named_fixture,
    ore_bondy_exceptions,
    realize,
    realize_graph,
)
from .graph6 import code_to_graph6, graph6_decode, graph6_encode, graph6_string
from .isomorphism import find_isomorphism, is_isomorphic, is_threshold, vertex_invariants
from .parsing import parse_family


def degree_sequence(G):
    """Sorted non-decreasing degree sequence of G."""
    return G.degree_sequence()


__all__ = [
    "make_complete",
    "make_empty",
    "make_complete_bipartite",
    "make_path",
    "make_cycle",
    "disjoint_union",
    "join",
    "k_copies",
    "realize",
    "realize_graph",
    "members_of_order",
    "matches_family",
    "match_member",
    "named_fixture",
    "NAMED_FIXTURES",
    "CYCLE_SET_FIXED",
    "PATH_SET_FIXED",
    "fiedler_nikiforov_exception",
    "ore_bondy_exceptions",
    "degree_sequence",
    "is_isomorphic",
    "find_isomorphism",
    "is_threshold",
    "vertex_invariants",
    "graph6_encode",
    "graph6_decode",
    "graph6_string",
    "code_to_graph6",
    "parse_family",
]
