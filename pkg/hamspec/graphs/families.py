# hamspec/graphs/families.py

"""
Realization of FamilySpec trees and the two exceptional sets.

- realize(): FamilySpec -> Graph (or list of Graphs for set tags)
- CYCLE_SET_FIXED / PATH_SET_FIXED: the fixed members of the two sets, in
  their printed order, with the parametric member first
- members_of_order(), matches_family(), match_member()
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Union

from ..errors import FamilyParameterError
from ..models.family import (
    E,
    FamilySpec,
    FamilyTag,
    G1,
    G2,
    K,
    Kab,
    copies,
    join,
    split,
    union,
)
from ..models.graph import Graph
from .constructors import (
    disjoint_union,
    join as join_graphs,
    k_copies,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
)
from .isomorphism import is_isomorphic, is_threshold


# ---------- exceptional sets ----------

# Fixed members of the Hamilton-cycle exceptional set; G2(n) is the parametric member.
CYCLE_SET_FIXED: List[FamilySpec] = [
    split(7, 3),                              # K3 ∨ 4K1
    join(K(2), union(Kab(1, 3), K(1))),       # K2 ∨ (K1,3 + K1)
    join(K(1), Kab(2, 4)),                    # K1 ∨ K2,4
    join(K(3), union(K(2), E(3))),            # K3 ∨ (K2 + 3K1)
    split(9, 4),                              # K4 ∨ 5K1
    join(K(3), union(Kab(1, 4), K(1))),       # K3 ∨ (K1,4 + K1)
    join(K(2), Kab(2, 5)),                    # K2 ∨ K2,5
    split(11, 5),                             # K5 ∨ 6K1
]

# Fixed members of the Hamilton-path exceptional set; G1(n) is the parametric member.
PATH_SET_FIXED: List[FamilySpec] = [
    join(K(1), union(Kab(1, 3), K(1))),       # K1 ∨ (K1,3 + K1)
    Kab(2, 4),                                # K2,4
    split(6, 2),                              # K2 ∨ 4K1
    join(K(2), union(E(3), K(2))),            # K2 ∨ (3K1 + K2)
    join(K(1), Kab(2, 5)),                    # K1 ∨ K2,5
    split(8, 3),                              # K3 ∨ 5K1
    join(K(2), union(Kab(1, 4), K(1))),       # K2 ∨ (K1,4 + K1)
    split(10, 4),                             # K4 ∨ 6K1
]


def members_of_order(which: FamilyTag, n: int) -> List[FamilySpec]:
    """Members of calG1 / calG2 whose order equals n, parametric member first."""
    if which is FamilyTag.CAL_G2:
        head = [G2(n)] if n >= 5 else []
        fixed = CYCLE_SET_FIXED
    elif which is FamilyTag.CAL_G1:
        head = [G1(n)] if n >= 4 else []
        fixed = PATH_SET_FIXED
    else:
        raise FamilyParameterError(f"{which} is not an exceptional set tag")
    return head + [spec for spec in fixed if spec.order() == n]


def fiedler_nikiforov_exception(n: int) -> FamilySpec:
    """K1 ∨ (K_{n-2} + K1)."""
    return join(K(1), union(K(n - 2), K(1)))


def ore_bondy_exceptions(n: int) -> List[FamilySpec]:
    specs = [fiedler_nikiforov_exception(n)]
    if n == 5:
        specs.append(split(5, 2))
    return specs


# ---------- named fixtures ----------

NAMED_FIXTURES: Dict[str, str] = {
    # K2 ∨ 4K1: order 6, no Hamilton path, above sqrt(3^2 + 2)
    "remark_k2_4k1": "join(K2,4K1)",
    # K4 ∨ 4K1 with x·y1, x·y2 deleted and y1·y2 added
    "xyjoin_k4_4k1": "xyjoin:4:4",
    # the same modification with five independent vertices
    "xyjoin_k4_5k1": "xyjoin:4:5",
    # K_{n-1} + K1 at n = 7
    "k6_plus_k1": "union(K6,K1)",
}


@lru_cache(maxsize=None)
def named_fixture(name: str) -> FamilySpec:
    from .parsing import parse_family

    if name not in NAMED_FIXTURES:
        raise FamilyParameterError(f"unknown named family: {name}")
    return parse_family(NAMED_FIXTURES[name])


# ---------- realization ----------

def _modified_join(x: int, y: int) -> Graph:
    # X occupies 0..x-1, Y occupies x..x+y-1; x0 = 0, y1 = x, y2 = x+1
    G = join_graphs(make_complete(x), make_empty(y))
    return G.remove_edge(0, x).remove_edge(0, x + 1).add_edge(x, x + 1)


def realize(spec: FamilySpec) -> Union[Graph, List[Graph]]:
    """
    Build the graph a FamilySpec names. Set tags return the list of members
    of that order.
    """
    tag, p = spec.tag, spec.params
    if tag is FamilyTag.COMPLETE:
        return make_complete(p[0])
    if tag is FamilyTag.EMPTY:
        return make_empty(p[0])
    if tag is FamilyTag.COMPLETE_BIPARTITE:
        return make_complete_bipartite(p[0], p[1])
    if tag is FamilyTag.G1:
        n = p[0]
        return join_graphs(make_complete(1), disjoint_union(make_complete(n - 3), make_empty(2)))
    if tag is FamilyTag.G2:
        n = p[0]
        return join_graphs(make_complete(2), disjoint_union(make_complete(n - 4), make_empty(2)))
    if tag is FamilyTag.SPLIT:
        n, k = p
        return join_graphs(make_complete(k), make_empty(n - k))
    if tag is FamilyTag.PATH:
        return make_path(p[0])
    if tag is FamilyTag.CYCLE:
        return make_cycle(p[0])
    if tag is FamilyTag.JOIN:
        return join_graphs(realize_graph(spec.children[0]), realize_graph(spec.children[1]))
    if tag is FamilyTag.UNION:
        return disjoint_union(realize_graph(spec.children[0]), realize_graph(spec.children[1]))
    if tag is FamilyTag.COPIES:
        return k_copies(p[0], realize_graph(spec.children[0]))
    if tag is FamilyTag.MODIFIED_JOIN:
        return _modified_join(p[0], p[1])
    if tag is FamilyTag.NAMED:
        return realize(named_fixture(spec.name))
    if tag in (FamilyTag.CAL_G1, FamilyTag.CAL_G2):
        return [realize_graph(member) for member in members_of_order(tag, p[0])]
    raise FamilyParameterError(f"cannot realize {tag}")


def realize_graph(spec: FamilySpec) -> Graph:
    """realize() for specs that name a single graph."""
    G = realize(spec)
    if isinstance(G, list):
        raise FamilyParameterError(f"{spec.label()} names a set of graphs, not one graph")
    return G


# ---------- membership ----------

def matches_family(G: Graph, spec: FamilySpec) -> bool:
    """
    True iff G is isomorphic to the graph spec names (any member, for set
    tags). Edge count and degree sequence are compared before any search.
    """
    if spec.is_set:
        return match_member(G, members_of_order(spec.tag, G.n)) is not None
    if spec.order() != G.n:
        return False
    H = realize_graph(spec)
    if H.m != G.m or H.degree_sequence() != G.degree_sequence():
        return False
    if is_threshold(H):
        return True
    return is_isomorphic(G, H)


def match_member(G: Graph, members: List[FamilySpec]) -> Optional[FamilySpec]:
    for spec in members:
        if matches_family(G, spec):
            return spec
    return None
