# hamspec/graphs/isomorphism.py

"""
Isomorphism testing for small graphs.

Backtracking over vertex bijections, restricted to vertices with equal
(degree, sorted neighbour degrees) invariants. Threshold graphs are
determined by their degree sequence, so those are settled without search
and are exempt from the order cap.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from ..config import get_settings
from ..errors import GraphOrderError
from ..models.graph import Graph

Invariant = Tuple[int, Tuple[int, ...]]


def vertex_invariants(G: Graph) -> List[Invariant]:
    deg = G.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in G.neighbors(v)))) for v in range(G.n)]


def is_threshold(G: Graph) -> bool:
    """True iff G peels to nothing by removing isolated or dominating vertices."""
    alive = (1 << G.n) - 1
    while alive:
        size = alive.bit_count()
        peeled = False
        bits = alive
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            bits ^= low
            d = (G.rows[v] & alive).bit_count()
            if d == 0 or d == size - 1:
                alive ^= low
                peeled = True
                break
        if not peeled:
            return False
    return True


def find_isomorphism(G: Graph, H: Graph) -> Optional[List[int]]:
    """
    Return mapping[v] = image of G-vertex v in H, or None if G and H are
    not isomorphic.
    """
    if G.n != H.n or G.m != H.m:
        return None
    if sorted(G.degrees()) != sorted(H.degrees()):
        return None
    inv_g = vertex_invariants(G)
    inv_h = vertex_invariants(H)
    if sorted(inv_g) != sorted(inv_h):
        return None

    cap = get_settings().iso_max_order
    if G.n > cap and not is_threshold(G):
        raise GraphOrderError(
            f"isomorphism search is limited to n <= {cap} (got n={G.n})"
        )

    n = G.n
    candidates = [[h for h in range(n) if inv_h[h] == inv_g[v]] for v in range(n)]

    # Place vertices with the most already-placed neighbours first, rarest class on ties.
    order: List[int] = []
    placed = 0
    for _ in range(n):
        best = max(
            (v for v in range(n) if not (placed >> v) & 1),
            key=lambda v: ((G.rows[v] & placed).bit_count(), -len(candidates[v]), -v),
        )
        order.append(best)
        placed |= 1 << best

    mapping = [-1] * n

    def consistent(v: int, h: int, depth: int) -> bool:
        for u in order[:depth]:
            if G.has_edge(v, u) != H.has_edge(h, mapping[u]):
                return False
        return True

    def extend(depth: int, used: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for h in candidates[v]:
            if (used >> h) & 1 or not consistent(v, h, depth):
                continue
            mapping[v] = h
            if extend(depth + 1, used | (1 << h)):
                return True
        mapping[v] = -1
        return False

    return list(mapping) if extend(0, 0) else None


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None
