# hamspec/graphs/constructors.py

"""
Constructors for the basic graphs and the two composition operations
(disjoint union, join). Every result is a fresh immutable Graph.
"""

from __future__ import annotations

from functools import reduce

from ..errors import GraphOrderError
from ..models.graph import MAX_ORDER, Graph


def _check_order(n: int, what: str) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise GraphOrderError(f"{what}: order must be within 1..{MAX_ORDER}, got {n}")


def make_complete(n: int) -> Graph:
    _check_order(n, "complete graph")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def make_empty(n: int) -> Graph:
    _check_order(n, "empty graph")
    return Graph(n, (0,) * n)


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphOrderError(f"complete bipartite graph needs a, b >= 1, got ({a}, {b})")
    _check_order(a + b, "complete bipartite graph")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, tuple([right] * a + [left] * b))


def make_path(n: int) -> Graph:
    _check_order(n, "path")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphOrderError(f"cycle needs n >= 3, got {n}")
    _check_order(n, "cycle")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    n = G.n + H.n
    _check_order(n, "disjoint union")
    return Graph(n, G.rows + tuple(row << G.n for row in H.rows))


def join(G: Graph, H: Graph) -> Graph:
    n = G.n + H.n
    _check_order(n, "join")
    g_mask = (1 << G.n) - 1
    h_mask = ((1 << H.n) - 1) << G.n
    rows = tuple(row | h_mask for row in G.rows) + tuple((row << G.n) | g_mask for row in H.rows)
    return Graph(n, rows)


def k_copies(k: int, G: Graph) -> Graph:
    if k < 1:
        raise GraphOrderError(f"k_copies needs k >= 1, got {k}")
    _check_order(k * G.n, "k_copies")
    return reduce(disjoint_union, [G] * (k - 1), G)
