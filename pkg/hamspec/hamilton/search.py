# hamspec/hamilton/search.py

"""
Exact Hamiltonicity decisions for a single graph.

- has_hamilton_path / has_hamilton_cycle: subset DP plus witness reconstruction
- circumference: longest cycle length (0 for forests)
- join_k1 / hamilton_path_via_join: the G ∨ K1 reduction

Every witness is checked edge by edge before it is returned.
"""

from __future__ import annotations

from typing import List

import numpy as np

from ..config import get_settings
from ..errors import GraphOrderError, WitnessError
from ..graphs.constructors import join, make_complete
from ..models.graph import Graph
from ..models.hamilton import HamWitness, WalkKind
from .kernels import fill_cycle_table, fill_path_table, longest_cycle


def _rows_array(G: Graph) -> np.ndarray:
    return np.array(G.rows, dtype=np.int64)


def _check_cap(G: Graph, cap: int, what: str) -> None:
    if G.n > cap:
        raise GraphOrderError(f"{what} is exact only up to n={cap}, got n={G.n}")


def _walk_back(G: Graph, dp: np.ndarray, full: int, end: int) -> List[int]:
    """Rebuild the vertex order ending at `end` from a filled table."""
    order = [end]
    mask, v = full, end
    while mask.bit_count() > 1:
        prev = mask ^ (1 << v)
        options = int(dp[prev]) & G.rows[v]
        if not options:
            raise WitnessError("dynamic-programming table is inconsistent")
        u = (options & -options).bit_length() - 1
        order.append(u)
        mask, v = prev, u
    order.reverse()
    return order


def verify_walk(G: Graph, order: List[int], closed: bool) -> None:
    if sorted(order) != list(range(G.n)):
        raise WitnessError(f"witness {order} is not a permutation of V(G)")
    pairs = list(zip(order, order[1:]))
    if closed:
        pairs.append((order[-1], order[0]))
    for u, v in pairs:
        if not G.has_edge(u, v):
            raise WitnessError(f"witness uses non-edge ({u}, {v})")


def has_hamilton_path(G: Graph) -> HamWitness:
    _check_cap(G, get_settings().ham_max_order, "Hamilton path search")
    if G.n == 1:
        return HamWitness(kind=WalkKind.PATH, found=True, order=[0])
    if not G.is_connected():
        return HamWitness(kind=WalkKind.PATH, found=False)

    dp = np.zeros(1 << G.n, dtype=np.int64)
    fill_path_table(_rows_array(G), G.n, dp)
    full = (1 << G.n) - 1
    ends = int(dp[full])
    if not ends:
        return HamWitness(kind=WalkKind.PATH, found=False)
    end = (ends & -ends).bit_length() - 1
    order = _walk_back(G, dp, full, end)
    verify_walk(G, order, closed=False)
    return HamWitness(kind=WalkKind.PATH, found=True, order=order)


def has_hamilton_cycle(G: Graph) -> HamWitness:
    _check_cap(G, get_settings().ham_max_order, "Hamilton cycle search")
    if G.n < 3 or not G.is_connected() or G.min_degree < 2:
        return HamWitness(kind=WalkKind.CYCLE, found=False)

    dp = np.zeros(1 << G.n, dtype=np.int64)
    fill_cycle_table(_rows_array(G), G.n, dp)
    full = (1 << G.n) - 1
    closing = int(dp[full]) & G.rows[0]
    if not closing:
        return HamWitness(kind=WalkKind.CYCLE, found=False)
    end = (closing & -closing).bit_length() - 1
    order = _walk_back(G, dp, full, end)
    if order[0] != 0:
        raise WitnessError("cycle witness does not start at vertex 0")
    verify_walk(G, order, closed=True)
    return HamWitness(kind=WalkKind.CYCLE, found=True, order=order)


def circumference(G: Graph) -> int:
    _check_cap(G, get_settings().circumference_max_order, "circumference search")
    dp = np.zeros(1 << G.n, dtype=np.int64)
    return int(longest_cycle(_rows_array(G), G.n, dp))


def join_k1(G: Graph) -> Graph:
    """G ∨ K1, the new vertex being n."""
    return join(G, make_complete(1))


def hamilton_path_via_join(G: Graph) -> bool:
    if G.n > 23:
        raise GraphOrderError(f"G ∨ K1 must stay within exact range (n <= 23), got n={G.n}")
    return has_hamilton_cycle(join_k1(G)).found
