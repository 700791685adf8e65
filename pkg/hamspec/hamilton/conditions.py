# hamspec/hamilton/conditions.py

"""
Sufficient conditions for Hamilton cycles and paths.

- chvatal_check(): degree-sequence condition, smallest violating k
- chvatal_guaranteed_mask(): the same test over a stack of degree rows
- ore_bondy_check(): edge threshold C(n-1, 2) + 1 and its two exceptions
- lemma_edge_threshold_cycle / _path(): C(n-2, 2) + 4 with delta >= 2, and
  C(n-2, 2) + 2 with delta >= 1, each with its nine-member exceptional set
- erdos_gallai_guarantee(): cycle length forced by the edge count
- is_graphic(): Erdős–Gallai realizability
"""

from __future__ import annotations

from enum import Enum
from math import comb

import numpy as np

from ..errors import GraphOrderError
from ..graphs.families import match_member, members_of_order, ore_bondy_exceptions
from ..models.family import FamilyTag
from ..models.graph import DegreeSequence, Graph
from ..models.hamilton import ChvatalOutcome, ChvatalVerdict, ConditionOutcome, ThresholdVerdict


def chvatal_check(d: DegreeSequence) -> ChvatalVerdict:
    """
    Guaranteed iff no k < n/2 has d_k <= k and d_{n-k} <= n-k-1 (1-based).
    """
    n = d.n
    if n < 3:
        raise GraphOrderError(f"Chvátal's condition needs n >= 3, got {n}")
    for k in range(1, (n + 1) // 2):
        if d[k - 1] <= k and d[n - k - 1] <= n - k - 1:
            return ChvatalVerdict(outcome=ChvatalOutcome.UNKNOWN, witness_k=k)
    return ChvatalVerdict(outcome=ChvatalOutcome.GUARANTEED)


def chvatal_guaranteed_mask(sorted_degrees: np.ndarray) -> np.ndarray:
    """Row-wise chvatal_check on an (N, n) array of non-decreasing degree rows."""
    count, n = sorted_degrees.shape
    ok = np.ones(count, dtype=bool)
    if n < 3:
        ok[:] = False
        return ok
    for k in range(1, (n + 1) // 2):
        bad = (sorted_degrees[:, k - 1] <= k) & (sorted_degrees[:, n - k - 1] <= n - k - 1)
        ok &= ~bad
    return ok


def chvatal_path_mask(degrees: np.ndarray) -> np.ndarray:
    """
    Chvátal's condition applied to G ∨ K1: a guaranteed row certifies a
    Hamilton path in G.
    """
    count, n = degrees.shape
    lifted = np.sort(degrees, axis=1) + 1
    joined = np.concatenate([lifted, np.full((count, 1), n, dtype=lifted.dtype)], axis=1)
    return chvatal_guaranteed_mask(joined)


class OreBondyOutcome(str, Enum):
    HAMILTONIAN = "Hamiltonian"
    EXCEPTION = "Exception"
    NOT_APPLICABLE = "NotApplicable"


def ore_bondy_check(G: Graph) -> OreBondyOutcome:
    if G.n < 3 or G.m < comb(G.n - 1, 2) + 1:
        return OreBondyOutcome.NOT_APPLICABLE
    if match_member(G, ore_bondy_exceptions(G.n)) is not None:
        return OreBondyOutcome.EXCEPTION
    return OreBondyOutcome.HAMILTONIAN


def lemma_edge_threshold_cycle(G: Graph) -> ThresholdVerdict:
    if G.n < 5 or G.min_degree < 2 or G.m < comb(G.n - 2, 2) + 4:
        return ThresholdVerdict(outcome=ConditionOutcome.NOT_APPLICABLE)
    member = match_member(G, members_of_order(FamilyTag.CAL_G2, G.n))
    if member is not None:
        return ThresholdVerdict(outcome=ConditionOutcome.EXCEPTION, member=member)
    return ThresholdVerdict(outcome=ConditionOutcome.HAMILTONIAN)


def lemma_edge_threshold_path(G: Graph) -> ThresholdVerdict:
    if G.n < 4 or G.min_degree < 1 or G.m < comb(G.n - 2, 2) + 2:
        return ThresholdVerdict(outcome=ConditionOutcome.NOT_APPLICABLE)
    member = match_member(G, members_of_order(FamilyTag.CAL_G1, G.n))
    if member is not None:
        return ThresholdVerdict(outcome=ConditionOutcome.EXCEPTION, member=member)
    return ThresholdVerdict(outcome=ConditionOutcome.HAS_PATH)


def erdos_gallai_guarantee(n: int, m: int) -> int:
    """
    k + 1 for the largest integer k >= 2 with m > k(n-1)/2, else 0.

    k = 1 would only promise a "cycle" of length 2, which simple graphs
    never have, so it is reported as 0.
    """
    if n < 3 or m < 0:
        raise GraphOrderError(f"erdos_gallai_guarantee needs n >= 3 and m >= 0, got n={n}, m={m}")
    if m == 0:
        return 0
    k = (2 * m - 1) // (n - 1)
    return k + 1 if k >= 2 else 0


def is_graphic(d: DegreeSequence) -> bool:
    if d.total % 2:
        return False
    desc = sorted(d.degrees, reverse=True)
    n = len(desc)
    prefix = 0
    for k in range(1, n + 1):
        prefix += desc[k - 1]
        tail = sum(min(x, k) for x in desc[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True
