# hamspec/spectral/bounds.py

"""
Upper bounds on the spectral radius in terms of n, m and minimum degree,
plus the edge-count prefilters derived from them.
"""

from __future__ import annotations

import math

from ..errors import BoundDomainError


def hong_bound(n: int, m: int) -> float:
    """sqrt(2m - n + 1); valid for graphs without isolated vertices."""
    if n < 1 or m < 0:
        raise BoundDomainError(f"hong_bound needs n >= 1 and m >= 0, got n={n}, m={m}")
    radicand = 2 * m - n + 1
    if radicand < 0:
        raise BoundDomainError(f"2m - n + 1 = {radicand} is negative")
    return math.sqrt(radicand)


def hsk_f(x: float, p: int, q: int) -> float:
    """(x - 1)/2 + sqrt(2q - px + (1 + x)^2 / 4), non-increasing in x on [0, p-1]."""
    if p < 0 or q < 0 or 2 * q > p * (p - 1):
        raise BoundDomainError(f"hsk_f needs 0 <= 2q <= p(p-1), got p={p}, q={q}")
    if not 0 <= x <= p - 1:
        raise BoundDomainError(f"hsk_f needs 0 <= x <= p-1, got x={x}, p={p}")
    radicand = 2 * q - p * x + (1 + x) ** 2 / 4
    if radicand < 0:
        raise BoundDomainError(f"negative radicand {radicand} at x={x}, p={p}, q={q}")
    return (x - 1) / 2 + math.sqrt(radicand)


def nikiforov_bound(n: int, m: int, delta: int) -> float:
    """(delta - 1)/2 + sqrt(2m - n delta + (delta + 1)^2 / 4)."""
    if not 0 <= delta <= n - 1:
        raise BoundDomainError(f"delta must lie in [0, n-1], got delta={delta}, n={n}")
    radicand = 2 * m - n * delta + (delta + 1) ** 2 / 4
    if radicand < 0:
        raise BoundDomainError(f"negative radicand {radicand} for n={n}, m={m}, delta={delta}")
    return (delta - 1) / 2 + math.sqrt(radicand)


def min_edges_for_radius(n: int, threshold: float, delta: int, slack: float = 0.0) -> int:
    """
    Smallest m for which nikiforov_bound(n, m, delta) >= threshold - slack.
    Graphs with minimum degree >= delta and fewer edges cannot reach the
    threshold. Returns C(n,2) + 1 when no m qualifies.
    """
    top = n * (n - 1) // 2
    for m in range(top + 1):
        try:
            if nikiforov_bound(n, m, delta) >= threshold - slack:
                return m
        except BoundDomainError:
            continue
    return top + 1


def min_edges_for_radius_hong(n: int, threshold: float, slack: float = 0.0) -> int:
    """Same as min_edges_for_radius, using hong_bound (graphs with delta >= 1)."""
    top = n * (n - 1) // 2
    for m in range(top + 1):
        try:
            if hong_bound(n, m) >= threshold - slack:
                return m
        except BoundDomainError:
            continue
    return top + 1
