# hamspec/spectral/formulas.py

"""
Closed forms and cubic characteristic equations for the extremal families.

- rho_split_closed_form(n, k): K_k ∨ (n-k)K1
- bipartite_closed_form(a, b): K_{a,b}
- cubic_largest_root(): bisection on the cubic shifted to x = n - 3
- root brackets for G2(n) and K1 ∨ (K_{n-3} + K2), with exact sign checks
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Tuple, Union

from ..errors import BoundDomainError, FamilyParameterError, NoSignChangeError
from ..models.spectral import CubicFamily, CubicTag

Number = Union[int, float, Fraction]


def rho_split_closed_form(n: int, k: int) -> float:
    if not 1 <= k <= n - 1:
        raise FamilyParameterError(f"split graph requires 1 <= k <= n-1, got n={n}, k={k}")
    return (k - 1 + math.sqrt(4 * k * n - (3 * k - 1) * (k + 1))) / 2


def bipartite_closed_form(a: int, b: int) -> float:
    if a < 1 or b < 1:
        raise FamilyParameterError(f"complete bipartite requires a, b >= 1, got ({a}, {b})")
    return math.sqrt(a * b)


def evaluate(coeffs: Tuple[int, int, int, int], x: Number) -> Number:
    """Horner evaluation of (c3, c2, c1, c0) at x; exact for int/Fraction inputs."""
    c3, c2, c1, c0 = coeffs
    return ((c3 * x + c2) * x + c1) * x + c0


def _sign(value: Number) -> int:
    return (value > 0) - (value < 0)


def cubic_largest_root(fam: CubicFamily, abs_tol: float = 1e-12) -> float:
    """
    The root above n - 3, by bisection on e in p(n - 3 + e).

    The bracket is (n-3, n-2]; when the root sits at or beyond n - 2 (small n)
    it widens to (n-2, n-1]. Endpoint signs are exact integers.
    """
    shifted = fam.shifted_coefficients()
    base = fam.n - 3
    if evaluate(shifted, 0) == 0:
        raise NoSignChangeError(f"{fam.tag.value} n={fam.n} has a root at n-3 exactly")

    for lo, hi in ((0, 1), (1, 2)):
        s_lo, s_hi = _sign(evaluate(shifted, lo)), _sign(evaluate(shifted, hi))
        if s_hi == 0:
            return float(base + hi)
        if s_lo != s_hi:
            break
    else:
        raise NoSignChangeError(
            f"{fam.tag.value} n={fam.n}: no sign change on (n-3, n-1]"
        )

    a, b = float(lo), float(hi)
    while b - a > abs_tol:
        mid = 0.5 * (a + b)
        s_mid = _sign(evaluate(shifted, mid))
        if s_mid == 0:
            return base + mid
        if s_mid == s_lo:
            a = mid
        else:
            b = mid
    return base + 0.5 * (a + b)


def g1_cubic(n: int) -> CubicFamily:
    return CubicFamily(tag=CubicTag.G1_CUBIC, n=n)


def g2_cubic(n: int) -> CubicFamily:
    return CubicFamily(tag=CubicTag.G2_CUBIC, n=n)


def k1_join_cubic(n: int) -> CubicFamily:
    return CubicFamily(tag=CubicTag.K1_JOIN_KN3_K2_CUBIC, n=n)


# ---------- root brackets ----------

def _bracket_offsets_g2(n: int) -> Tuple[Fraction, Fraction]:
    if n < 6:
        raise BoundDomainError(f"bracket for G2(n) requires n >= 6, got {n}")
    return Fraction(8, n * n), Fraction(8, n * n - 5 * n + 2)


def _bracket_offsets_k1join(n: int) -> Tuple[Fraction, Fraction]:
    if n < 6:
        raise BoundDomainError(f"bracket for K1 ∨ (K_(n-3) + K2) requires n >= 6, got {n}")
    return Fraction(2, n * n), Fraction(2, n * n - 6 * n + 6)


def appendix_bracket_g2(n: int) -> Tuple[float, float]:
    lo, hi = _bracket_offsets_g2(n)
    return float(n - 3 + lo), float(n - 3 + hi)


def appendix_bracket_k1join(n: int) -> Tuple[float, float]:
    lo, hi = _bracket_offsets_k1join(n)
    return float(n - 3 + lo), float(n - 3 + hi)


def bracket_signs(fam: CubicFamily) -> Tuple[int, int]:
    """Exact signs of the cubic at the two ends of its root bracket."""
    if fam.tag is CubicTag.G2_CUBIC:
        lo, hi = _bracket_offsets_g2(fam.n)
    elif fam.tag is CubicTag.K1_JOIN_KN3_K2_CUBIC:
        lo, hi = _bracket_offsets_k1join(fam.n)
    else:
        raise BoundDomainError("no root bracket for the G1 cubic")
    shifted = fam.shifted_coefficients()
    return _sign(evaluate(shifted, lo)), _sign(evaluate(shifted, hi))


def increasing_above_base(fam: CubicFamily) -> bool:
    """
    p'(n - 3 + e) = 3e^2 + 2 e2 e + e1 is positive for all e >= 0 when
    e2 >= 0 and e1 > 0, so at most one root lies above n - 3.
    """
    _, e2, e1, _ = fam.shifted_coefficients()
    return e2 >= 0 and e1 > 0


def sign_changes_on_grid(fam: CubicFamily, steps: int = 1000) -> int:
    """
    Sign changes of the cubic over a uniform exact grid on [n-3, n-2].

    steps^3 * p(n - 3 + i/steps) is evaluated in integers.
    """
    e3, e2, e1, e0 = fam.shifted_coefficients()
    s = steps
    signs = [
        _sign(((e3 * i + e2 * s) * i + e1 * s * s) * i + e0 * s ** 3) for i in range(steps + 1)
    ]
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)
