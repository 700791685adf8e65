# hamspec/models/spectral.py

"""
Spectral value types.

- SpectralEstimate: certified bracket around the spectral radius
- CubicFamily: one of the three cubic characteristic equations
"""

from __future__ import annotations

from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class SpectralEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    lower: float
    upper: float
    iterations: int = 0
    residual: float = 0.0
    tolerance: float

    @model_validator(mode="after")
    def check_bracket(self) -> "SpectralEstimate":
        if not self.lower <= self.value <= self.upper:
            raise ValueError(
                f"value {self.value} outside bracket [{self.lower}, {self.upper}]"
            )
        if self.upper - self.lower > self.tolerance:
            raise ValueError(
                f"bracket width {self.upper - self.lower:.3e} exceeds tolerance {self.tolerance:.3e}"
            )
        return self

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper


class CubicTag(str, Enum):
    G1_CUBIC = "G1cubic"
    G2_CUBIC = "G2cubic"
    K1_JOIN_KN3_K2_CUBIC = "K1JoinKn3K2cubic"


class CubicFamily(BaseModel):
    """
    x^3 + a2 x^2 + a1 x + a0 whose largest zero is the spectral radius of
    G1(n), G2(n) or K1 ∨ (K_{n-3} + K2).
    """

    model_config = ConfigDict(frozen=True)

    tag: CubicTag
    n: int

    @model_validator(mode="after")
    def check_order(self) -> "CubicFamily":
        floor = 5 if self.tag is CubicTag.K1_JOIN_KN3_K2_CUBIC else 4
        if self.n < floor:
            raise ValueError(f"{self.tag.value} requires n >= {floor}, got {self.n}")
        return self

    def coefficients(self) -> Tuple[int, int, int, int]:
        """(a3, a2, a1, a0) with a3 = 1."""
        n = self.n
        if self.tag is CubicTag.G1_CUBIC:
            return (1, -(n - 4), -(n - 1), 2 * (n - 4))
        if self.tag is CubicTag.G2_CUBIC:
            return (1, -(n - 4), -(n + 1), 4 * (n - 5))
        return (1, -(n - 3), -3, 3 * n - 11)

    def shifted_coefficients(self) -> Tuple[int, int, int, int]:
        """Coefficients (e3, e2, e1, e0) of p(n - 3 + e) as a polynomial in e."""
        a3, a2, a1, a0 = self.coefficients()
        c = self.n - 3
        return (
            a3,
            3 * a3 * c + a2,
            3 * a3 * c * c + 2 * a2 * c + a1,
            a3 * c**3 + a2 * c**2 + a1 * c + a0,
        )
