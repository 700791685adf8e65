# hamspec/errors.py

"""
Exception hierarchy for hamspec.

Value-shaped errors (bad orders, bad parameters, malformed input) also
subclass ValueError so callers can catch them generically.
"""

from __future__ import annotations

from typing import Optional


class HamspecError(Exception):
    """Root of every error raised by the toolkit."""


class GraphOrderError(HamspecError, ValueError):
    """A vertex count is outside the range an operation supports."""


class FamilyParameterError(HamspecError, ValueError):
    """Family parameters fall outside the family's valid range."""


class Graph6FormatError(HamspecError, ValueError):
    """Malformed or unsupported graph6 input."""


class UnsortedSequenceError(HamspecError, ValueError):
    """A degree sequence is not sorted non-decreasing, or has out-of-range entries."""


class BoundDomainError(HamspecError, ValueError):
    """A bound formula was evaluated outside its domain (negative radicand, bad n)."""


class NoSignChangeError(HamspecError, ValueError):
    """Bisection bracket does not contain a sign change."""


class InfeasibleRangeError(HamspecError, ValueError):
    """An enumeration or check was requested over a range it cannot cover."""


class SpectralConvergenceError(HamspecError, RuntimeError):
    """Power iteration did not reach the requested width within its iteration cap."""


class WitnessError(HamspecError, RuntimeError):
    """A reconstructed Hamilton path/cycle failed edge-by-edge verification."""


class FamilySyntaxError(HamspecError, ValueError):
    """
    A family expression could not be parsed.

    Carries the 0-based character position and the offending token so the
    CLI can point at it.
    """

    def __init__(self, message: str, position: int, token: Optional[str] = None):
        self.position = position
        self.token = token
        detail = f"{message} at position {position}"
        if token:
            detail += f" (near {token!r})"
        super().__init__(detail)
