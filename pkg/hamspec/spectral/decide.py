# hamspec/spectral/decide.py

"""
Deciding rho(G) against a threshold.

A first estimate at the working tolerance settles every graph whose bracket
clears the threshold by more than tol_guard. Graphs inside the guard band
are re-estimated at refine_tol; integer thresholds are then settled exactly
by testing whether the threshold is an eigenvalue. Non-convergence is
retried with a growing iteration cap.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from ..config import get_settings
from ..errors import SpectralConvergenceError
from ..logs import get_logger
from ..models.graph import Graph
from ..models.spectral import SpectralEstimate
from .power import radius_equals_integer, spectral_radius

logger = get_logger("spectral.decide")

# below this distance a refined estimate is read as equality
TIE_WIDTH = 1e-9


class ThresholdDecision(BaseModel):
    holds: bool
    estimate: SpectralEstimate
    borderline: bool = False
    exact: bool = False


def estimate_with_retry(
    G: Graph, tol: float, max_iterations: Optional[int] = None, attempts: int = 3
) -> SpectralEstimate:
    """spectral_radius() with the iteration cap multiplied by 10 per retry."""
    base = max_iterations or get_settings().max_iterations
    for attempt in Retrying(
        stop=stop_after_attempt(attempts),
        retry=retry_if_exception_type(SpectralConvergenceError),
        reraise=True,
    ):
        with attempt:
            cap = base * 10 ** (attempt.retry_state.attempt_number - 1)
            if attempt.retry_state.attempt_number > 1:
                logger.info("retrying spectral estimate with iteration cap %d", cap)
            return spectral_radius(G, tol=tol, max_iterations=cap)
    raise SpectralConvergenceError("unreachable")  # pragma: no cover


def compare_to_threshold(
    G: Graph,
    threshold: float,
    strict: bool,
    exact_threshold: Optional[int] = None,
    tol: Optional[float] = None,
    tol_guard: Optional[float] = None,
    refine_tol: Optional[float] = None,
) -> ThresholdDecision:
    """
    rho(G) > threshold (strict) or rho(G) >= threshold (not strict).

    exact_threshold, when given, is the integer value of the threshold and
    enables the exact equality test.
    """
    settings = get_settings()
    tol = settings.tol if tol is None else tol
    tol_guard = settings.tol_guard if tol_guard is None else tol_guard
    refine_tol = settings.refine_tol if refine_tol is None else refine_tol

    est = estimate_with_retry(G, tol)
    if est.lower > threshold + tol_guard:
        return ThresholdDecision(holds=True, estimate=est)
    if est.upper < threshold - tol_guard:
        return ThresholdDecision(holds=False, estimate=est)

    refined = estimate_with_retry(G, refine_tol)
    logger.info(
        "borderline rho=%.15f against threshold %.15f (n=%d, m=%d)",
        refined.value, threshold, G.n, G.m,
    )
    if (
        exact_threshold is not None
        and radius_equals_integer(G, exact_threshold, refined, slack=TIE_WIDTH)
    ):
        return ThresholdDecision(holds=not strict, estimate=refined, borderline=True, exact=True)

    if strict:
        holds = refined.lower > threshold + TIE_WIDTH
    else:
        holds = refined.upper >= threshold - TIE_WIDTH
    return ThresholdDecision(holds=holds, estimate=refined, borderline=True)


def integer_or_none(value: float) -> Optional[int]:
    r = round(value)
    return int(r) if abs(value - r) < 1e-12 else None
