# hamspec/spectral/power.py

"""
Certified spectral radius by shifted power iteration.

- spectral_radius(): one graph, per-component, exact on complete components
- spectral_radius_batch(): many graphs of one order at once (numpy)
- quotient_radius(): independent route via the coarsest equitable partition
- is_adjacency_eigenvalue(): exact det(A - tI) == 0 by fraction-free elimination
- radius_equals_integer(): rho(G) == t, from that test plus a certified bracket

Brackets: for a positive vector v, min_i (Av)_i / v_i <= rho <= max_i (Av)_i / v_i
(Collatz-Wielandt), and the Rayleigh quotient v.Av/v.v never exceeds rho.
The residual ||Av - qv|| is reported alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..config import get_settings
from ..errors import SpectralConvergenceError
from ..models.graph import Graph
from ..models.spectral import SpectralEstimate


def _component_bracket(
    A: np.ndarray, tol: float, max_iterations: int
) -> Tuple[float, float, float, int, float]:
    """(value, lower, upper, iterations, residual) for one connected component."""
    k = A.shape[0]
    degrees = A.sum(axis=1)
    avg, delta = float(degrees.mean()), float(degrees.max())

    # uniform start plus a small deterministic tilt
    v = 1.0 + 1e-3 * (np.arange(k) + 1.0) / k
    v /= np.linalg.norm(v)

    lower, upper = avg, delta
    q = residual = 0.0
    for it in range(1, max_iterations + 1):
        w = A @ v
        q = float(v @ w)
        residual = float(np.linalg.norm(w - q * v))
        ratios = w / v
        lower = max(lower, q, float(ratios.min()))
        upper = min(upper, float(ratios.max()))
        if upper < lower:
            upper = lower
        if upper - lower <= tol:
            value = min(max(q, lower), upper)
            return value, lower, upper, it, residual
        v = w + v
        v /= np.linalg.norm(v)
    raise SpectralConvergenceError(
        f"power iteration did not reach width {tol:.1e} in {max_iterations} iterations "
        f"(bracket [{lower:.12f}, {upper:.12f}])"
    )


def spectral_radius(
    G: Graph, tol: Optional[float] = None, max_iterations: Optional[int] = None
) -> SpectralEstimate:
    """
    Largest adjacency eigenvalue of G with a certified bracket of width <= tol.

    Disconnected graphs take the maximum over components; complete components
    (including isolated vertices) are exact.
    """
    settings = get_settings()
    tol = settings.tol if tol is None else tol
    max_iterations = settings.max_iterations if max_iterations is None else max_iterations
    if tol <= 0:
        raise ValueError("tol must be > 0")

    value = lower = upper = -1.0
    iterations = 0
    residual = 0.0
    for comp in G.components():
        H = G.induced(comp)
        if H.is_complete():
            c_value = c_lower = c_upper = float(H.n - 1)
            it, res = 0, 0.0
        else:
            c_value, c_lower, c_upper, it, res = _component_bracket(
                H.adjacency_matrix(), tol, max_iterations
            )
        iterations = max(iterations, it)
        if c_value > value:
            residual = res
        # the maximum over components: each end of the bracket takes its own maximum
        value, lower, upper = max(value, c_value), max(lower, c_lower), max(upper, c_upper)

    return SpectralEstimate(
        value=value,
        lower=lower,
        upper=upper,
        iterations=iterations,
        residual=residual,
        tolerance=tol,
    )


# ---------- batch route ----------

@dataclass
class BatchBrackets:
    lower: np.ndarray
    upper: np.ndarray
    settled: np.ndarray

    @property
    def value(self) -> np.ndarray:
        return 0.5 * (self.lower + self.upper)


def adjacency_stack(rows: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(n, dtype=np.int64)
    return ((rows[:, :, None] >> shifts[None, None, :]) & 1).astype(np.float64)


def spectral_radius_batch(
    rows: np.ndarray,
    n: int,
    tol: Optional[float] = None,
    max_iterations: int = 5000,
    targets: Optional[np.ndarray] = None,
) -> BatchBrackets:
    """
    Shifted power iteration on a stack of graphs sharing one order.

    A graph leaves the active set once its bracket is narrower than tol or,
    when targets are given, once the bracket lies wholly on one side of its
    target. Graphs still active after max_iterations are reported as not
    settled; callers fall back to spectral_radius() for those.
    """
    tol = get_settings().tol if tol is None else tol
    count = rows.shape[0]
    A_all = adjacency_stack(rows, n)
    degrees = A_all.sum(axis=2)
    lower = degrees.mean(axis=1)
    upper = degrees.max(axis=1)
    settled = np.zeros(count, dtype=bool)

    active = np.arange(count)
    A = A_all
    v = np.full((count, n), 1.0 / np.sqrt(n))
    for _ in range(max_iterations):
        if active.size == 0:
            break
        w = np.einsum("kij,kj->ki", A, v)
        q = np.einsum("ki,ki->k", v, w)
        # whole components may underflow to zero; their ratios count as 0
        ratios = np.divide(w, v, out=np.zeros_like(w), where=v > 0)
        lo = np.maximum(lower[active], np.maximum(q, ratios.min(axis=1)))
        hi = np.minimum(upper[active], ratios.max(axis=1))
        hi = np.maximum(hi, lo)
        lower[active], upper[active] = lo, hi

        done = hi - lo <= tol
        if targets is not None:
            t = targets[active]
            done |= (hi <= t) | (lo > t)
        settled[active[done]] = True

        v = w + v
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        keep = ~done
        active, A, v = active[keep], A[keep], v[keep]

    return BatchBrackets(lower=lower, upper=upper, settled=settled)


# ---------- quotient route ----------

def equitable_partition(G: Graph) -> List[List[int]]:
    """Coarsest equitable partition by colour refinement, cells ordered by first vertex."""
    colors = [0] * G.n
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in G.neighbors(v)))) for v in range(G.n)
        ]
        palette: Dict[tuple, int] = {}
        fresh = [palette.setdefault(sig, len(palette)) for sig in signatures]
        if len(palette) == len(set(colors)):
            break
        colors = fresh
    cells: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return sorted(cells.values(), key=lambda cell: cell[0])


def quotient_matrix(G: Graph) -> np.ndarray:
    cells = equitable_partition(G)
    owner = {v: k for k, cell in enumerate(cells) for v in cell}
    B = np.zeros((len(cells), len(cells)))
    for k, cell in enumerate(cells):
        for u in G.neighbors(cell[0]):
            B[k, owner[u]] += 1.0
    return B


def quotient_radius(G: Graph) -> float:
    """Largest eigenvalue of the quotient matrix; equals rho(G) for any equitable partition."""
    B = quotient_matrix(G)
    return float(np.max(np.linalg.eigvals(B).real))


# ---------- exact integer eigenvalues ----------

def _bareiss_determinant(M: List[List[int]]) -> int:
    M = [row[:] for row in M]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def is_adjacency_eigenvalue(G: Graph, t: int) -> bool:
    """
    Exact test whether the integer t is an adjacency eigenvalue of G.

    Any eigenvalue counts, not only the largest; use radius_equals_integer()
    to decide rho(G) == t.
    """
    M = G.integer_adjacency()
    for v in range(G.n):
        M[v][v] -= t
    return _bareiss_determinant(M) == 0


def radius_equals_integer(
    G: Graph, t: int, estimate: SpectralEstimate, slack: float = 0.0
) -> bool:
    """rho(G) == t: t is an eigenvalue of G and the bracket of rho(G), widened by slack, holds t."""
    if not estimate.lower - slack <= t <= estimate.upper + slack:
        return False
    return is_adjacency_eigenvalue(G, t)
