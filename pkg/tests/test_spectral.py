# tests/test_spectral.py

import math

import numpy as np
import pytest

from conftest import random_graph
from hamspec.errors import SpectralConvergenceError
from hamspec.graphs import (
    disjoint_union,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
    realize_graph,
)
from hamspec.models.family import G2, K, Kab, join, split, union
from hamspec.spectral import (
    compare_to_threshold,
    estimate_with_retry,
    is_adjacency_eigenvalue,
    integer_or_none,
    quotient_radius,
    radius_equals_integer,
    rho_split_closed_form,
    spectral_radius,
    spectral_radius_batch,
)
from hamspec.spectral import decide


@pytest.mark.parametrize(
    "G, expected",
    [
        (make_complete(6), 5.0),
        (make_complete_bipartite(2, 5), math.sqrt(10)),
        (make_cycle(7), 2.0),
        (make_path(5), 2 * math.cos(math.pi / 6)),
        (make_empty(4), 0.0),
        (disjoint_union(make_complete(6), make_complete(1)), 5.0),
    ],
)
def test_known_spectral_radii(G, expected):
    est = spectral_radius(G, tol=1e-10)
    assert est.contains(expected) or abs(est.value - expected) < 1e-9
    assert est.width <= 1e-10


@pytest.mark.parametrize("n", [3, 6, 9, 12])
def test_agrees_with_dense_eigensolver(rng, n):
    G = random_graph(rng, n, 0.5)
    expected = float(np.max(np.linalg.eigvalsh(G.adjacency_matrix())))
    assert abs(spectral_radius(G, tol=1e-10).value - expected) < 1e-8


@pytest.mark.parametrize("n, k", [(n, k) for n in range(2, 13) for k in range(1, n)])
def test_split_closed_form(n, k):
    G = realize_graph(split(n, k))
    assert abs(spectral_radius(G).value - rho_split_closed_form(n, k)) < 1e-9


def test_split_closed_form_integer_case():
    assert rho_split_closed_form(8, 3) == 5.0


@pytest.mark.parametrize("spec", [G2(9), join(K(2), Kab(2, 5)), join(K(3), union(Kab(1, 4), K(1)))])
def test_quotient_route_agrees(spec):
    G = realize_graph(spec)
    assert abs(quotient_radius(G) - spectral_radius(G).value) < 1e-9


def test_batch_matches_single(rng):
    graphs = [random_graph(rng, 6, 0.5) for _ in range(30)]
    rows = np.array([G.rows for G in graphs], dtype=np.int64)
    brackets = spectral_radius_batch(rows, 6, tol=1e-9, max_iterations=20000)
    for i, G in enumerate(graphs):
        value = spectral_radius(G).value
        assert brackets.lower[i] - 1e-9 <= value <= brackets.upper[i] + 1e-9


def test_integer_eigenvalues_are_exact():
    assert is_adjacency_eigenvalue(realize_graph(split(8, 3)), 5)
    assert not is_adjacency_eigenvalue(realize_graph(G2(7)), 4)
    assert is_adjacency_eigenvalue(make_cycle(6), 2)


def test_integer_radius_needs_the_bracket():
    C6 = make_cycle(6)
    est = spectral_radius(C6)
    # 1 = 2cos(pi/3) is an eigenvalue of C6, but not its radius
    assert is_adjacency_eigenvalue(C6, 1)
    assert not radius_equals_integer(C6, 1, est)
    assert radius_equals_integer(C6, 2, est, slack=1e-9)
    S = realize_graph(split(8, 3))
    assert radius_equals_integer(S, 5, spectral_radius(S), slack=1e-9)


def test_non_convergence_raises():
    with pytest.raises(SpectralConvergenceError):
        spectral_radius(make_path(5), tol=1e-12, max_iterations=1)


def test_retry_raises_iteration_cap(monkeypatch):
    real = decide.spectral_radius
    caps = []

    def flaky(G, tol, max_iterations):
        caps.append(max_iterations)
        if max_iterations < 1000:
            raise SpectralConvergenceError("not yet")
        return real(G, tol=tol, max_iterations=max_iterations)

    monkeypatch.setattr(decide, "spectral_radius", flaky)
    est = estimate_with_retry(make_path(5), 1e-10, max_iterations=100)
    assert caps == [100, 1000]
    assert abs(est.value - math.sqrt(3)) < 1e-9


@pytest.mark.parametrize(
    "spec, threshold, strict, holds",
    [
        (split(8, 3), 5, True, False),
        (split(8, 3), 5, False, True),
        (union(K(6), K(1)), 5, False, True),
        (union(K(6), K(1)), 5, True, False),
        (G2(7), 4, True, True),
        (split(6, 2), 4, False, False),
    ],
)
def test_threshold_decisions(spec, threshold, strict, holds):
    G = realize_graph(spec)
    decision = compare_to_threshold(G, threshold, strict, exact_threshold=integer_or_none(threshold))
    assert decision.holds is holds


def test_exact_tie_is_flagged():
    decision = compare_to_threshold(realize_graph(split(8, 3)), 5.0, strict=False, exact_threshold=5)
    assert decision.borderline and decision.exact


def test_integer_or_none():
    assert integer_or_none(4.0) == 4
    assert integer_or_none(4.4040) is None


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_adding_an_edge_to_a_connected_graph_raises_the_radius(rng, n):
    checked = 0
    while checked < 15:
        G = random_graph(rng, n, 0.4)
        if not G.is_connected() or G.is_complete():
            continue
        missing = [(u, v) for v in range(1, n) for u in range(v) if not G.has_edge(u, v)]
        u, v = missing[int(rng.integers(len(missing)))]
        before, after = spectral_radius(G), spectral_radius(G.add_edge(u, v))
        assert after.lower > before.upper
        checked += 1
