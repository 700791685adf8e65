# tests/test_bounds.py

import math

import pytest

from conftest import random_graph
from hamspec.errors import BoundDomainError
from hamspec.graphs import make_complete
from hamspec.spectral import (
    hong_bound,
    hsk_f,
    min_edges_for_radius,
    min_edges_for_radius_hong,
    nikiforov_bound,
    spectral_radius,
)


def test_hong_bound_values():
    assert hong_bound(7, 11) == 4.0
    assert hong_bound(3, 3) == 2.0


def test_hong_bound_domain():
    with pytest.raises(BoundDomainError):
        hong_bound(5, 1)
    with pytest.raises(BoundDomainError):
        hong_bound(5, -1)


@pytest.mark.parametrize("n", range(2, 10))
def test_nikiforov_bound_tight_on_complete_graphs(n):
    assert abs(nikiforov_bound(n, n * (n - 1) // 2, n - 1) - (n - 1)) < 1e-12


def test_hsk_f_domain():
    assert hsk_f(0, 4, 6) == pytest.approx(-0.5 + math.sqrt(12.25))
    with pytest.raises(BoundDomainError):
        hsk_f(4, 4, 6)
    with pytest.raises(BoundDomainError):
        hsk_f(1, 4, 7)


def test_min_edges_prefilters():
    assert min_edges_for_radius_hong(7, 4) == 11
    assert min_edges_for_radius_hong(7, 4, slack=1e-7) == 11
    # K_n needs every edge
    assert min_edges_for_radius(5, 4, delta=4) == 10
    assert min_edges_for_radius(5, 5, delta=0) == 11


@pytest.mark.parametrize("n", [5, 7, 9])
def test_bounds_dominate_the_radius(rng, n):
    for _ in range(40):
        G = random_graph(rng, n, 0.6)
        if G.min_degree == 0:
            continue
        rho = spectral_radius(G).value
        assert rho <= hong_bound(G.n, G.m) + 1e-9
        assert rho <= nikiforov_bound(G.n, G.m, G.min_degree) + 1e-9


def test_complete_graph_meets_hong_bound():
    G = make_complete(6)
    assert abs(hong_bound(6, G.m) - 5) < 1e-12


@pytest.mark.parametrize("p", range(3, 16))
def test_hsk_f_is_non_increasing(p):
    grid = [i * (p - 1) / 40 for i in range(41)]
    for q in range(p * (p - 1) // 2 + 1):
        previous = None
        for x in grid:
            try:
                value = hsk_f(x, p, q)
            except BoundDomainError:
                # the radicand only shrinks on [0, p-1]
                break
            if previous is not None:
                assert value <= previous + 1e-12
            previous = value
