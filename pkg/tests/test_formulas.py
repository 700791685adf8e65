# tests/test_formulas.py

import math

import pytest

from hamspec.errors import BoundDomainError
from hamspec.graphs import realize_graph
from hamspec.models.family import G1, G2, K, join, union
from hamspec.spectral import (
    appendix_bracket_g2,
    appendix_bracket_k1join,
    bracket_signs,
    cubic_largest_root,
    g1_cubic,
    g2_cubic,
    increasing_above_base,
    k1_join_cubic,
    sign_changes_on_grid,
    spectral_radius,
)


@pytest.mark.parametrize(
    "fam, expected",
    [
        (g2_cubic(7), 4.4040),
        (g2_cubic(8), (3 + math.sqrt(57)) / 2),
        (g1_cubic(6), 3.1774),
        (g1_cubic(10), 7.0367),
    ],
)
def test_cubic_roots_match_printed_values(fam, expected):
    assert abs(cubic_largest_root(fam) - expected) < 1e-3


@pytest.mark.parametrize("n", range(6, 21))
def test_g2_cubic_matches_power_iteration(n):
    rho = spectral_radius(realize_graph(G2(n))).value
    assert abs(cubic_largest_root(g2_cubic(n)) - rho) < 1e-9


@pytest.mark.parametrize("n", range(5, 21))
def test_g1_cubic_matches_power_iteration(n):
    rho = spectral_radius(realize_graph(G1(n))).value
    assert abs(cubic_largest_root(g1_cubic(n)) - rho) < 1e-9


@pytest.mark.parametrize("n", range(6, 21))
def test_k1_join_cubic_matches_power_iteration(n):
    G = realize_graph(join(K(1), union(K(n - 3), K(2))))
    rho = spectral_radius(G).value
    assert abs(cubic_largest_root(k1_join_cubic(n)) - rho) < 1e-9


@pytest.mark.parametrize("n", [6, 7, 10, 50, 1000])
def test_shifted_coefficients(n):
    assert g2_cubic(n).shifted_coefficients() == (1, 2 * n - 5, n * n - 5 * n + 2, -8)
    assert k1_join_cubic(n).shifted_coefficients() == (1, 2 * n - 6, n * n - 6 * n + 6, -2)


@pytest.mark.parametrize("n", [7, 8, 14, 30, 100])
def test_root_brackets_contain_the_root(n):
    lo, hi = appendix_bracket_g2(n)
    assert lo < cubic_largest_root(g2_cubic(n)) < hi
    lo, hi = appendix_bracket_k1join(n)
    assert lo < cubic_largest_root(k1_join_cubic(n)) < hi


@pytest.mark.parametrize("fam", [g2_cubic(7), g2_cubic(500), k1_join_cubic(7), k1_join_cubic(500)])
def test_bracket_properties(fam):
    assert bracket_signs(fam) == (-1, 1)
    assert increasing_above_base(fam)
    assert sign_changes_on_grid(fam) == 1


def test_bracket_needs_n_at_least_six():
    with pytest.raises(BoundDomainError):
        appendix_bracket_g2(5)
    with pytest.raises(BoundDomainError):
        bracket_signs(g1_cubic(8))
