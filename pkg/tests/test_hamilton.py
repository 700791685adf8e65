# tests/test_hamilton.py

import networkx as nx
import numpy as np
import pytest

from conftest import random_graph
from hamspec.errors import GraphOrderError
from hamspec.graphs import (
    disjoint_union,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
    realize_graph,
)
from hamspec.hamilton import (
    circumference,
    circumference_many,
    hamilton_path_via_join,
    hamiltonian_many,
    has_hamilton_cycle,
    has_hamilton_path,
    traceable_many,
    verify_walk,
)
from hamspec.models import Graph
from hamspec.models.family import G1, G2, split


def petersen() -> Graph:
    H = nx.petersen_graph()
    return Graph.from_edges(10, H.edges())


@pytest.mark.parametrize(
    "G, path, cycle",
    [
        (make_path(6), True, False),
        (make_cycle(6), True, True),
        (make_complete_bipartite(1, 3), False, False),
        (make_complete_bipartite(3, 3), True, True),
        (make_complete_bipartite(2, 4), False, False),
        (make_complete(1), True, False),
        (make_complete(2), True, False),
        (disjoint_union(make_complete(3), make_complete(3)), False, False),
        (realize_graph(split(6, 2)), False, False),
        (realize_graph(G2(9)), True, False),
        (realize_graph(G1(7)), False, False),
    ],
)
def test_known_graphs(G, path, cycle):
    assert has_hamilton_path(G).found is path
    assert has_hamilton_cycle(G).found is cycle


def test_petersen_is_traceable_but_not_hamiltonian():
    G = petersen()
    assert has_hamilton_path(G).found
    assert not has_hamilton_cycle(G).found
    assert circumference(G) == 9


@pytest.mark.parametrize("n", [5, 8, 11])
def test_witnesses_are_valid(rng, n):
    for _ in range(20):
        G = random_graph(rng, n, 0.6)
        path = has_hamilton_path(G)
        if path.found:
            verify_walk(G, path.order, closed=False)
        cycle = has_hamilton_cycle(G)
        if cycle.found:
            assert cycle.order[0] == 0
            verify_walk(G, cycle.order, closed=True)


@pytest.mark.parametrize(
    "G, expected",
    [
        (make_complete(6), 6),
        (make_path(7), 0),
        (make_empty(3), 0),
        (make_complete_bipartite(2, 5), 4),
        (disjoint_union(make_cycle(5), make_complete(3)), 5),
    ],
)
def test_circumference(G, expected):
    assert circumference(G) == expected


@pytest.mark.parametrize("n", [3, 5, 7])
def test_path_iff_join_has_cycle(rng, n):
    for _ in range(30):
        G = random_graph(rng, n, 0.4)
        assert has_hamilton_path(G).found == hamilton_path_via_join(G)


def test_batch_kernels_agree_with_single_graph_search(rng):
    n = 7
    graphs = [random_graph(rng, n, 0.45) for _ in range(60)]
    rows = np.array([G.rows for G in graphs], dtype=np.int64)
    paths = traceable_many(rows, n)
    cycles = hamiltonian_many(rows, n)
    circ = circumference_many(rows, n)
    for i, G in enumerate(graphs):
        assert bool(paths[i]) == has_hamilton_path(G).found
        assert bool(cycles[i]) == has_hamilton_cycle(G).found
        assert int(circ[i]) == circumference(G)


def test_exact_search_order_cap():
    with pytest.raises(GraphOrderError):
        has_hamilton_path(make_cycle(25))
