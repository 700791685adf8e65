# tests/test_isomorphism.py

import pytest

from conftest import random_graph
from hamspec.errors import GraphOrderError
from hamspec.graphs import (
    disjoint_union,
    find_isomorphism,
    is_isomorphic,
    is_threshold,
    make_complete,
    make_cycle,
    realize_graph,
)
from hamspec.models.family import G2, split


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_relabelled_graph_is_isomorphic(rng, n):
    G = random_graph(rng, n, 0.4)
    perm = [int(v) for v in rng.permutation(n)]
    H = G.relabel(perm)
    mapping = find_isomorphism(G, H)
    assert mapping is not None
    for u, v in G.edges():
        assert H.has_edge(mapping[u], mapping[v])


def test_same_degrees_different_graphs():
    two_triangles = disjoint_union(make_complete(3), make_complete(3))
    assert not is_isomorphic(make_cycle(6), two_triangles)


def test_threshold_recognition():
    assert is_threshold(realize_graph(split(8, 3)))
    assert is_threshold(realize_graph(G2(9)))
    assert not is_threshold(make_cycle(4))


def test_large_threshold_graphs_skip_the_cap():
    G = realize_graph(G2(20))
    H = G.relabel(list(range(19, -1, -1)))
    assert is_isomorphic(G, H)


def test_order_cap_applies_to_general_graphs():
    G = make_cycle(12)
    H = G.relabel([(5 * v) % 12 for v in range(12)])
    with pytest.raises(GraphOrderError):
        is_isomorphic(G, H)


@pytest.mark.parametrize("n", [5, 7, 9])
def test_isomorphism_is_symmetric_and_transitive(rng, n):
    for _ in range(10):
        A = random_graph(rng, n, 0.5)
        B = A.relabel([int(v) for v in rng.permutation(n)])
        C = B.relabel([int(v) for v in rng.permutation(n)])
        assert is_isomorphic(A, B) and is_isomorphic(B, A)
        assert is_isomorphic(B, C) and is_isomorphic(C, B)
        assert is_isomorphic(A, C) and is_isomorphic(C, A)


def test_isomorphism_is_an_equivalence_on_small_graphs(rng):
    # relabelled copies mixed with unrelated random graphs
    graphs = []
    for _ in range(4):
        G = random_graph(rng, 6, 0.5)
        graphs += [G, G.relabel([int(v) for v in rng.permutation(6)])]
    related = {
        (i, j): is_isomorphic(graphs[i], graphs[j])
        for i in range(len(graphs))
        for j in range(len(graphs))
    }
    for (i, j), same in related.items():
        assert same == related[(j, i)]
        if i == j:
            assert same
    for i in range(len(graphs)):
        for j in range(len(graphs)):
            for k in range(len(graphs)):
                if related[(i, j)] and related[(j, k)]:
                    assert related[(i, k)]
