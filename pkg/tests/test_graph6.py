# tests/test_graph6.py

import networkx as nx
import pytest

from conftest import random_graph, to_networkx
from hamspec.errors import Graph6FormatError
from hamspec.graphs import code_to_graph6, graph6_decode, graph6_encode, graph6_string, make_complete, make_empty
from hamspec.models import Graph
from hamspec.models.graph import slot_count


@pytest.mark.parametrize(
    "G, expected",
    [
        (make_complete(1), "@"),
        (make_complete(2), "A_"),
        (make_complete(3), "Bw"),
        (make_empty(5), "D??"),
    ],
)
def test_known_encodings(G, expected):
    assert graph6_string(G) == expected


@pytest.mark.parametrize("n", [2, 5, 7, 12, 20])
def test_encoding_agrees_with_networkx(rng, n):
    G = random_graph(rng, n)
    ours = nx.from_graph6_bytes(graph6_encode(G))
    assert nx.utils.edges_equal(ours.edges(), to_networkx(G).edges())


def test_decodes_networkx_output():
    petersen = nx.petersen_graph()
    data = nx.to_graph6_bytes(petersen, header=False).strip()
    G = graph6_decode(data)
    assert G.n == 10 and G.m == 15
    assert set(G.degrees()) == {3}


def test_code_to_graph6_uses_slot_order():
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert code_to_graph6(4, G.to_code()) == graph6_string(G)


@pytest.mark.parametrize("data", ["", ">>graph6<<A_", "~??", "A", "A__", "`" + "?" * 100, "A\x7f", "A`", "Bx"])
def test_malformed_graph6(data):
    with pytest.raises(Graph6FormatError):
        graph6_decode(data)


@pytest.mark.parametrize("n", range(1, 7))
def test_every_labeled_graph_round_trips(n):
    for code in range(2 ** slot_count(n)):
        G = Graph.from_code(n, code)
        data = graph6_encode(G)
        assert graph6_decode(data) == G
        assert graph6_encode(graph6_decode(data)) == data
