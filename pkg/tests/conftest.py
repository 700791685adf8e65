# tests/conftest.py

import os

# Single-process scans unless a test asks for workers explicitly.
os.environ.setdefault("HAMSPEC_JOBS", "1")

import networkx as nx
import numpy as np
import pytest

from hamspec.config import get_settings
from hamspec.models import Graph


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, edges)
