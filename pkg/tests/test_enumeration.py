# tests/test_enumeration.py

from math import comb

import numpy as np
import pytest

from hamspec.errors import GraphOrderError, InfeasibleRangeError
from hamspec.verify.enumeration import (
    EnumerationFilters,
    degree_keys,
    enumerate_graphs,
    iter_batches,
    iter_graphs,
    labeled_count,
    sample_batches,
)


def labeled_min_degree_one(n: int) -> int:
    return sum((-1) ** k * comb(n, k) * 2 ** comb(n - k, 2) for k in range(n + 1))


def test_all_graphs_on_five_vertices():
    assert enumerate_graphs(5) == 1024


@pytest.mark.parametrize("n", [4, 5, 6])
def test_min_degree_filter_counts(n):
    assert enumerate_graphs(n, EnumerationFilters(min_degree=1)) == labeled_min_degree_one(n)


@pytest.mark.slow
def test_min_degree_filter_counts_n7():
    assert enumerate_graphs(7, EnumerationFilters(min_degree=1)) == labeled_min_degree_one(7)


def test_connected_graphs_on_four_vertices():
    assert enumerate_graphs(4, EnumerationFilters(connected=True)) == 38


def test_degree_sequence_filter():
    filters = EnumerationFilters(degree_sequences=((1, 1, 2, 2, 2),))
    # labelled P5 and K3 + K2
    assert enumerate_graphs(5, filters) == 60 + 10


@pytest.mark.parametrize("lo, hi", [(12, None), (0, 3), (5, 9)])
def test_edge_window_counts(lo, hi):
    filters = EnumerationFilters(min_edges=lo, max_edges=hi)
    top = 15 if hi is None else hi
    expected = sum(comb(15, w) for w in range(lo, top + 1))
    assert enumerate_graphs(6, filters) == expected == labeled_count(6, filters)


def test_narrow_window_at_n8():
    filters = EnumerationFilters(min_edges=24)
    expected = sum(comb(28, w) for w in range(24, 29))
    assert expected == 24158
    assert enumerate_graphs(8, filters) == expected


def test_labeled_count_at_n9():
    filters = EnumerationFilters(min_edges=25)
    assert labeled_count(9, filters) == sum(comb(36, w) for w in range(25, 37))


@pytest.mark.parametrize("bits", [1, 3, 5])
def test_shards_partition_the_space(bits):
    filters = EnumerationFilters(min_edges=7, min_degree=1)
    total = enumerate_graphs(6, filters)
    parts = [enumerate_graphs(6, filters, shard=s, shard_bits=bits) for s in range(1 << bits)]
    assert sum(parts) == total


def test_shards_visit_distinct_codes():
    seen = []
    for shard in range(4):
        for batch in iter_batches(5, shard=shard, shard_bits=2, chunk_size=100):
            seen.extend(int(c) for c in batch.codes)
    assert sorted(seen) == list(range(1024))


def test_visitor_receives_filtered_batches():
    sizes = []

    def visitor(batch):
        assert batch.degrees.min() >= 2
        assert np.all(batch.edge_counts == batch.degrees.sum(axis=1) // 2)
        sizes.append(len(batch))

    visited = enumerate_graphs(6, EnumerationFilters(min_degree=2), visitor, chunk_size=500)
    assert sum(sizes) == visited


def test_iter_graphs_yields_each_labeled_graph():
    codes = [G.to_code() for G in iter_graphs(3)]
    assert sorted(codes) == list(range(8))


@pytest.mark.parametrize(
    "n, filters, error",
    [
        (0, EnumerationFilters(), GraphOrderError),
        (8, EnumerationFilters(), InfeasibleRangeError),
        (10, EnumerationFilters(min_edges=40), InfeasibleRangeError),
    ],
)
def test_infeasible_orders(n, filters, error):
    with pytest.raises(error):
        list(iter_batches(n, filters))


def test_sampling_is_reproducible():
    first = np.concatenate([b.codes for b in sample_batches(10, 500, seed=7)])
    second = np.concatenate([b.codes for b in sample_batches(10, 500, seed=7)])
    assert np.array_equal(first, second)
    assert len(first) == 500


def test_sampling_applies_filters():
    filters = EnumerationFilters(min_edges=20, min_degree=2)
    for batch in sample_batches(9, 2000, filters, seed=3):
        assert batch.edge_counts.min() >= 20
        assert batch.degrees.min() >= 2


def test_degree_keys_are_injective_on_sorted_rows():
    rows = np.array([[0, 1, 1], [1, 1, 2], [0, 0, 0], [2, 2, 2]])
    keys = degree_keys(rows, 3)
    assert len(set(keys.tolist())) == 4
