# hamspec/verify/enumeration.py

"""
Labeled graph enumeration over edge-slot bit patterns.

A graph on n vertices is an integer code whose bit s says whether slot s
(graph6 order) is an edge. The space splits into 2^b shards by fixing the
top b bits. Within a shard, codes come either from a plain counting range
or, when the edge window is narrow, from fixed-popcount sequences.
Cheap filters (edge window, minimum degree, connectivity, allowed degree
sequences) are applied batch-wise before anything reaches a visitor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..config import get_settings
from ..errors import GraphOrderError, InfeasibleRangeError
from ..hamilton.kernels import connected_many, decode_rows, fill_combinations, popcounts, row_degrees
from ..logs import get_logger
from ..models.graph import Graph, slot_count, slot_pairs

logger = get_logger("verify.enumeration")

# largest order enumerated without an edge window
UNRESTRICTED_MAX_ORDER = 7
# largest order enumerated at all
WINDOWED_MAX_ORDER = 9
# largest order random sampling supports (codes must fit in int64)
SAMPLED_MAX_ORDER = 11


class EnumerationFilters(BaseModel):
    model_config = ConfigDict(frozen=True)

    min_edges: int = 0
    max_edges: Optional[int] = None
    min_degree: int = 0
    connected: bool = False
    degree_sequences: Optional[Tuple[Tuple[int, ...], ...]] = None

    def window(self, n: int) -> Tuple[int, int]:
        top = slot_count(n)
        hi = top if self.max_edges is None else min(self.max_edges, top)
        return max(0, self.min_edges), hi

    def is_windowed(self, n: int) -> bool:
        lo, hi = self.window(n)
        return lo > 0 or hi < slot_count(n)

    def describe(self, n: int) -> List[str]:
        lo, hi = self.window(n)
        out = []
        if self.is_windowed(n):
            out.append(f"edges in [{lo}, {hi}]")
        if self.min_degree:
            out.append(f"min degree >= {self.min_degree}")
        if self.connected:
            out.append("connected")
        if self.degree_sequences is not None:
            out.append(f"degree sequence in {len(self.degree_sequences)} allowed")
        return out


@dataclass
class GraphBatch:
    n: int
    codes: np.ndarray
    rows: np.ndarray
    degrees: np.ndarray

    def __len__(self) -> int:
        return int(self.codes.shape[0])

    def select(self, mask: np.ndarray) -> "GraphBatch":
        return GraphBatch(self.n, self.codes[mask], self.rows[mask], self.degrees[mask])

    @property
    def edge_counts(self) -> np.ndarray:
        return self.degrees.sum(axis=1) // 2

    def sorted_degrees(self) -> np.ndarray:
        return np.sort(self.degrees, axis=1)

    def graph(self, i: int) -> Graph:
        return Graph(self.n, tuple(int(r) for r in self.rows[i]))


@lru_cache(maxsize=None)
def _slot_arrays(n: int) -> Tuple[np.ndarray, np.ndarray]:
    pairs = slot_pairs(n)
    us = np.array([i for i, _ in pairs], dtype=np.int64)
    vs = np.array([j for _, j in pairs], dtype=np.int64)
    return us, vs


def degree_keys(sorted_degrees: np.ndarray, n: int) -> np.ndarray:
    """Sorted degree rows packed base n into one int64 each."""
    weights = np.array([n ** i for i in range(sorted_degrees.shape[1])], dtype=np.int64)
    return sorted_degrees.astype(np.int64) @ weights


def labeled_count(n: int, filters: Optional[EnumerationFilters] = None) -> int:
    """Codes inside the edge window; an upper bound on graphs visited."""
    lo, hi = (filters or EnumerationFilters()).window(n)
    E = slot_count(n)
    return sum(comb(E, w) for w in range(lo, hi + 1))


def check_feasible(n: int, filters: Optional[EnumerationFilters] = None) -> None:
    filters = filters or EnumerationFilters()
    if n < 1:
        raise GraphOrderError(f"enumeration needs n >= 1, got {n}")
    if n > WINDOWED_MAX_ORDER:
        raise InfeasibleRangeError(
            f"exhaustive enumeration stops at n={WINDOWED_MAX_ORDER}, got n={n}"
        )
    if n > UNRESTRICTED_MAX_ORDER and not filters.is_windowed(n):
        raise InfeasibleRangeError(
            f"n={n} needs an edge-count prefilter before it can be enumerated"
        )


def _finish(codes: np.ndarray, n: int, filters: EnumerationFilters) -> Optional[GraphBatch]:
    if codes.size == 0:
        return None
    us, vs = _slot_arrays(n)
    rows = decode_rows(codes, n, us, vs)
    degrees = row_degrees(rows)
    batch = GraphBatch(n, codes, rows, degrees)

    if filters.min_degree:
        batch = batch.select(batch.degrees.min(axis=1) >= filters.min_degree)
    if filters.connected and len(batch):
        batch = batch.select(connected_many(batch.rows, n))
    if filters.degree_sequences is not None and len(batch):
        allowed = np.array(filters.degree_sequences, dtype=np.int64).reshape(-1, n)
        keep = np.isin(degree_keys(batch.sorted_degrees(), n), degree_keys(allowed, n))
        batch = batch.select(keep)
    return batch if len(batch) else None


def iter_batches(
    n: int,
    filters: Optional[EnumerationFilters] = None,
    shard: int = 0,
    shard_bits: int = 0,
    chunk_size: Optional[int] = None,
) -> Iterator[GraphBatch]:
    """
    Filtered batches of the labeled graphs in one shard.

    Every code in [0, 2^E) lands in exactly one shard, so iterating all
    shards visits each labeled graph exactly once.
    """
    filters = filters or EnumerationFilters()
    check_feasible(n, filters)
    chunk_size = chunk_size or get_settings().chunk_size

    E = slot_count(n)
    shard_bits = min(shard_bits, E)
    if not 0 <= shard < (1 << shard_bits):
        raise ValueError(f"shard {shard} out of range for {shard_bits} shard bits")
    low = E - shard_bits
    prefix = shard << low
    prefix_weight = bin(prefix).count("1")

    lo, hi = filters.window(n)
    lo_w, hi_w = max(0, lo - prefix_weight), min(low, hi - prefix_weight)
    if lo_w > hi_w:
        return

    in_window = sum(comb(low, w) for w in range(lo_w, hi_w + 1))
    if in_window * 4 < (1 << low):
        limit = 1 << low
        buf = np.empty(chunk_size, dtype=np.int64)
        for w in range(lo_w, hi_w + 1):
            x = (1 << w) - 1
            while x < limit:
                count, x = fill_combinations(np.int64(x), np.int64(limit), buf)
                x = int(x)
                batch = _finish(prefix | buf[:count].copy(), n, filters)
                if batch is not None:
                    yield batch
        return

    for start in range(0, 1 << low, chunk_size):
        local = np.arange(start, min(start + chunk_size, 1 << low), dtype=np.int64)
        weights = popcounts(local) + prefix_weight
        codes = prefix | local[(weights >= lo) & (weights <= hi)]
        batch = _finish(codes, n, filters)
        if batch is not None:
            yield batch


def enumerate_graphs(
    n: int,
    filters: Optional[EnumerationFilters] = None,
    visitor: Optional[Callable[[GraphBatch], None]] = None,
    shard: int = 0,
    shard_bits: int = 0,
    chunk_size: Optional[int] = None,
) -> int:
    """Feed every filtered batch of one shard to visitor; returns the graphs visited."""
    visited = 0
    for batch in iter_batches(n, filters, shard, shard_bits, chunk_size):
        visited += len(batch)
        if visitor is not None:
            visitor(batch)
    logger.debug("n=%d shard %d/%d visited %d graphs", n, shard, 1 << shard_bits, visited)
    return visited


def iter_graphs(n: int, filters: Optional[EnumerationFilters] = None) -> Iterator[Graph]:
    for batch in iter_batches(n, filters):
        for i in range(len(batch)):
            yield batch.graph(i)


def sample_batches(
    n: int,
    samples: int,
    filters: Optional[EnumerationFilters] = None,
    seed: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> Iterator[GraphBatch]:
    """
    Uniform random labeled graphs (each edge present with probability 1/2),
    filtered like iter_batches. The same seed reproduces the same draw.
    """
    filters = filters or EnumerationFilters()
    if not 1 <= n <= SAMPLED_MAX_ORDER:
        raise GraphOrderError(f"sampling supports 1 <= n <= {SAMPLED_MAX_ORDER}, got {n}")
    settings = get_settings()
    chunk_size = chunk_size or settings.chunk_size
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    E = slot_count(n)
    lo, hi = filters.window(n)

    remaining = samples
    while remaining > 0:
        size = min(chunk_size, remaining)
        remaining -= size
        codes = rng.integers(0, 1 << E, size=size, dtype=np.int64) if E else np.zeros(size, np.int64)
        weights = popcounts(codes)
        batch = _finish(codes[(weights >= lo) & (weights <= hi)], n, filters)
        if batch is not None:
            yield batch
