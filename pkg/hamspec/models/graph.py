# hamspec/models/graph.py

"""
Core graph value types.

- Graph: simple undirected graph on 1..32 vertices, one bit-word per row
- DegreeSequence: non-decreasing degree list
- Edge-slot helpers shared by graph6 and the enumeration engine

Slot s of an edge code is the s-th pair (i, j), i < j, in graph6 order
(column-major over the upper triangle).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..errors import GraphOrderError, UnsortedSequenceError

MAX_ORDER = 32


@lru_cache(maxsize=None)
def slot_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


def slot_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True, slots=True)
class DegreeSequence:
    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.degrees)
        for a, b in zip(self.degrees, self.degrees[1:]):
            if a > b:
                raise UnsortedSequenceError(
                    f"degree sequence must be non-decreasing: {self.degrees}"
                )
        if n and (self.degrees[0] < 0 or self.degrees[-1] > n - 1):
            raise UnsortedSequenceError(
                f"degrees must lie in [0, {n - 1}]: {self.degrees}"
            )

    @classmethod
    def from_unsorted(cls, values: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(sorted(int(v) for v in values)))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def __getitem__(self, index: int) -> int:
        return self.degrees[index]

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Immutable simple graph.

    rows[v] has bit u set iff u and v are adjacent. Construction validates
    symmetry and the empty diagonal, so every Graph in circulation is simple.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphOrderError(f"graph order must be within 1..{MAX_ORDER}, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphOrderError("one adjacency row per vertex is required")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices beyond n={self.n}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            u_bits = row
            while u_bits:
                low = u_bits & -u_bits
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
                u_bits ^= low

    # ---------- constructors ----------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_code(cls, n: int, code: int) -> "Graph":
        """Inverse of to_code(): bit s of code is slot s."""
        rows = [0] * n
        for s, (i, j) in enumerate(slot_pairs(n)):
            if (code >> s) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls(n, tuple(rows))

    # ---------- basic invariants ----------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence.from_unsorted(self.degrees())

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        row = self.rows[v]
        return [u for u in range(self.n) if (row >> u) & 1]

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for (i, j) in slot_pairs(self.n) if (self.rows[i] >> j) & 1]

    def to_code(self) -> int:
        code = 0
        for s, (i, j) in enumerate(slot_pairs(self.n)):
            if (self.rows[i] >> j) & 1:
                code |= 1 << s
        return code

    # ---------- derived graphs ----------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex v of self becomes vertex perm[v] of the result."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            for u in range(self.n):
                if (row >> u) & 1:
                    rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in self.neighbors(v):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    # ---------- connectivity ----------

    def components(self) -> List[List[int]]:
        seen = 0
        parts: List[List[int]] = []
        for start in range(self.n):
            if (seen >> start) & 1:
                continue
            comp = 1 << start
            frontier = comp
            while frontier:
                low = frontier & -frontier
                v = low.bit_length() - 1
                frontier ^= low
                fresh = self.rows[v] & ~comp
                comp |= fresh
                frontier |= fresh
            seen |= comp
            parts.append([u for u in range(self.n) if (comp >> u) & 1])
        return parts

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_complete(self) -> bool:
        return self.m == slot_count(self.n)

    # ---------- matrices ----------

    def adjacency_matrix(self) -> np.ndarray:
        shifts = np.arange(self.n, dtype=np.int64)
        rows = np.array(self.rows, dtype=np.int64)
        return ((rows[:, None] >> shifts[None, :]) & 1).astype(np.float64)

    def integer_adjacency(self) -> List[List[int]]:
        return [[(row >> u) & 1 for u in range(self.n)] for row in self.rows]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
