# hamspec/hamilton/kernels.py

"""
numba kernels for the subset dynamic programs.

Graphs are arrays of adjacency bit-rows (int64). dp[mask] is the bitmask of
vertices at which a path covering exactly `mask` can end:

- path:   paths may start anywhere
- cycle:  paths start at vertex 0; a cycle closes when an end is adjacent to 0
- longest cycle: paths start at the lowest vertex of the mask and only visit
  higher vertices, so each cycle is counted from its minimum vertex
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def is_connected_rows(rows, n):
    if n <= 1:
        return True
    comp = 1
    frontier = 1
    while frontier:
        v = 0
        while not (frontier >> v) & 1:
            v += 1
        frontier &= ~(1 << v)
        fresh = rows[v] & ~comp
        comp |= fresh
        frontier |= fresh
    return comp == (1 << n) - 1


@njit(cache=True)
def fill_path_table(rows, n, dp):
    size = 1 << n
    for mask in range(size):
        dp[mask] = 0
    for v in range(n):
        dp[1 << v] = 1 << v
    for mask in range(1, size):
        ends = dp[mask]
        if ends == 0:
            continue
        for v in range(n):
            if (ends >> v) & 1:
                nxt = rows[v] & ~mask
                while nxt:
                    low = nxt & -nxt
                    dp[mask | low] |= low
                    nxt ^= low


@njit(cache=True)
def fill_cycle_table(rows, n, dp):
    size = 1 << n
    for mask in range(size):
        dp[mask] = 0
    dp[1] = 1
    for mask in range(1, size, 2):
        ends = dp[mask]
        if ends == 0:
            continue
        for v in range(n):
            if (ends >> v) & 1:
                nxt = rows[v] & ~mask
                while nxt:
                    low = nxt & -nxt
                    dp[mask | low] |= low
                    nxt ^= low


@njit(cache=True)
def longest_cycle(rows, n, dp):
    size = 1 << n
    for mask in range(size):
        dp[mask] = 0
    for v in range(n):
        dp[1 << v] = 1 << v
    best = 0
    for mask in range(1, size):
        ends = dp[mask]
        if ends == 0:
            continue
        low_mask = mask & -mask
        s = 0
        while not (low_mask >> s) & 1:
            s += 1
        size_mask = popcount(mask)
        if size_mask >= 3 and (ends & rows[s]) and size_mask > best:
            best = size_mask
        above = ~((low_mask << 1) - 1)
        for v in range(n):
            if (ends >> v) & 1:
                nxt = rows[v] & ~mask & above
                while nxt:
                    low = nxt & -nxt
                    dp[mask | low] |= low
                    nxt ^= low
    return best


@njit(cache=True)
def traceable_many(rows2d, n):
    count = rows2d.shape[0]
    out = np.zeros(count, dtype=np.bool_)
    dp = np.zeros(1 << n, dtype=np.int64)
    full = (1 << n) - 1
    for k in range(count):
        rows = rows2d[k]
        if not is_connected_rows(rows, n):
            continue
        fill_path_table(rows, n, dp)
        out[k] = dp[full] != 0
    return out


@njit(cache=True)
def hamiltonian_many(rows2d, n):
    count = rows2d.shape[0]
    out = np.zeros(count, dtype=np.bool_)
    if n < 3:
        return out
    dp = np.zeros(1 << n, dtype=np.int64)
    full = (1 << n) - 1
    for k in range(count):
        rows = rows2d[k]
        if not is_connected_rows(rows, n):
            continue
        fill_cycle_table(rows, n, dp)
        out[k] = (dp[full] & rows[0]) != 0
    return out


@njit(cache=True)
def circumference_many(rows2d, n):
    count = rows2d.shape[0]
    out = np.zeros(count, dtype=np.int64)
    dp = np.zeros(1 << n, dtype=np.int64)
    for k in range(count):
        out[k] = longest_cycle(rows2d[k], n, dp)
    return out


# ---------- enumeration helpers ----------

@njit(cache=True)
def decode_rows(codes, n, us, vs):
    count = codes.shape[0]
    slots = us.shape[0]
    rows = np.zeros((count, n), dtype=np.int64)
    one = np.int64(1)
    for k in range(count):
        c = codes[k]
        for s in range(slots):
            if (c >> s) & 1:
                rows[k, us[s]] |= one << vs[s]
                rows[k, vs[s]] |= one << us[s]
    return rows


@njit(cache=True)
def row_degrees(rows2d):
    count, n = rows2d.shape
    out = np.zeros((count, n), dtype=np.int64)
    for k in range(count):
        for v in range(n):
            out[k, v] = popcount(rows2d[k, v])
    return out


@njit(cache=True)
def popcounts(codes):
    out = np.zeros(codes.shape[0], dtype=np.int64)
    for k in range(codes.shape[0]):
        out[k] = popcount(codes[k])
    return out


@njit(cache=True)
def connected_many(rows2d, n):
    count = rows2d.shape[0]
    out = np.zeros(count, dtype=np.bool_)
    for k in range(count):
        out[k] = is_connected_rows(rows2d[k], n)
    return out


@njit(cache=True)
def fill_combinations(x, limit, out):
    """
    Write successive integers with the same popcount as x (Gosper's hack),
    starting at x and staying below limit. Returns (written, next x).
    """
    count = 0
    size = out.shape[0]
    while count < size and x < limit:
        out[count] = x
        count += 1
        if x == 0:
            x = limit
            break
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
    return count, x
