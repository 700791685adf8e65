# hamspec/graphs/graph6.py

"""
graph6 codec for graphs on at most 62 vertices (single-byte size header).

The upper triangle is written column by column, six bits per printable
byte offset by 63. Optional '>>graph6<<' headers and the '~' long-size
prefix are rejected.
"""

from __future__ import annotations

from typing import Union

from ..errors import Graph6FormatError
from ..models.graph import MAX_ORDER, Graph, slot_pairs

_OFFSET = 63


def graph6_encode(G: Graph) -> bytes:
    bits = [(G.rows[i] >> j) & 1 for (i, j) in slot_pairs(G.n)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([G.n + _OFFSET])
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k : k + 6]:
            value = (value << 1) | bit
        out.append(value + _OFFSET)
    return bytes(out)


def graph6_decode(data: Union[bytes, str]) -> Graph:
    raw = data.encode("ascii") if isinstance(data, str) else bytes(data)
    raw = raw.strip()
    if raw.startswith(b">>"):
        raise Graph6FormatError("graph6 headers are not supported")
    if not raw:
        raise Graph6FormatError("empty graph6 string")
    if raw[0] == 126:
        raise Graph6FormatError(f"orders above 62 are not supported (limit is {MAX_ORDER})")
    if any(not 63 <= b <= 126 for b in raw):
        raise Graph6FormatError("graph6 bytes must lie in the range 63..126")

    n = raw[0] - _OFFSET
    if not 1 <= n <= MAX_ORDER:
        raise Graph6FormatError(f"graph6 order {n} outside 1..{MAX_ORDER}")
    pairs = slot_pairs(n)
    expected = (len(pairs) + 5) // 6
    body = raw[1:]
    if len(body) != expected:
        raise Graph6FormatError(
            f"graph6 body for n={n} needs {expected} byte(s), got {len(body)}"
        )
    pad = 6 * expected - len(pairs)
    if pad and (body[-1] - _OFFSET) & ((1 << pad) - 1):
        raise Graph6FormatError(f"graph6 padding bits must be zero, got {chr(body[-1])!r}")

    rows = [0] * n
    for s, (i, j) in enumerate(pairs):
        chunk = body[s // 6] - _OFFSET
        if (chunk >> (5 - s % 6)) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def graph6_string(G: Graph) -> str:
    return graph6_encode(G).decode("ascii")


def code_to_graph6(n: int, code: int) -> str:
    return graph6_string(Graph.from_code(n, code))
