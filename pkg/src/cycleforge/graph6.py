"""graph6 encoding: 6-bit packed upper triangle, printable offset 63."""

from __future__ import annotations

import math
import re
from typing import TYPE_CHECKING, Union

from .errors import MalformedGraph6

if TYPE_CHECKING:
    from .graph import Graph

HEADER = b">>graph6<<"
_MAX_ORDER = 68719476735  # 2**36 - 1


def _encode_order(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= _MAX_ORDER:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise MalformedGraph6(f"order {n} too large for graph6")


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise MalformedGraph6("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 36-bit order")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise MalformedGraph6("truncated 18-bit order")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


_ENCODE = bytes(range(63, 127)) + bytes(192)  # 6-bit value -> printable byte
_DECODE = bytes((c - 63) & 0xFF for c in range(256))
_NONZERO = re.compile(rb"[^\x00]")


def to_graph6(g: "Graph") -> bytes:
    """Encode without header or trailing newline.

    Bit ``k = j*(j-1)/2 + i`` of the upper triangle is set for every edge
    ``i < j``; only those bits are visited.
    """
    n = g.n
    nbits = n * (n - 1) // 2
    body = bytearray((nbits + 5) // 6)
    for j, nbrs in enumerate(g.adjacency):
        base = j * (j - 1) // 2
        for i in nbrs:
            if i >= j:
                break
            k = base + i
            body[k // 6] |= 32 >> (k % 6)
    return _encode_order(n) + bytes(body).translate(_ENCODE)


def from_graph6(data: Union[bytes, str]) -> "Graph":
    from .graph import Graph

    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if re.search(rb"[^\x3f-\x7e]", data):
        raise MalformedGraph6("byte outside printable graph6 range 63..126")
    n, pos = _decode_order(data)
    body = data[pos:].translate(_DECODE)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"body has {len(body)} bytes, order {n} needs {(nbits + 5) // 6}"
        )
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    adj: list[list[int]] = [[] for _ in range(n)]
    for hit in _NONZERO.finditer(body):
        pos6 = hit.start()
        val = body[pos6]
        for b in range(6):
            if val & (32 >> b):
                k = 6 * pos6 + b
                j = (1 + math.isqrt(1 + 8 * k)) // 2
                i = k - j * (j - 1) // 2
                adj[i].append(j)
                adj[j].append(i)
    for nbrs in adj:
        nbrs.sort()
    return Graph(n, adj)
