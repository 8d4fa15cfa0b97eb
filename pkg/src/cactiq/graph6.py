"""graph6 encoding and decoding (McKay's format).

Upper-triangular adjacency bits in column-major order, packed into 6-bit
chunks (big-endian within each chunk), each chunk offset by 63 into the
printable ASCII range, preceded by the encoded vertex count.
"""

from __future__ import annotations

from .graph import Graph, from_edges


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63,
                      (n & 63) + 63])
    raise ValueError(f"order {n} too large for graph6")


def _decode_order(data: bytes):
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4:
        raise ValueError("truncated graph6 order prefix")
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, 4


def encode(g: Graph) -> str:
    """graph6 string for g (labeled; not canonicalized)."""
    n = g.order
    out = bytearray(_encode_order(n))
    acc, k = 0, 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc, k = 0, 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return out.decode("ascii")


def decode(text: str) -> Graph:
    """Parse a graph6 string back into a Graph."""
    data = text.strip().encode("ascii")
    n, pos = _decode_order(data)
    if n < 1:
        raise ValueError("graph6 order must be >= 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ValueError(f"graph6 body length {len(body)}, expected {need}")
    bits = []
    for ch in body:
        v = ch - 63
        if not 0 <= v <= 63:
            raise ValueError(f"invalid graph6 byte {ch}")
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return from_edges(n, edges)
