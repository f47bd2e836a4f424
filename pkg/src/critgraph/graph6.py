"""graph6 codec (header-less, printable-byte encoding of simple graphs).

The order n is encoded as the single byte n+63 for n <= 62 and as
0x7e followed by three bytes holding an 18-bit big-endian value for
63 <= n <= 64. The upper-triangle adjacency bits follow in column order
(0,1),(0,2),(1,2),(0,3),... packed into 6-bit groups (zero padded), each
group offset by 63.
"""

from __future__ import annotations

from .graphs import Graph, MAX_VERTICES


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def encode(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    out = bytearray(head)
    group = 0
    nbits = 0
    for col in range(1, n):
        colmask = g.adj[col]
        for row in range(col):
            group = (group << 1) | (colmask >> row & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out)


def decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] == 126:
        if len(data) < 4:
            raise Graph6Error("truncated extended order field")
        vals = [b - 63 for b in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise Graph6Error("byte outside graph6 range in order field")
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        body = data[4:]
    else:
        n = data[0] - 63
        if n < 0:
            raise Graph6Error("byte outside graph6 range in order field")
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds the {MAX_VERTICES}-vertex capacity")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    bitstream = 0
    for b in body:
        v = b - 63
        if v < 0 or v > 63:
            raise Graph6Error("byte outside graph6 range in body")
        bitstream = (bitstream << 6) | v
    total = 6 * len(body)
    adj = [0] * n
    pos = 0
    for col in range(1, n):
        for row in range(col):
            if bitstream >> (total - 1 - pos) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            pos += 1
    return Graph(n, adj)
