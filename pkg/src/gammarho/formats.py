"""graph6 / sparse6 codecs and the plain edge-list format.

The graph6 encoding is bit-exact: n is written as 1, 4 or 8 bytes offset by
63, then the upper triangle of the adjacency matrix in column-major order,
packed 6 bits per byte, each byte offset by 63.  Decoding validates byte
range, payload length and that the padding bits are zero, so malformed
lines fail loudly instead of producing a silently wrong graph.

sparse6 is accepted on input only (graph databases ship large sparse
graphs that way); we never emit it.

The edge-list format is line oriented: a header line "n m", then one
"u v" line per edge.  Biconvex inputs carry their two convex orderings as
optional "xorder ..." and "yorder ..." lines between the header and the
edges.  Blank lines and "#" comments are ignored.
"""

from __future__ import annotations

from typing import Iterable, Sequence, TextIO

from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"


class FormatError(ValueError):
    """Malformed graph6 / sparse6 / edge-list input."""


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise FormatError("n must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise FormatError(f"n={n} exceeds the supported graph6 size")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed).  Accepts the 1, 4 and 8 byte forms."""
    if not data:
        raise FormatError("empty graph6 line")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated 8-byte size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated 4-byte size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def _check_bytes(data: bytes) -> None:
    for b in data:
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b} outside the printable graph6 range")


def encode_graph6(g: Graph, header: bool = False) -> str:
    """Canonical graph6 line for g (no trailing newline)."""
    if g.n > 1 << 18:
        raise FormatError("encoder capped at n <= 2^18")
    out = bytearray(_encode_n(g.n))
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.closed_masks[j] & ~(1 << j)
        for i in range(j):
            bits = (bits << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return GRAPH6_HEADER + text if header else text


def decode_graph6(line: str) -> Graph:
    """Parse one graph6 line (optional ">>graph6<<" prefix allowed)."""
    line = line.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise FormatError("empty graph6 line")
    data = line.encode("ascii", errors="strict") if line.isascii() else None
    if data is None:
        raise FormatError("graph6 line contains non-ASCII bytes")
    _check_bytes(data)
    n, used = _decode_n(data)
    payload = data[used:]
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    if len(payload) != expected:
        raise FormatError(
            f"graph6 payload is {len(payload)} bytes, expected {expected} for n={n}"
        )
    edges = []
    k = 0
    i, j = 0, 1
    for b in payload:
        val = b - 63
        for shift in range(5, -1, -1):
            if k >= npairs:
                if (val >> shift) & 1:
                    raise FormatError("nonzero padding bits in graph6 line")
                continue
            if (val >> shift) & 1:
                edges.append((i, j))
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_edges(n, edges)


def decode_sparse6(line: str) -> Graph:
    """Parse one sparse6 line.  Loops and parallel edges are rejected
    because everything downstream assumes simple graphs."""
    line = line.strip()
    if line.startswith(SPARSE6_HEADER):
        line = line[len(SPARSE6_HEADER):]
    if not line.startswith(":"):
        raise FormatError("sparse6 line must start with ':'")
    data = line[1:].encode("ascii")
    _check_bytes(data)
    n, used = _decode_n(data)
    payload = data[used:]
    if n == 0:
        return Graph(0, [])
    k = max(1, (n - 1).bit_length())
    bits = []
    for b in payload:
        val = b - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    edges = set()
    v = 0
    pos = 0
    while pos + 1 + k <= len(bits):
        b = bits[pos]
        pos += 1
        x = 0
        for _ in range(k):
            x = (x << 1) | bits[pos]
            pos += 1
        if b:
            v += 1
        if v >= n or x >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise FormatError(f"sparse6 loop at vertex {v}")
            if (x, v) in edges:
                raise FormatError(f"sparse6 parallel edge {x}-{v}")
            edges.add((x, v))
    return Graph.from_edges(n, edges)


def decode_any(line: str) -> Graph:
    """Dispatch on the sparse6 ':' marker, else treat as graph6."""
    stripped = line.strip()
    if stripped.startswith(SPARSE6_HEADER) or stripped.startswith(":"):
        return decode_sparse6(stripped)
    return decode_graph6(stripped)


def write_edgelist(
    g: Graph,
    orderings: tuple[Sequence[int], Sequence[int]] | None = None,
) -> str:
    lines = [f"{g.n} {g.m}"]
    if orderings is not None:
        ox, oy = orderings
        lines.append("xorder " + " ".join(str(v) for v in ox))
        lines.append("yorder " + " ".join(str(v) for v in oy))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edgelist(
    text: str | Iterable[str],
) -> tuple[Graph, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Parse the edge-list format.  Returns (graph, orderings-or-None)."""
    if isinstance(text, str):
        raw = text.splitlines()
    else:
        raw = list(text)
    lines = [ln.strip() for ln in raw]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"bad header line {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"bad header line {lines[0]!r}") from exc
    xorder: tuple[int, ...] | None = None
    yorder: tuple[int, ...] | None = None
    body_start = 1
    for ln in lines[1:3]:
        tag = ln.split(None, 1)[0]
        if tag == "xorder":
            xorder = tuple(int(t) for t in ln.split()[1:])
            body_start += 1
        elif tag == "yorder":
            yorder = tuple(int(t) for t in ln.split()[1:])
            body_start += 1
    if (xorder is None) != (yorder is None):
        raise FormatError("xorder and yorder lines must appear together")
    edges = []
    seen = set()
    for ln in lines[body_start:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise FormatError(f"loop {u}-{v}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {u}-{v}")
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header claims {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges)
    orderings = (xorder, yorder) if xorder is not None and yorder is not None else None
    return g, orderings


def iter_graph6_stream(
    lines: Iterable[str],
) -> Iterable[tuple[Graph, tuple[tuple[int, ...], tuple[int, ...]] | None]]:
    """Yield (graph, orderings) from a graph6 stream.

    '#xorder' / '#yorder' sidecar lines attach to the preceding graph, which
    is how generated biconvex corpora travel in an otherwise standard
    graph6 file.
    """
    current: Graph | None = None
    ox: tuple[int, ...] | None = None
    oy: tuple[int, ...] | None = None

    def flush():
        nonlocal current, ox, oy
        if current is not None:
            orderings = (ox, oy) if ox is not None and oy is not None else None
            result = (current, orderings)
            current, ox, oy = None, None, None
            return result
        return None

    for ln in lines:
        stripped = ln.strip()
        if not stripped:
            continue
        if stripped.startswith("#xorder"):
            ox = tuple(int(t) for t in stripped.split()[1:])
            continue
        if stripped.startswith("#yorder"):
            oy = tuple(int(t) for t in stripped.split()[1:])
            continue
        if stripped.startswith("#"):
            continue
        out = flush()
        if out is not None:
            yield out
        current = decode_any(stripped)
    out = flush()
    if out is not None:
        yield out


def write_graph6_stream(
    items: Iterable[tuple[Graph, tuple[Sequence[int], Sequence[int]] | None]],
    sink: TextIO,
) -> None:
    for g, orderings in items:
        sink.write(encode_graph6(g) + "\n")
        if orderings is not None:
            ox, oy = orderings
            sink.write("#xorder " + " ".join(str(v) for v in ox) + "\n")
            sink.write("#yorder " + " ".join(str(v) for v in oy) + "\n")
