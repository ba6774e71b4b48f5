import io
import random

import networkx as nx
import pytest

from conftest import to_nx
from gammarho.formats import (
    FormatError,
    decode_any,
    decode_graph6,
    decode_sparse6,
    encode_graph6,
    iter_graph6_stream,
    read_edgelist,
    write_edgelist,
    write_graph6_stream,
)
from gammarho.graphs import Graph


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# canonical strings produced independently by networkx's encoder
KNOWN_GRAPH6 = [
    (path(4), "Ch"),
    (cycle(5), "Dhc"),
    (Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)]), "C~"),
    (Graph.from_edges(6, [(a, 3 + b) for a in range(3) for b in range(3)]), "EFz_"),
]


def test_known_graph6_strings():
    for g, expected in KNOWN_GRAPH6:
        assert encode_graph6(g) == expected
        assert decode_graph6(expected) == g


def test_header_handling():
    g = path(4)
    assert encode_graph6(g, header=True) == ">>graph6<<Ch"
    assert decode_graph6(">>graph6<<Ch") == g


def test_roundtrip_against_networkx():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(1, 30)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.3]
        g = Graph.from_edges(n, edges)
        line = encode_graph6(g)
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert line == ref
        assert decode_graph6(line) == g


def test_large_n_encoding():
    # crosses the 63-vertex threshold into the 4-byte length form
    g = path(80)
    assert decode_graph6(encode_graph6(g)) == g


def test_sparse6_decoding_against_networkx():
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randrange(2, 25)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.2]
        g = Graph.from_edges(n, edges)
        line = nx.to_sparse6_bytes(to_nx(g), header=False).decode().strip()
        assert decode_sparse6(line) == g
        assert decode_any(line) == g


def test_decode_any_dispatch():
    g = cycle(5)
    assert decode_any(encode_graph6(g)) == g
    s6 = nx.to_sparse6_bytes(to_nx(g), header=False).decode().strip()
    assert s6.startswith(":")
    assert decode_any(s6) == g


def test_bad_graph6_rejected():
    with pytest.raises(FormatError):
        decode_graph6("")
    with pytest.raises(FormatError):
        decode_graph6("C")  # truncated bit field
    with pytest.raises(FormatError):
        decode_graph6("C" + chr(30))  # byte below printable range
    with pytest.raises(FormatError):
        decode_graph6(":Ch")  # sparse6 fed to the graph6 decoder


def test_edgelist_roundtrip():
    g = cycle(6)
    text = write_edgelist(g)
    back, orderings = read_edgelist(text)
    assert back == g and orderings is None


def test_edgelist_with_orderings():
    g = Graph.from_edges(4, [(0, 2), (0, 3), (1, 3)])
    text = write_edgelist(g, orderings=((0, 1), (2, 3)))
    back, orderings = read_edgelist(text)
    assert back == g
    assert orderings == ((0, 1), (2, 3))


def test_graph6_stream_sidecars():
    lines = [
        "# a comment",
        encode_graph6(path(4)),
        encode_graph6(cycle(4)),
        "#xorder 0 2",
        "#yorder 1 3",
        "",
        encode_graph6(path(2)),
    ]
    out = list(iter_graph6_stream(lines))
    assert len(out) == 3
    assert out[0] == (path(4), None)
    assert out[1] == (cycle(4), ((0, 2), (1, 3)))
    assert out[2] == (path(2), None)


def test_write_graph6_stream_roundtrip():
    items = [
        (path(5), None),
        (cycle(4), ((0, 2), (1, 3))),
    ]
    sink = io.StringIO()
    write_graph6_stream(items, sink)
    back = list(iter_graph6_stream(sink.getvalue().splitlines()))
    assert back == [(path(5), None), (cycle(4), ((0, 2), (1, 3)))]


def test_stream_ignores_dangling_sidecar():
    # sidecar with no preceding graph is dropped, not attached to anything
    assert list(iter_graph6_stream(["#xorder 0 1"])) == []
    out = list(iter_graph6_stream(["#yorder 9", encode_graph6(path(3))]))
    assert out == [(path(3), None)]
