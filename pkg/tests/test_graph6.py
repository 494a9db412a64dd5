from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twoeig.graphs import Graph, GraphFormatError, encode_graph6, parse_graph6

from conftest import all_graphs, complete_graph


def reference_encode(g: Graph) -> str:
    """Independent encoder: textual bit string, chunked by slicing."""
    bitstring = "".join(
        "1" if g.has_edge(i, j) else "0" for j in range(1, g.n) for i in range(j)
    )
    bitstring += "0" * (-len(bitstring) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bitstring), 6):
        chars.append(chr(int(bitstring[k : k + 6], 2) + 63))
    return "".join(chars)


def test_known_strings():
    assert parse_graph6("@") == Graph(1)
    assert parse_graph6("?") == Graph(0)
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6("A_") == Graph(2, [(0, 1)])
    assert parse_graph6("A?") == Graph(2)
    # 'Bw' carries bits 111000: K_3 with all-zero padding, hence accepted
    assert parse_graph6("Bw") == complete_graph(3)


def test_encode_known():
    assert encode_graph6(Graph(1)) == "@"
    assert encode_graph6(Graph(0)) == "?"
    assert encode_graph6(complete_graph(4)) == "C~"
    assert encode_graph6(complete_graph(3)) == "Bw"


@pytest.mark.parametrize(
    "bad",
    [
        "",
        " ",
        "B",  # body too short for n=3
        "Bww",  # body too long
        "Bx",  # 111001: nonzero trailing padding bit
        "~??",  # multi-byte size header
        "B\x1c",  # byte below the printable range
        "Bé",  # non-ASCII
    ],
)
def test_parse_rejects(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_encode_rejects_large():
    with pytest.raises(ValueError):
        encode_graph6(Graph(63))


def test_roundtrip_exhaustive_small():
    for n in range(7):
        for g in all_graphs(n):
            s = encode_graph6(g)
            assert s == reference_encode(g)
            assert parse_graph6(s) == g


def test_parse_strips_newline():
    assert parse_graph6("C~\n") == complete_graph(4)


@st.composite
def random_graphs(draw):
    n = draw(st.integers(min_value=0, max_value=25))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picked = [p for p in pairs if draw(st.booleans())]
    return Graph(n, picked)


@settings(max_examples=60, deadline=None)
@given(random_graphs())
def test_roundtrip_random(g):
    assert parse_graph6(encode_graph6(g)) == g
