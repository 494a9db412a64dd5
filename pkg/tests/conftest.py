from __future__ import annotations

import itertools

import numpy as np
import pytest

from twoeig.graphs import Graph


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        m = np.zeros((n, n), dtype=np.uint8)
        for bit, (i, j) in enumerate(pairs):
            if (mask >> bit) & 1:
                m[i, j] = 1
                m[j, i] = 1
        yield Graph.from_matrix(m)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def disjoint_union(*parts: Graph) -> Graph:
    n = sum(p.n for p in parts)
    edges = []
    offset = 0
    for p in parts:
        edges.extend((i + offset, j + offset) for i, j in p.edges())
        offset += p.n
    return Graph(n, edges)


def assert_valid_p4(g: Graph, quad) -> None:
    a, b, c, d = quad
    assert len({a, b, c, d}) == 4
    assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
    assert not g.has_edge(a, c) and not g.has_edge(a, d) and not g.has_edge(b, d)


def assert_valid_coclique3(g: Graph, triple) -> None:
    a, b, c = triple
    assert len({a, b, c}) == 3
    assert not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c)


@pytest.fixture(scope="session")
def graphs_up_to_5():
    return [g for n in range(6) for g in all_graphs(n)]
