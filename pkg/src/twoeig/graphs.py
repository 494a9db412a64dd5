"""Graph representation, graph6/edge-list I/O, and elementary graph algorithms.

Vertices are 0-based contiguous integers.  Graphs are immutable; every
operation returns fresh values, so everything here is safe to share
between threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels


class GraphFormatError(ValueError):
    """Malformed textual graph input (graph6 or edge list)."""


class Graph:
    """Simple undirected graph with an immutable uint8 adjacency matrix."""

    __slots__ = ("n", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        m = np.zeros((n, n), dtype=np.uint8)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"vertex index out of range: ({i}, {j}) with n={n}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            m[i, j] = 1
            m[j, i] = 1
        m.setflags(write=False)
        self.n = n
        self._m = m

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        m = np.ascontiguousarray(matrix, dtype=np.uint8)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if m.size:
            if np.diagonal(m).any():
                raise ValueError("adjacency matrix has a nonzero diagonal entry")
            if not np.array_equal(m, m.T):
                raise ValueError("adjacency matrix is not symmetric")
            if m.max() > 1:
                raise ValueError("adjacency entries must be 0 or 1")
        g = cls.__new__(cls)
        m.setflags(write=False)
        g.n = int(m.shape[0])
        g._m = m
        return g

    def matrix(self) -> np.ndarray:
        """Read-only n-by-n uint8 adjacency matrix."""
        return self._m

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._m[i, j])

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in np.flatnonzero(self._m[i]))

    def degree(self, i: int) -> int:
        return int(self._m[i].sum())

    def edges(self) -> Iterator[tuple[int, int]]:
        ii, jj = np.nonzero(np.triu(self._m, 1))
        return iter([(int(i), int(j)) for i, j in zip(ii, jj)])

    @property
    def num_edges(self) -> int:
        return int(self._m.sum()) // 2

    def is_empty(self) -> bool:
        return not self._m.any()

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def complement(self) -> "Graph":
        if self.n == 0:
            return Graph(0)
        m = (1 - self._m).astype(np.uint8)
        np.fill_diagonal(m, 0)
        return Graph.from_matrix(m)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; local vertex k corresponds to ``vertices[k]``."""
        idx = np.asarray(vertices, dtype=np.intp)
        return Graph.from_matrix(self._m[np.ix_(idx, idx)])

    def permuted(self, perm: Sequence[int]) -> "Graph":
        """Relabel: old vertex i becomes ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        inv = np.empty(self.n, dtype=np.intp)
        inv[np.asarray(perm, dtype=np.intp)] = np.arange(self.n)
        return Graph.from_matrix(self._m[np.ix_(inv, inv)])

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least element."""
        seen = [False] * self.n
        out: list[list[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            queue = [start]
            while queue:
                u = queue.pop()
                for v in np.flatnonzero(self._m[u]):
                    v = int(v)
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self._m, other._m)
        )

    def __hash__(self) -> int:
        return hash((self.n, self._m.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())!r})"


def parse_graph6(text: str) -> Graph:
    """Decode a single-line graph6 string (n < 63).

    Rejects multi-byte size headers, out-of-range bytes, bad body length,
    and nonzero trailing padding bits.
    """
    s = text.strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("graph6 string contains non-ASCII bytes") from exc
    for b in data:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside graph6 range 63..126")
    if data[0] == 126:
        raise GraphFormatError("multi-byte size header (n >= 63) not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise GraphFormatError(
            f"graph6 body has {len(data) - 1} bytes, expected {nbytes} for n={n}"
        )
    bits: list[int] = []
    for b in data[1:]:
        v = b - 63
        bits.extend((v >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero trailing padding bits")
    m = np.zeros((n, n), dtype=np.uint8)
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                m[i, j] = 1
                m[j, i] = 1
            pos += 1
    return Graph.from_matrix(m)


def encode_graph6(g: Graph) -> str:
    """Encode a graph with n < 63 in canonical graph6 form."""
    n = g.n
    if n >= 63:
        raise ValueError("graph6 encoding supported only for n < 63")
    m = g.matrix()
    bits = [int(m[i, j]) for j in range(1, n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for bit in bits[k : k + 6]:
            v = (v << 1) | bit
        out.append(chr(v + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse "n  i j  i j ..." whitespace-separated edge-list text."""
    tokens = text.split()
    if not tokens:
        raise GraphFormatError("empty edge-list input")
    try:
        n = int(tokens[0])
    except ValueError as exc:
        raise GraphFormatError(f"vertex count is not an integer: {tokens[0]!r}") from exc
    if n < 0:
        raise GraphFormatError("vertex count must be non-negative")
    rest = tokens[1:]
    if len(rest) % 2:
        raise GraphFormatError("odd number of endpoint tokens")
    edges = []
    for a, b in zip(rest[::2], rest[1::2]):
        try:
            i, j = int(a), int(b)
        except ValueError as exc:
            raise GraphFormatError(f"non-integer endpoint: {a!r} {b!r}") from exc
        if not (0 <= i < n and 0 <= j < n):
            raise GraphFormatError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise GraphFormatError(f"self-loop at vertex {i}")
        edges.append((i, j))
    return Graph(n, edges)


@dataclass(frozen=True)
class PathCertificate:
    """Distance and shortest-path count between one vertex pair.

    ``distance`` is None (and the count 0) for a disconnected pair.
    """

    endpoints: tuple[int, int]
    distance: int | None
    shortest_path_count: int

    @property
    def reachable(self) -> bool:
        return self.distance is not None

    @property
    def unique(self) -> bool:
        return self.shortest_path_count == 1


def count_shortest_paths(g: Graph, x: int, y: int) -> PathCertificate:
    """Exact BFS distance and number of distinct shortest x-y paths."""
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError("endpoint out of range")
    if x == y:
        raise ValueError("endpoints must be distinct")
    m = g.matrix()
    dist = [-1] * g.n
    sigma = [0] * g.n  # exact counts: Python ints never overflow
    dist[x] = 0
    sigma[x] = 1
    queue = [x]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        if dist[y] >= 0 and dist[u] >= dist[y]:
            break
        for v in np.flatnonzero(m[u]):
            v = int(v)
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                sigma[v] = sigma[u]
                queue.append(v)
            elif dist[v] == dist[u] + 1:
                sigma[v] += sigma[u]
    if dist[y] < 0:
        return PathCertificate((x, y), None, 0)
    return PathCertificate((x, y), dist[y], sigma[y])


def unique_path_bound(g: Graph) -> int:
    """Distinct-eigenvalue lower bound from unique shortest paths.

    Equals max(d(x, y) + 1) over vertex pairs joined by a unique shortest
    path, floored at 1 for any graph with n >= 1; 0 when n = 0.  The value
    is only a bound, with no claim of tightness.
    """
    if g.n == 0:
        return 0
    best = 1
    m = g.matrix()
    for x in range(g.n):
        dist, uniq = _kernels.bfs_unique_distances(m, x)
        mask = (dist > 0) & (uniq != 0)
        if mask.any():
            best = max(best, int(dist[mask].max()) + 1)
    return best


def has_coclique_3(g: Graph) -> tuple[int, int, int] | None:
    """Witness triple of pairwise non-adjacent vertices, or None."""
    return _kernels.coclique3(g.matrix())


def find_induced_p4(g: Graph) -> tuple[int, int, int, int] | None:
    """Ordered (a, b, c, d) with exactly the edges ab, bc, cd, or None.

    Exhaustive scan; this is the oracle against which the cotree-based
    recognizer is validated.
    """
    return _kernels.induced_p4(g.matrix())
