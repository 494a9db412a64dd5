"""Cotrees and the two-cliques-per-union block decomposition.

A cotree decomposes a graph by alternating disjoint unions and joins.
A graph has one iff it contains no induced 3-edge path.  Connected graphs
whose cotree has only cliques below a single layer of unions decompose as

    (K_a1 u K_b1) * (K_a2 u K_b2) * ... * (K_ak u K_bk) * K_c

("u" disjoint union, "*" join); that shape is recorded by BlockForm.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class Cotree:
    """Node of a cotree: a leaf (one vertex), or a union/join of >= 2 children.

    Internal nodes alternate: a union has no union child, a join no join
    child.  Leaves carry the graph's vertex labels.
    """

    kind: str  # "leaf" | "union" | "join"
    vertex: int | None = None
    children: tuple["Cotree", ...] = ()

    def __post_init__(self):
        if self.kind == "leaf":
            if self.vertex is None or self.children:
                raise ValueError("leaf requires a vertex and no children")
        elif self.kind in ("union", "join"):
            if self.vertex is not None:
                raise ValueError("internal node carries no vertex")
            if len(self.children) < 2:
                raise ValueError(f"{self.kind} node needs at least two children")
            if any(ch.kind == self.kind for ch in self.children):
                raise ValueError(f"{self.kind} node has a {self.kind} child")
        else:
            raise ValueError(f"unknown cotree node kind: {self.kind!r}")

    @staticmethod
    def leaf(v: int) -> "Cotree":
        return Cotree("leaf", vertex=v)

    @staticmethod
    def union_of(children) -> "Cotree":
        return Cotree("union", children=tuple(children))

    @staticmethod
    def join_of(children) -> "Cotree":
        return Cotree("join", children=tuple(children))

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]  # type: ignore[list-item]
        out: list[int] = []
        for ch in self.children:
            out.extend(ch.leaves())
        return out

    @property
    def size(self) -> int:
        return 1 if self.kind == "leaf" else sum(ch.size for ch in self.children)

    def to_json(self) -> dict:
        if self.kind == "leaf":
            return {"kind": "leaf", "vertex": self.vertex}
        return {"kind": self.kind, "children": [ch.to_json() for ch in self.children]}

    @staticmethod
    def from_json(obj: dict) -> "Cotree":
        kind = obj.get("kind")
        if kind == "leaf":
            return Cotree.leaf(int(obj["vertex"]))
        return Cotree(kind, children=tuple(Cotree.from_json(c) for c in obj["children"]))


def graph_of_cotree(tree: Cotree | None) -> Graph:
    """Rebuild the graph a cotree describes (leaves must be 0..n-1)."""
    if tree is None:
        return Graph(0)
    labels = sorted(tree.leaves())
    n = len(labels)
    if labels != list(range(n)):
        raise ValueError("cotree leaves must be exactly 0..n-1")
    edges: list[tuple[int, int]] = []

    def walk(node: Cotree) -> list[int]:
        if node.kind == "leaf":
            return [node.vertex]  # type: ignore[list-item]
        groups = [walk(ch) for ch in node.children]
        if node.kind == "join":
            for gi in range(len(groups)):
                for gj in range(gi + 1, len(groups)):
                    edges.extend((x, y) for x in groups[gi] for y in groups[gj])
        return [v for grp in groups for v in grp]

    walk(tree)
    return Graph(n, edges)


def _components_within(m: np.ndarray, verts: list[int], complemented: bool) -> list[list[int]]:
    """Components of the subgraph induced on ``verts`` (or of its complement)."""
    vset = set(verts)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in verts:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            row = m[u]
            for v in vset:
                if v in seen:
                    continue
                adjacent = bool(row[v])
                if complemented:
                    adjacent = not adjacent and v != u
                if adjacent:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def build_cotree(g: Graph) -> Cotree | tuple[int, int, int, int]:
    """Cotree of ``g``, or an induced-P4 witness when none exists.

    Recursion: a disconnected piece becomes a union over its components, a
    co-disconnected piece a join over its complement components; a piece
    that is neither (with more than one vertex) contains an induced P4,
    which is returned in the graph's own labels.
    """
    if g.n < 1:
        raise ValueError("cotree requires at least one vertex")
    m = g.matrix()

    def rec(verts: list[int]) -> Cotree | tuple[int, int, int, int]:
        if len(verts) == 1:
            return Cotree.leaf(verts[0])
        comps = _components_within(m, verts, complemented=False)
        if len(comps) > 1:
            kind = "union"
        else:
            comps = _components_within(m, verts, complemented=True)
            if len(comps) > 1:
                kind = "join"
            else:
                p4 = g.induced(verts).matrix()
                from . import _kernels

                hit = _kernels.induced_p4(p4)
                assert hit is not None, "connected, co-connected piece must contain a P4"
                return tuple(verts[i] for i in hit)  # type: ignore[return-value]
        children = []
        for comp in comps:
            sub = rec(comp)
            if isinstance(sub, tuple):
                return sub
            children.append(sub)
        return Cotree(kind, children=tuple(children))

    return rec(list(range(g.n)))


@dataclass(frozen=True)
class BlockForm:
    """Canonical shape (K_a1 u K_b1) * ... * (K_ak u K_bk) * K_c.

    Every block has 1 <= a_i <= b_i; join factors that are plain cliques
    are absorbed into ``clique_size``.  Blocks are kept lexicographically
    sorted so equal shapes compare equal.
    """

    blocks: tuple[tuple[int, int], ...]
    clique_size: int = 0

    def __post_init__(self):
        for a, b in self.blocks:
            if not (1 <= a <= b):
                raise ValueError(f"block ({a}, {b}) must satisfy 1 <= a <= b")
        if list(self.blocks) != sorted(self.blocks):
            raise ValueError("blocks must be sorted lexicographically")
        if self.clique_size < 0:
            raise ValueError("clique_size must be non-negative")

    @classmethod
    def canonical(cls, blocks, clique_size: int = 0) -> "BlockForm":
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in blocks))
        return cls(norm, clique_size)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(a + b for a, b in self.blocks) + self.clique_size

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks], "clique_size": self.clique_size}


@dataclass(frozen=True)
class BlockExtraction:
    """A BlockForm together with the vertex groups realizing it.

    ``block_vertices[i]`` is the pair (K_a vertices, K_b vertices) for
    ``form.blocks[i]``; ``clique_vertices`` lists the absorbed clique.
    """

    form: BlockForm
    block_vertices: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    clique_vertices: tuple[int, ...]

    def positions(self) -> list[int]:
        """Vertex labels in canonical construction order (a-part, b-part, ..., clique)."""
        out: list[int] = []
        for averts, bverts in self.block_vertices:
            out.extend(averts)
            out.extend(bverts)
        out.extend(self.clique_vertices)
        return out

    def remapped(self, mapping) -> "BlockExtraction":
        """Apply a label translation (``mapping[local] -> global``)."""
        return BlockExtraction(
            self.form,
            tuple(
                (tuple(mapping[v] for v in a), tuple(mapping[v] for v in b))
                for a, b in self.block_vertices
            ),
            tuple(mapping[v] for v in self.clique_vertices),
        )

    def to_json(self) -> dict:
        return {
            "form": self.form.to_json(),
            "block_vertices": [[list(a), list(b)] for a, b in self.block_vertices],
            "clique_vertices": list(self.clique_vertices),
        }


def _clique_leaves(node: Cotree) -> list[int] | None:
    """Leaf labels if the node's subgraph is a clique, else None."""
    if node.kind == "leaf":
        return [node.vertex]  # type: ignore[list-item]
    if node.kind == "join" and all(ch.kind == "leaf" for ch in node.children):
        return sorted(ch.vertex for ch in node.children)  # type: ignore[misc]
    return None


def _nonadjacent_pair(node: Cotree) -> tuple[int, int]:
    """Two non-adjacent vertices inside a non-clique subtree."""
    if node.kind == "union":
        return min(node.children[0].leaves()), min(node.children[1].leaves())
    for ch in node.children:
        if ch.kind == "union":
            return _nonadjacent_pair(ch)
    raise AssertionError("non-clique subtree must contain a union node")


def extract_block_form(tree: Cotree, g: Graph) -> BlockExtraction | tuple[int, int, int]:
    """Canonical block decomposition of a connected graph's cotree.

    Succeeds iff every child of the root join is a leaf or a union of
    exactly two cliques (leaf children are absorbed into the clique part).
    On failure returns a 3-coclique witness.  A union root (disconnected
    graph) violates the precondition.
    """
    if tree.kind == "union":
        raise ValueError("block form extraction requires a connected graph (join or leaf root)")
    if tree.kind == "leaf":
        return BlockExtraction(BlockForm((), 1), (), (tree.vertex,))  # type: ignore[arg-type]

    clique: list[int] = []
    raw_blocks: list[tuple[list[int], list[int]]] = []
    for child in tree.children:
        if child.kind == "leaf":
            clique.append(child.vertex)  # type: ignore[arg-type]
            continue
        # by alternation the child is a union
        if len(child.children) > 2:
            triple = sorted(min(ch.leaves()) for ch in child.children[:3])
            return (triple[0], triple[1], triple[2])
        first, second = child.children
        part_a = _clique_leaves(first)
        part_b = _clique_leaves(second)
        if part_a is None or part_b is None:
            bad = first if part_a is None else second
            other = second if part_a is None else first
            x, y = _nonadjacent_pair(bad)
            triple = sorted((x, y, min(other.leaves())))
            return (triple[0], triple[1], triple[2])
        if (len(part_a), min(part_a)) > (len(part_b), min(part_b)):
            part_a, part_b = part_b, part_a
        raw_blocks.append((part_a, part_b))

    raw_blocks.sort(key=lambda ab: (len(ab[0]), len(ab[1]), ab[0][0]))
    form = BlockForm(
        tuple((len(a), len(b)) for a, b in raw_blocks), clique_size=len(clique)
    )
    return BlockExtraction(
        form,
        tuple((tuple(a), tuple(b)) for a, b in raw_blocks),
        tuple(sorted(clique)),
    )


def realize_block_form(bf: BlockForm) -> Graph:
    """Build the graph of a BlockForm with deterministic vertex order.

    Order: block 1's K_a, then its K_b, block 2, ..., clique part last.
    Distinct blocks are fully joined; the clique part is joined to all.
    """
    n = bf.n
    m = np.ones((n, n), dtype=np.uint8)
    np.fill_diagonal(m, 0)
    pos = 0
    for a, b in bf.blocks:
        m[pos : pos + a, pos + a : pos + a + b] = 0
        m[pos + a : pos + a + b, pos : pos + a] = 0
        pos += a + b
    return Graph.from_matrix(m)


def block_form_layout(bf: BlockForm) -> BlockExtraction:
    """Canonical vertex groups of ``realize_block_form(bf)``."""
    groups = []
    pos = 0
    for a, b in bf.blocks:
        groups.append((tuple(range(pos, pos + a)), tuple(range(pos + a, pos + a + b))))
        pos += a + b
    clique = tuple(range(pos, pos + bf.clique_size))
    return BlockExtraction(bf, tuple(groups), clique)
