"""Parser for clique expressions such as ``(K2+K3)*K1``.

Grammar (whitespace-insensitive ASCII):

    expr   := term ('*' term)*        '*' is join
    term   := factor ('+' factor)*    '+' is disjoint union (binds tighter)
    factor := 'K' uint | '(' expr ')'

``K0`` is legal and contributes no vertices.  Vertex labels follow
left-to-right leaf order of the expression.
"""
from __future__ import annotations

from .cotree import Cotree, graph_of_cotree
from .graphs import Graph


class ExpressionSyntaxError(ValueError):
    """Syntax error with the byte offset where parsing failed."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def _shift(tree: Cotree, delta: int) -> Cotree:
    if tree.kind == "leaf":
        return Cotree.leaf(tree.vertex + delta)  # type: ignore[operator]
    return Cotree(tree.kind, children=tuple(_shift(ch, delta) for ch in tree.children))


def _combine(kind: str, parts: list[tuple[int, Cotree | None]]) -> tuple[int, Cotree | None]:
    """Merge subexpression fragments under a union/join, flattening same-kind
    children and dropping empty (K0) pieces."""
    total = 0
    children: list[Cotree] = []
    for size, tree in parts:
        if tree is not None:
            shifted = _shift(tree, total)
            if shifted.kind == kind:
                children.extend(shifted.children)
            else:
                children.append(shifted)
        total += size
    if not children:
        return total, None
    if len(children) == 1:
        return total, children[0]
    return total, Cotree(kind, children=tuple(children))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str | None:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def _fail(self, message: str):
        raise ExpressionSyntaxError(message, self.pos)

    def parse(self) -> tuple[int, Cotree | None]:
        result = self._expr()
        if self._peek() is not None:
            self._fail(f"unexpected character {self.text[self.pos]!r}")
        return result

    def _expr(self) -> tuple[int, Cotree | None]:
        parts = [self._term()]
        while self._peek() == "*":
            self.pos += 1
            parts.append(self._term())
        return _combine("join", parts) if len(parts) > 1 else parts[0]

    def _term(self) -> tuple[int, Cotree | None]:
        parts = [self._factor()]
        while self._peek() == "+":
            self.pos += 1
            parts.append(self._factor())
        return _combine("union", parts) if len(parts) > 1 else parts[0]

    def _factor(self) -> tuple[int, Cotree | None]:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            inner = self._expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            return inner
        if ch == "K":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                self._fail("expected digits after 'K'")
            m = int(self.text[start : self.pos])
            if m == 0:
                return 0, None
            if m == 1:
                return 1, Cotree.leaf(0)
            return m, Cotree.join_of(Cotree.leaf(i) for i in range(m))
        if ch is None:
            self._fail("unexpected end of expression")
        self._fail(f"unexpected character {ch!r}")
        raise AssertionError  # unreachable

def parse_block_dsl(text: str) -> tuple[Graph, Cotree | None]:
    """Parse a clique expression into its graph and construction cotree.

    The cotree is None when the expression has no vertices (all K0).
    """
    if not text.strip():
        raise ExpressionSyntaxError("empty expression", 0)
    parser = _Parser(text)
    size, tree = parser.parse()
    graph = graph_of_cotree(tree) if tree is not None else Graph(size)
    return graph, tree
