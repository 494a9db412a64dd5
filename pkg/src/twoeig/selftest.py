"""Exhaustive and randomized self-checks.

``oracle_verdict`` re-derives the classification of a connected graph from
first principles (brute-force P4 scan, 3-coclique scan, complement-component
shape check) without touching the cotree machinery, so agreement between
the two pipelines over all small graphs is a meaningful cross-validation.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .classify import Verdict, classify
from .construct import construct_witness
from .cotree import BlockForm, realize_block_form
from .graphs import Graph, encode_graph6, find_induced_p4, has_coclique_3
from .verify import verify_witness


def enumerate_graphs(n: int):
    """All labeled graphs on n vertices (2^(n(n-1)/2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        m = np.zeros((n, n), dtype=np.uint8)
        for bit, (i, j) in enumerate(pairs):
            if (mask >> bit) & 1:
                m[i, j] = 1
                m[j, i] = 1
        yield Graph.from_matrix(m)


def _is_clique(g: Graph, verts: list[int]) -> bool:
    sub = g.matrix()[np.ix_(verts, verts)]
    k = len(verts)
    return int(sub.sum()) == k * (k - 1)


def _oracle_connected(g: Graph) -> Verdict:
    if g.n == 1:
        return Verdict.EMPTY_Q1
    if g.is_complete():
        return Verdict.COMPLETE_PLUS_ISOLATED_N1_1
    if find_induced_p4(g) is not None:
        return Verdict.OUT_OF_SCOPE
    if has_coclique_3(g) is not None:
        return Verdict.OUT_OF_SCOPE
    # shape check on complement components: each must be a single vertex
    # (clique part) or split into exactly two cliques
    blocks = 0
    clique_part = 0
    for comp in g.complement().components():
        if len(comp) == 1:
            clique_part += 1
            continue
        local = g.induced(comp)
        pieces = local.components()
        if len(pieces) != 2 or not all(_is_clique(local, piece) for piece in pieces):
            return Verdict.OUT_OF_SCOPE
        blocks += 1
    if blocks == 1 and clique_part == 1:
        return Verdict.NO_BIPARTITION_QGE3
    if blocks >= 2 or (blocks == 1 and clique_part >= 2):
        return Verdict.MINIMAL_N2_2
    return Verdict.OUT_OF_SCOPE


def oracle_verdict(g: Graph) -> Verdict:
    """Independent verdict for any graph (connected core re-derived brute-force)."""
    if g.n == 0:
        return Verdict.EMPTY_Q1
    comps = g.components()
    if len(comps) == 1:
        return _oracle_connected(g)
    nontrivial = [c for c in comps if len(c) >= 2]
    if all(_is_clique(g, c) for c in nontrivial):
        if not nontrivial:
            return Verdict.EMPTY_Q1
        if len(nontrivial) == 1:
            return Verdict.COMPLETE_PLUS_ISOLATED_N1_1
        if len(nontrivial) == 2:
            return Verdict.MINIMAL_N2_2
        return Verdict.OUT_OF_SCOPE
    noncomplete = [c for c in nontrivial if not _is_clique(g, c)]
    if len(noncomplete) == 1 and len(nontrivial) == 1:
        if _oracle_connected(g.induced(noncomplete[0])) is Verdict.MINIMAL_N2_2:
            return Verdict.MINIMAL_N2_2
    return Verdict.OUT_OF_SCOPE


def random_block_form(rng: random.Random, max_k: int = 4, max_part: int = 5, max_clique: int = 5) -> BlockForm:
    """Random constructible block form (k >= 2, or k = 1 with clique >= 2)."""
    while True:
        k = rng.randint(1, max_k)
        c = rng.randint(0, max_clique)
        if k >= 2 or c >= 2:
            blocks = []
            for _ in range(k):
                a = rng.randint(1, max_part)
                b = rng.randint(1, max_part)
                blocks.append((min(a, b), max(a, b)))
            return BlockForm.canonical(blocks, c)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


@dataclass
class SelftestReport:
    graphs_checked: int = 0
    agreements: int = 0
    constructions_checked: int = 0
    constructions_passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_selftest(max_n: int = 6, seed: int = 0, cases: int = 200) -> SelftestReport:
    """Exhaustive verdict agreement up to ``max_n`` plus randomized constructions.

    Failures are reported as graph6 strings (verdict disagreements) or
    block-form descriptions (construction failures).
    """
    report = SelftestReport()
    for n in range(max_n + 1):
        for g in enumerate_graphs(n):
            report.graphs_checked += 1
            got = classify(g).verdict
            want = oracle_verdict(g)
            if got is want:
                report.agreements += 1
            else:
                report.failures.append(
                    f"verdict mismatch on {encode_graph6(g)!r}: {got.value} vs oracle {want.value}"
                )
    rng = random.Random(seed)
    for _ in range(cases):
        bf = random_block_form(rng)
        report.constructions_checked += 1
        try:
            pair = construct_witness(bf)
            result = verify_witness(pair, realize_block_form(bf))
        except Exception as exc:  # noqa: BLE001 - report, do not crash the suite
            report.failures.append(f"construction raised on {bf}: {exc}")
            continue
        if result.passed:
            report.constructions_passed += 1
        else:
            report.failures.append(
                f"verify failed on {bf}: {'; '.join(result.failures)}"
            )
    return report
