"""Decision procedure for minimal two-eigenvalue multiplicity splits.

Verdicts, for a graph on n vertices:

* ``EMPTY_Q1``: no edges; a diagonal matrix with one distinct eigenvalue fits.
* ``COMPLETE_PLUS_ISOLATED_N1_1``: a complete graph plus isolated vertices;
  the minimal split is [n-1, 1].
* ``MINIMAL_N2_2``: the minimal split is [n-2, 2]; carries a block-form
  certificate (or, when disconnected, the two-cliques-plus-isolated or
  component decomposition).
* ``NO_BIPARTITION_QGE3``: the single-block-with-apex shape; a unique
  two-edge path forces at least three distinct eigenvalues.
* ``OUT_OF_SCOPE``: neither [n-1, 1] nor [n-2, 2] is attainable (induced P4
  or 3-coclique present, or a disconnected shape outside the union rules); no
  exact verdict is claimed beyond the excluded splits.

Every classification reports ``q_lower_bound``, defined as the maximum of
the unique-shortest-path bound and the verdict's implied floor.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .cotree import BlockExtraction, build_cotree, extract_block_form
from .graphs import Graph, find_induced_p4, has_coclique_3, unique_path_bound


class Verdict(str, enum.Enum):
    EMPTY_Q1 = "EMPTY_Q1"
    COMPLETE_PLUS_ISOLATED_N1_1 = "COMPLETE_PLUS_ISOLATED_N1_1"
    MINIMAL_N2_2 = "MINIMAL_N2_2"
    NO_BIPARTITION_QGE3 = "NO_BIPARTITION_QGE3"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"


# floor on the number of distinct eigenvalues implied by each verdict
_IMPLIED_BOUND = {
    Verdict.EMPTY_Q1: 1,
    Verdict.COMPLETE_PLUS_ISOLATED_N1_1: 2,
    Verdict.MINIMAL_N2_2: 2,
    Verdict.NO_BIPARTITION_QGE3: 3,
    Verdict.OUT_OF_SCOPE: 3,
}


@dataclass(frozen=True)
class CompleteSplit:
    """Clique vertices plus isolated vertices (the [n-1,1] shape)."""

    clique: tuple[int, ...]
    isolated: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "kind": "complete_split",
            "clique": list(self.clique),
            "isolated": list(self.isolated),
        }


@dataclass(frozen=True)
class InducedPathWitness:
    """Four vertices inducing a 3-edge path."""

    vertices: tuple[int, int, int, int]

    def to_json(self) -> dict:
        return {"kind": "induced_p4", "vertices": list(self.vertices)}


@dataclass(frozen=True)
class CocliqueWitness:
    """Three pairwise non-adjacent vertices."""

    vertices: tuple[int, int, int]

    def to_json(self) -> dict:
        return {"kind": "coclique3", "vertices": list(self.vertices)}


@dataclass(frozen=True)
class UniquePathPair:
    """Endpoints joined by a unique shortest path of the stated length."""

    endpoints: tuple[int, int]
    distance: int

    def to_json(self) -> dict:
        return {
            "kind": "unique_path_pair",
            "endpoints": list(self.endpoints),
            "distance": self.distance,
        }


@dataclass(frozen=True)
class DisconnectedCliques:
    """Two complete components plus isolated vertices (disconnected [n-2,2])."""

    a_vertices: tuple[int, ...]
    b_vertices: tuple[int, ...]
    isolated: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "kind": "disconnected_cliques",
            "a_vertices": list(self.a_vertices),
            "b_vertices": list(self.b_vertices),
            "isolated": list(self.isolated),
        }


@dataclass(frozen=True)
class ComponentWitness:
    """One [n-2,2] component plus isolated vertices (disconnected [n-2,2])."""

    component: tuple[int, ...]
    isolated: tuple[int, ...]
    extraction: BlockExtraction

    def to_json(self) -> dict:
        return {
            "kind": "component_witness",
            "component": list(self.component),
            "isolated": list(self.isolated),
            "extraction": self.extraction.to_json(),
        }


Certificate = (
    BlockExtraction
    | CompleteSplit
    | InducedPathWitness
    | CocliqueWitness
    | UniquePathPair
    | DisconnectedCliques
    | ComponentWitness
)


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    q_lower_bound: int
    certificate: Certificate | None = None
    note: str | None = None


def q_upper_bound_report(c: Classification) -> int | str:
    """Distinct-eigenvalue upper bound implied by the verdict, or "unknown"."""
    if c.verdict is Verdict.EMPTY_Q1:
        return 1
    if c.verdict in (Verdict.COMPLETE_PLUS_ISOLATED_N1_1, Verdict.MINIMAL_N2_2):
        return 2
    return "unknown"


def classification_to_json(c: Classification) -> dict:
    upper = q_upper_bound_report(c)
    cert = c.certificate.to_json() if c.certificate is not None else None
    if isinstance(c.certificate, BlockExtraction):
        cert = {"kind": "block_form", **cert}  # type: ignore[dict-item]
    out = {
        "verdict": c.verdict.value,
        "q_lower_bound": c.q_lower_bound,
        "q_upper_bound": None if upper == "unknown" else upper,
        "certificate": cert,
    }
    if c.note is not None:
        out["note"] = c.note
    return out


def _bound(g: Graph, verdict: Verdict) -> int:
    return max(unique_path_bound(g), _IMPLIED_BOUND[verdict])


def classify_connected(g: Graph) -> Classification:
    """Classify a connected graph with at least one vertex."""
    if g.n < 1:
        raise ValueError("classify_connected requires n >= 1")
    if not g.is_connected():
        raise ValueError("classify_connected requires a connected graph")
    if g.n == 1:
        return Classification(Verdict.EMPTY_Q1, 1)
    if g.is_complete():
        cert = CompleteSplit(tuple(range(g.n)), ())
        return Classification(
            Verdict.COMPLETE_PLUS_ISOLATED_N1_1,
            _bound(g, Verdict.COMPLETE_PLUS_ISOLATED_N1_1),
            cert,
        )
    tree = build_cotree(g)
    if isinstance(tree, tuple):
        return Classification(
            Verdict.OUT_OF_SCOPE,
            _bound(g, Verdict.OUT_OF_SCOPE),
            InducedPathWitness(tree),
        )
    triple = has_coclique_3(g)
    if triple is not None:
        return Classification(
            Verdict.OUT_OF_SCOPE,
            _bound(g, Verdict.OUT_OF_SCOPE),
            CocliqueWitness(triple),
        )
    ext = extract_block_form(tree, g)
    assert isinstance(ext, BlockExtraction), "coclique-free cograph must extract"
    bf = ext.form
    if bf.k == 1 and bf.clique_size == 1:
        # single block with a one-vertex apex: the only path between the two
        # union parts runs through the apex, so at least 3 distinct eigenvalues
        x = ext.block_vertices[0][0][0]
        y = ext.block_vertices[0][1][0]
        cert = UniquePathPair((x, y), 2)
        return Classification(
            Verdict.NO_BIPARTITION_QGE3, _bound(g, Verdict.NO_BIPARTITION_QGE3), cert
        )
    return Classification(Verdict.MINIMAL_N2_2, _bound(g, Verdict.MINIMAL_N2_2), ext)


def classify(g: Graph) -> Classification:
    """Classify any graph; disconnected graphs follow the union rules.

    A disconnected graph attains [n-2, 2] exactly when it is two complete
    components plus isolated vertices, or one [n-2, 2] component plus
    isolated vertices.
    """
    if g.n == 0:
        return Classification(
            Verdict.EMPTY_Q1, 0, note="degenerate: graph has no vertices"
        )
    comps = g.components()
    if len(comps) == 1:
        return classify_connected(g)

    nontrivial = [c for c in comps if len(c) >= 2]
    singletons = [c[0] for c in comps if len(c) == 1]
    all_complete = all(g.induced(c).is_complete() for c in nontrivial)

    if all_complete:
        if not nontrivial:
            return Classification(Verdict.EMPTY_Q1, _bound(g, Verdict.EMPTY_Q1))
        if len(nontrivial) == 1:
            cert = CompleteSplit(tuple(nontrivial[0]), tuple(singletons))
            return Classification(
                Verdict.COMPLETE_PLUS_ISOLATED_N1_1,
                _bound(g, Verdict.COMPLETE_PLUS_ISOLATED_N1_1),
                cert,
            )
        if len(nontrivial) == 2:
            first, second = sorted(nontrivial, key=len, reverse=True)
            cert = DisconnectedCliques(tuple(first), tuple(second), tuple(singletons))
            return Classification(
                Verdict.MINIMAL_N2_2, _bound(g, Verdict.MINIMAL_N2_2), cert
            )
    else:
        noncomplete = [c for c in nontrivial if not g.induced(c).is_complete()]
        if len(noncomplete) == 1 and len(nontrivial) == 1:
            comp = noncomplete[0]
            sub = classify_connected(g.induced(comp))
            if sub.verdict is Verdict.MINIMAL_N2_2:
                assert isinstance(sub.certificate, BlockExtraction)
                cert = ComponentWitness(
                    tuple(comp), tuple(singletons), sub.certificate.remapped(comp)
                )
                return Classification(
                    Verdict.MINIMAL_N2_2, _bound(g, Verdict.MINIMAL_N2_2), cert
                )

    # any other disconnected shape excludes both two-eigenvalue splits; such
    # a graph always contains a 3-coclique (a non-adjacent pair in one
    # component plus any vertex of another, or three components)
    triple = has_coclique_3(g)
    assert triple is not None
    return Classification(
        Verdict.OUT_OF_SCOPE, _bound(g, Verdict.OUT_OF_SCOPE), CocliqueWitness(triple)
    )
