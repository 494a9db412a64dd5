"""Witness synthesis: orthogonal vector pairs and involution matrices.

For a block form (K_a1 u K_b1) * ... * (K_ak u K_bk) * K_c this module
builds two orthogonal, equal-norm vectors u, v whose rank-two projector

    A = I - (2 / ||u||^2) (u u^T + v v^T)

is an involution with eigenvalue -1 of multiplicity exactly 2 and whose
off-diagonal zero pattern matches non-adjacency in the realized graph.
All free parameters left open by the underlying theory (block weights, the
clique tilt t, the apex scalars x and y) are chosen deterministically here.

Per block (a <= b, weight w > 0) the vector segments are

    u-segment: 1 (a times),  -sqrt(a/b) w (b times)
    v-segment: w (a times),   sqrt(a/b)   (b times)

which are orthogonal with common squared norm a (1 + w^2); the segment
pair product vanishes exactly between the K_a and K_b parts.  Cross-block
entries are nonzero whenever the weights are distinct and positive.

Two shapes need dedicated handling:

* c = 4 with clique tilt t = 1 zeroes a required clique entry, so t = 2 is
  used there (the tilted family stays orthogonal and equal-norm for every
  t > 0 and only degenerates at t^2 = (c-2)/2).
* c = 2 admits no valid two-entry clique segment at all when every block
  segment is balanced: the final two Gram columns would have to be
  orthogonal, zeroing the K_2 edge entry.  Instead the first block donates
  the imbalance (u-segment 1/0, v-segment 0/rho with rho^2 = (a1+1)/b1)
  and the K_2 takes the tilted pair u: (1, -1), v: (s, s), s = 1/sqrt(2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import (
    Classification,
    CompleteSplit,
    ComponentWitness,
    DisconnectedCliques,
    Verdict,
)
from .cotree import BlockExtraction, BlockForm, block_form_layout
from .graphs import Graph


class NotConstructibleError(ValueError):
    """The classification does not admit a two-eigenvalue witness."""

    def __init__(self, message: str, classification: Classification | None = None):
        super().__init__(message)
        self.classification = classification


@dataclass(frozen=True)
class WeightSet:
    """Distinct positive block weights avoiding a forbidden set."""

    values: tuple[float, ...]
    forbidden: frozenset[float]
    tolerance: float = 1e-6

    def __post_init__(self):
        if len(set(self.values)) != len(self.values):
            raise ValueError("weights must be distinct")
        if any(w <= 0 for w in self.values):
            raise ValueError("weights must be positive")
        for w in self.values:
            if any(abs(w - f) <= self.tolerance for f in self.forbidden):
                raise ValueError(f"weight {w} collides with a forbidden value")


def select_weights(k: int, forbidden=(), tolerance: float = 1e-6) -> WeightSet:
    """The k smallest integers >= 4 clearing the forbidden set."""
    if k < 0:
        raise ValueError("k must be non-negative")
    forb = frozenset(float(f) for f in forbidden)
    values: list[float] = []
    candidate = 4
    while len(values) < k:
        w = float(candidate)
        if all(abs(w - f) > tolerance for f in forb):
            values.append(w)
        candidate += 1
    return WeightSet(tuple(values), forb, tolerance)


@dataclass(frozen=True, eq=False)
class WitnessPair:
    """Orthogonal equal-norm vectors and the involution they generate."""

    u: np.ndarray
    v: np.ndarray
    scale: float  # ||u||^2
    matrix: np.ndarray

    @classmethod
    def from_vectors(cls, u, v) -> "WitnessPair":
        u = np.asarray(u, dtype=np.float64)
        v = np.asarray(v, dtype=np.float64)
        nu = float(u @ u)
        nv = float(v @ v)
        dot = float(u @ v)
        if abs(dot) > 1e-9 * math.sqrt(nu * nv):
            raise ValueError(f"vectors are not orthogonal (u.v = {dot:g})")
        if abs(nu - nv) > 1e-9 * nu:
            raise ValueError(f"vectors have unequal norms ({nu:g} vs {nv:g})")
        a = np.eye(len(u)) - (2.0 / nu) * (np.outer(u, u) + np.outer(v, v))
        return cls(u, v, nu, a)

    @property
    def n(self) -> int:
        return len(self.u)

    def to_json(self) -> dict:
        return {
            "u": [float(x) for x in self.u],
            "v": [float(x) for x in self.v],
            "scale": self.scale,
        }


def block_vectors(a: int, b: int, w: float) -> tuple[np.ndarray, np.ndarray]:
    """Vector segments for one block K_a u K_b with weight w (a <= b)."""
    if not (1 <= a <= b):
        raise ValueError("block requires 1 <= a <= b")
    if w == 0:
        raise ValueError("block weight must be nonzero")
    r = math.sqrt(a / b)
    u = np.concatenate([np.ones(a), np.full(b, -r * w)])
    v = np.concatenate([np.full(a, float(w)), np.full(b, r)])
    return u, v


def clique_vectors(c: int, t: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Tilted vector segments for a joined clique K_c, c >= 3.

    u = (-t, 1, ..., 1, -(c-2)/(2t)) and v = ((c-2)/(2t), 1, ..., 1, t) are
    orthogonal with equal norms for every t > 0; within-clique pair
    products vanish only at t^2 = (c-2)/2, which is rejected (at c = 4
    that excludes t = 1).  c = 2 has no valid segment of this kind; it is
    handled jointly with a donor block in construct_with_clique.
    """
    if c < 3:
        raise ValueError(
            "clique_vectors requires c >= 3; a joined K_2 needs the paired "
            "construction in construct_with_clique"
        )
    if t <= 0:
        raise ValueError("tilt t must be positive")
    if abs(t * t - (c - 2) / 2.0) < 1e-9:
        raise ValueError(f"tilt t={t} zeroes a clique entry at c={c}")
    m = (c - 2) / (2.0 * t)
    u = np.concatenate([[-t], np.ones(c - 2), [-m]])
    v = np.concatenate([[m], np.ones(c - 2), [t]])
    return u, v


def _assemble(bf: BlockForm, weights, clique_pair=None) -> WitnessPair:
    """Concatenate block segments (and an optional clique segment pair)."""
    us = []
    vs = []
    for (a, b), w in zip(bf.blocks, weights):
        ub, vb = block_vectors(a, b, w)
        us.append(ub)
        vs.append(vb)
    if clique_pair is not None:
        us.append(clique_pair[0])
        vs.append(clique_pair[1])
    return WitnessPair.from_vectors(np.concatenate(us), np.concatenate(vs))


def construct_join_blocks(bf: BlockForm) -> WitnessPair:
    """Witness for k >= 2 blocks and no clique part."""
    if bf.clique_size != 0:
        raise ValueError("construct_join_blocks requires clique_size = 0")
    if bf.k < 2:
        raise NotConstructibleError(
            "a single block realizes a disconnected graph; at least two needed"
        )
    ws = select_weights(bf.k)
    return _assemble(bf, ws.values)


def construct_with_clique(bf: BlockForm) -> WitnessPair:
    """Witness for k >= 1 blocks joined with a clique K_c, c >= 2."""
    if bf.clique_size < 2:
        raise ValueError("construct_with_clique requires clique_size >= 2")
    if bf.k < 1:
        raise NotConstructibleError(
            "a bare complete graph takes the [n-1,1] construction instead"
        )
    c = bf.clique_size
    if c == 2:
        return _construct_with_k2(bf)
    t = 2.0 if c == 4 else 1.0
    # weights collide with clique cross-entries at 1, t/m and m/t,
    # where m = (c-2)/(2t)
    forbidden = {1.0, 2.0 * t * t / (c - 2), (c - 2) / (2.0 * t * t)}
    ws = select_weights(bf.k, forbidden)
    return _assemble(bf, ws.values, clique_vectors(c, t))


def _construct_with_k2(bf: BlockForm) -> WitnessPair:
    """Joined K_2 repair: first block split across u and v, tilted K_2 pair."""
    a1, b1 = bf.blocks[0]
    rho = math.sqrt((a1 + 1.0) / b1)
    us = [np.concatenate([np.ones(a1), np.zeros(b1)])]
    vs = [np.concatenate([np.zeros(a1), np.full(b1, rho)])]
    s = 1.0 / math.sqrt(2.0)
    ws = select_weights(bf.k - 1, {math.sqrt(2.0), s})
    for (a, b), w in zip(bf.blocks[1:], ws.values):
        ub, vb = block_vectors(a, b, w)
        us.append(ub)
        vs.append(vb)
    us.append(np.array([1.0, -1.0]))
    vs.append(np.array([s, s]))
    return WitnessPair.from_vectors(np.concatenate(us), np.concatenate(vs))


def _oneone_tail(a: int, b: int, c: int, d: int) -> tuple[float, float]:
    """Apex scalars (x, y) for two fixed blocks joined with a single vertex.

    With block segments u1/v1 = (1...,4...)/(2...,-2...) on K_a u K_b and
    u2/v2 = (2...,9...)/(6...,-3...) on K_c u K_d, orthogonality forces
    x y = B = -2a+8b-12c+27d and equal norms force x^2 - y^2 = -(A) with
    A = 3a-12b+32c-72d; eliminating x gives s^2 + A s - B^2 = 0 for
    s = y^2, whose positive root lies strictly inside (2B, 3B).  That
    bracket is what keeps the apex cross-entries 4x-2y and 9x-3y nonzero.
    """
    if not (1 <= a <= b and 1 <= c <= d):
        raise ValueError("requires 1 <= a <= b and 1 <= c <= d")
    bco = -2 * a + 8 * b - 12 * c + 27 * d
    aco = 3 * a - 12 * b + 32 * c - 72 * d
    r = (-aco + math.sqrt(aco * aco + 4.0 * bco * bco)) / 2.0
    if not (2 * bco < r < 3 * bco):
        raise ArithmeticError(f"root {r} escaped the bracket ({2 * bco}, {3 * bco})")
    y = math.sqrt(r)
    x = bco / y
    return x, y


_ONEONE_U = (1.0, 4.0, 2.0, 9.0)  # segment values for K_a, K_b, K_c, K_d
_ONEONE_V = (2.0, -2.0, 6.0, -3.0)


def construct_oneone(a: int, b: int, c: int, d: int) -> WitnessPair:
    """Witness for (K_a u K_b) * (K_c u K_d) * K_1 (all sizes >= 1)."""
    x, y = _oneone_tail(a, b, c, d)
    sizes = (a, b, c, d)
    u = np.concatenate([np.full(s, val) for s, val in zip(sizes, _ONEONE_U)] + [[x]])
    v = np.concatenate([np.full(s, val) for s, val in zip(sizes, _ONEONE_V)] + [[y]])
    return WitnessPair.from_vectors(u, v)


def construct_with_k1(bf: BlockForm) -> WitnessPair:
    """Witness for k >= 2 blocks joined with a single extra vertex."""
    if bf.clique_size != 1:
        raise ValueError("construct_with_k1 requires clique_size = 1")
    if bf.k < 2:
        raise NotConstructibleError(
            "one block joined with a single vertex has no two-eigenvalue witness"
        )
    (a, b), (c, d) = bf.blocks[0], bf.blocks[1]
    x, y = _oneone_tail(a, b, c, d)
    us = [
        np.concatenate([np.full(a, _ONEONE_U[0]), np.full(b, _ONEONE_U[1])]),
        np.concatenate([np.full(c, _ONEONE_U[2]), np.full(d, _ONEONE_U[3])]),
    ]
    vs = [
        np.concatenate([np.full(a, _ONEONE_V[0]), np.full(b, _ONEONE_V[1])]),
        np.concatenate([np.full(c, _ONEONE_V[2]), np.full(d, _ONEONE_V[3])]),
    ]
    ws = select_weights(bf.k - 2, {2.0, 3.0, 0.5, 1.0 / 3.0, x / y, y / x})
    for (p, q), w in zip(bf.blocks[2:], ws.values):
        ub, vb = block_vectors(p, q, w)
        us.append(ub)
        vs.append(vb)
    us.append(np.array([x]))
    vs.append(np.array([y]))
    return WitnessPair.from_vectors(np.concatenate(us), np.concatenate(vs))


def construct_witness(bf: BlockForm) -> WitnessPair:
    """Witness for any constructible block form, in canonical vertex order.

    Constructible: k >= 2 with any clique part, or k = 1 with a clique part
    of at least 2.  Refused shapes raise NotConstructibleError.
    """
    if bf.k == 0:
        raise NotConstructibleError(
            "a bare complete graph takes the [n-1,1] construction instead"
        )
    if bf.clique_size == 0:
        return construct_join_blocks(bf)
    if bf.clique_size == 1:
        return construct_with_k1(bf)
    return construct_with_clique(bf)


def construct_n1_1(clique: int, isolated: int = 0) -> np.ndarray:
    """Block diagonal of (J - I) on a clique and -I on isolated vertices.

    Spectrum: {clique-1 once, -1 with multiplicity clique+isolated-1}.
    A clique of size < 2 yields fewer than two distinct eigenvalues and is
    returned as-is for completeness.
    """
    if clique < 1 or isolated < 0 or clique + isolated < 1:
        raise ValueError("need clique >= 1 and isolated >= 0")
    n = clique + isolated
    m = np.zeros((n, n))
    m[:clique, :clique] = np.ones((clique, clique)) - np.eye(clique)
    for i in range(clique, n):
        m[i, i] = -1.0
    return m


def shift_scale(matrix, lam1: float, lam2: float) -> np.ndarray:
    """Affine map sending eigenvalue lam1 to 1 and lam2 to -1.

    A = 2/(lam1-lam2) B - (lam1+lam2)/(lam1-lam2) I; the off-diagonal
    support is unchanged.
    """
    if lam1 == lam2:
        raise ValueError("shift_scale requires distinct eigenvalues")
    b = np.asarray(matrix, dtype=np.float64)
    n = b.shape[0]
    return (2.0 / (lam1 - lam2)) * b - ((lam1 + lam2) / (lam1 - lam2)) * np.eye(n)


def _unit_clique_block(size: int) -> np.ndarray:
    """S(K_size) matrix with spectrum {1 once, -1 (size-1) times}."""
    if size == 1:
        return np.eye(1)
    return shift_scale(np.ones((size, size)) - np.eye(size), size - 1.0, -1.0)


def construct_disconnected(g: Graph, cls: Classification) -> np.ndarray:
    """Witness matrix for a disconnected [n-2,2] classification.

    Two-cliques case: each complete component gets a unit-spectrum clique
    block and isolated vertices get -1, so the spectrum is {1^2, -1^(n-2)}.
    Component case: the component's projector witness is extended by +1
    diagonal entries on the isolated vertices, keeping the multiplicity of
    -1 at exactly 2.
    """
    if cls.verdict is not Verdict.MINIMAL_N2_2:
        raise NotConstructibleError("verdict is not MINIMAL_N2_2", cls)
    cert = cls.certificate
    m = np.zeros((g.n, g.n))
    if isinstance(cert, DisconnectedCliques):
        for part in (cert.a_vertices, cert.b_vertices):
            idx = np.asarray(part, dtype=np.intp)
            m[np.ix_(idx, idx)] = _unit_clique_block(len(part))
        for i in cert.isolated:
            m[i, i] = -1.0
        return m
    if isinstance(cert, ComponentWitness):
        pair = _scattered_pair(g.n, cert.extraction)
        return pair.matrix
    raise NotConstructibleError("certificate does not describe a disconnected witness", cls)


def _scattered_pair(n: int, ext: BlockExtraction) -> WitnessPair:
    """Canonical block-form witness scattered onto ``ext``'s vertex labels.

    Vertices outside the extraction keep zero vector entries, which puts
    +1 on their diagonal and leaves them isolated in the pattern.
    """
    canonical = construct_witness(ext.form)
    positions = ext.positions()
    u = np.zeros(n)
    v = np.zeros(n)
    u[positions] = canonical.u
    v[positions] = canonical.v
    return WitnessPair.from_vectors(u, v)


def witness_matrix_for(g: Graph, cls: Classification) -> tuple[np.ndarray, WitnessPair | None]:
    """Witness matrix (and vector pair when one exists) in ``g``'s labels.

    MINIMAL_N2_2 yields the rank-two projector form (with -1 multiplicity
    2); COMPLETE_PLUS_ISOLATED_N1_1 yields the unit-involution clique form
    (with -1 multiplicity n-1).  Other verdicts are not constructible.
    """
    cert = cls.certificate
    if cls.verdict is Verdict.MINIMAL_N2_2:
        if isinstance(cert, BlockExtraction):
            pair = _scattered_pair(g.n, cert)
            return pair.matrix, pair
        if isinstance(cert, ComponentWitness):
            pair = _scattered_pair(g.n, cert.extraction)
            return pair.matrix, pair
        if isinstance(cert, DisconnectedCliques):
            return construct_disconnected(g, cls), None
        raise NotConstructibleError("MINIMAL_N2_2 certificate missing", cls)
    if cls.verdict is Verdict.COMPLETE_PLUS_ISOLATED_N1_1:
        assert isinstance(cert, CompleteSplit)
        if len(cert.clique) < 2:
            raise NotConstructibleError("clique too small for a [n-1,1] witness", cls)
        m = np.zeros((g.n, g.n))
        idx = np.asarray(cert.clique, dtype=np.intp)
        m[np.ix_(idx, idx)] = _unit_clique_block(len(cert.clique))
        for i in cert.isolated:
            m[i, i] = -1.0
        return m, None
    raise NotConstructibleError(f"verdict {cls.verdict.value} admits no witness", cls)
