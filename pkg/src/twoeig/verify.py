"""Independent numerical verification of involution witnesses.

The headline checks are exact-ish and non-iterative: the involution
residual ||A^2 - I||_inf, the off-diagonal zero pattern against the graph,
and the eigenvalue -1 multiplicity recovered from the trace (exact for
involutions).  A self-contained cyclic Jacobi eigensolver provides the
redundant second opinion.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .construct import WitnessPair
from .graphs import Graph

INVOLUTION_TOL = 1e-8
ZERO_TOL = 1e-10
GRAM_RTOL = 1e-9
JACOBI_RTOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class JacobiConvergenceError(RuntimeError):
    """The rotation sweeps did not reach the target off-diagonal norm."""


def _as_symmetric(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    return a


def involution_residual(matrix) -> float:
    """Max-norm of A*A - I."""
    a = _as_symmetric(matrix)
    r = a @ a - np.eye(a.shape[0])
    return float(np.abs(r).max()) if a.size else 0.0


def pattern_conforms(
    matrix, g: Graph, zero_tol: float = ZERO_TOL
) -> tuple[bool, tuple[int, int] | None]:
    """Check |A_ij| > tol exactly on edges (diagonal unconstrained).

    Returns (ok, first offending off-diagonal pair or None).
    """
    a = _as_symmetric(matrix)
    if a.shape[0] != g.n:
        raise ValueError("matrix size does not match the graph")
    adj = g.matrix()
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if (abs(a[i, j]) > zero_tol) != bool(adj[i, j]):
                return False, (i, j)
    return True, None


def neg_one_multiplicity(matrix, residual_tol: float = 1e-6) -> int:
    """Multiplicity of eigenvalue -1 of an involution, from the trace.

    Requires the involution residual to be within ``residual_tol`` and the
    trace-derived multiplicity (n - tr A) / 2 to be integral.
    """
    a = _as_symmetric(matrix)
    res = involution_residual(a)
    if res > residual_tol:
        raise ValueError(f"matrix is not an involution (residual {res:g})")
    n = a.shape[0]
    value = (n - float(np.trace(a))) / 2.0
    nearest = round(value)
    if abs(value - nearest) > 1e-6:
        raise ValueError(f"trace gives non-integral multiplicity {value!r}")
    return int(nearest)


def jacobi_eigenvalues(
    matrix,
    rel_tol: float = JACOBI_RTOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues (ascending) by cyclic Jacobi rotations.

    Converged when the off-diagonal Frobenius norm falls below
    ``rel_tol * ||A||_F``; raises JacobiConvergenceError otherwise.  The
    eigenvalue sum is checked against the trace as a sanity guard.
    """
    a = _as_symmetric(matrix)
    if a.size and np.abs(a - a.T).max() > 1e-12 * max(1.0, np.abs(a).max()):
        raise ValueError("matrix is not symmetric")
    work = a.copy()
    values, _sweeps, converged = _kernels.jacobi_sweeps(work, rel_tol, max_sweeps)
    if not converged:
        raise JacobiConvergenceError(
            f"no convergence after {max_sweeps} sweeps"
        )
    if a.size:
        drift = abs(float(values.sum()) - float(np.trace(a)))
        limit = 1e-9 * a.shape[0] * max(1.0, float(np.abs(a).max()))
        if drift > limit:
            raise JacobiConvergenceError(f"eigenvalue sum drifted from trace by {drift:g}")
    return values


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of all witness checks; ``verdict`` is "pass" or "fail"."""

    involution_residual: float
    pattern_ok: bool
    pattern_offender: tuple[int, int] | None
    gram_ok: bool
    neg_one_multiplicity: int | None
    eigenvalues: tuple[float, ...]
    verdict: str
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "residual": self.involution_residual,
            "pattern_ok": self.pattern_ok,
            "gram_ok": self.gram_ok,
            "mult_neg1": self.neg_one_multiplicity,
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "verdict": self.verdict,
            "failures": list(self.failures),
        }


def _run_checks(
    a: np.ndarray,
    g: Graph,
    expected_mult: int | None,
    gram_failures: list[str],
    involution_tol: float,
    zero_tol: float,
) -> VerifyReport:
    failures = list(gram_failures)
    res = involution_residual(a)
    if res > involution_tol:
        failures.append(f"involution residual {res:g} exceeds {involution_tol:g}")
    pat_ok, offender = pattern_conforms(a, g, zero_tol)
    if not pat_ok:
        failures.append(f"pattern mismatch at entry {offender}")

    mult: int | None = None
    eigen: tuple[float, ...] = ()
    if res <= 1e-6:
        try:
            mult = neg_one_multiplicity(a)
        except ValueError as exc:
            failures.append(str(exc))
        try:
            values = jacobi_eigenvalues(a)
            eigen = tuple(float(x) for x in values)
            if mult is not None:
                eigen_count = int(np.sum(np.abs(values + 1.0) <= 1e-6))
                if eigen_count != mult:
                    failures.append(
                        f"trace multiplicity {mult} disagrees with eigensolver ({eigen_count})"
                    )
        except (JacobiConvergenceError, ValueError) as exc:
            failures.append(str(exc))
    else:
        failures.append("skipped spectral checks: not an involution")

    if expected_mult is not None and mult is not None and mult != expected_mult:
        failures.append(f"-1-multiplicity {mult}, expected {expected_mult}")

    return VerifyReport(
        involution_residual=res,
        pattern_ok=pat_ok,
        pattern_offender=offender,
        gram_ok=not gram_failures,
        neg_one_multiplicity=mult,
        eigenvalues=eigen,
        verdict="pass" if not failures else "fail",
        failures=tuple(failures),
    )


def verify_witness(
    pair: WitnessPair,
    g: Graph,
    involution_tol: float = INVOLUTION_TOL,
    zero_tol: float = ZERO_TOL,
    gram_rtol: float = GRAM_RTOL,
) -> VerifyReport:
    """Full check of a vector-pair witness against its graph.

    Pass requires: orthogonal equal-norm vectors, the matrix equal to the
    projector form they induce, involution residual within tolerance, the
    exact zero pattern, and -1-multiplicity exactly 2 (trace and
    eigensolver agreeing).
    """
    gram_failures: list[str] = []
    u = np.asarray(pair.u, dtype=np.float64)
    v = np.asarray(pair.v, dtype=np.float64)
    nu = float(u @ u)
    nv = float(v @ v)
    dot = float(u @ v)
    if abs(dot) > gram_rtol * np.sqrt(nu * nv):
        gram_failures.append(f"u.v = {dot:g} not within orthogonality tolerance")
    if abs(nu - nv) > gram_rtol * nu:
        gram_failures.append(f"norms differ: {nu:g} vs {nv:g}")
    if abs(nu - pair.scale) > gram_rtol * nu:
        gram_failures.append(f"scale {pair.scale:g} does not match ||u||^2 = {nu:g}")
    a = _as_symmetric(pair.matrix)
    if a.shape[0] != len(u):
        raise ValueError("matrix size does not match the vectors")
    form = np.eye(len(u)) - (2.0 / nu) * (np.outer(u, u) + np.outer(v, v))
    dev = float(np.abs(a - form).max())
    if dev > 1e-12 * max(1.0, float(np.abs(form).max())):
        gram_failures.append(f"matrix deviates from projector form by {dev:g}")
    return _run_checks(a, g, 2, gram_failures, involution_tol, zero_tol)


def verify_matrix(
    matrix,
    g: Graph,
    expected_neg_one_mult: int | None = None,
    involution_tol: float = INVOLUTION_TOL,
    zero_tol: float = ZERO_TOL,
) -> VerifyReport:
    """Matrix-only verification (no vector pair): involution, pattern,
    multiplicity consistency, and optionally a required -1-multiplicity."""
    a = _as_symmetric(matrix)
    return _run_checks(a, g, expected_neg_one_mult, [], involution_tol, zero_tol)
