"""Pure-Python kernels.

Reference implementations of the scan/sweep loops that dominate the
exhaustive and batch workloads.  The compiled extension in ``_native.pyx``
implements the same functions with identical iteration order, so both
backends return identical witnesses; this module is what you get when the
extension is unavailable or ``TWOEIG_PURE=1`` is set.

All adjacency arguments are square C-contiguous uint8 numpy arrays with a
zero diagonal.
"""
from __future__ import annotations

import math

import numpy as np

BACKEND = "pure"


def induced_p4(adj):
    """First (lexicographic) ordered 4-tuple inducing a 3-edge path, or None.

    The returned tuple (a, b, c, d) has exactly the edges ab, bc, cd among
    its six vertex pairs.
    """
    n = adj.shape[0]
    rows = adj.tolist()
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            if b == a or not ra[b]:
                continue
            rb = rows[b]
            for c in range(n):
                if c == a or c == b or not rb[c] or ra[c]:
                    continue
                rc = rows[c]
                for d in range(n):
                    if d == a or d == b or d == c:
                        continue
                    if rc[d] and not rb[d] and not ra[d]:
                        return (a, b, c, d)
    return None


def coclique3(adj):
    """First (lexicographic) triple i < j < k of pairwise non-adjacent vertices, or None."""
    n = adj.shape[0]
    rows = adj.tolist()
    for i in range(n):
        ri = rows[i]
        for j in range(i + 1, n):
            if ri[j]:
                continue
            rj = rows[j]
            for k in range(j + 1, n):
                if not ri[k] and not rj[k]:
                    return (i, j, k)
    return None


def bfs_unique_distances(adj, src):
    """BFS distances from ``src`` plus a uniqueness flag per target.

    Returns ``(dist, unique)`` where ``dist[v]`` is the BFS distance
    (-1 if unreachable) and ``unique[v]`` is 1 iff exactly one shortest
    src-v path exists.  Shortest-path counts are accumulated with the
    predecessor recurrence, capped at 2: only "one versus many" matters.
    """
    n = adj.shape[0]
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.int64)
    dist[src] = 0
    sigma[src] = 1
    rows = adj.tolist()
    queue = [src]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du1 = dist[u] + 1
        su = sigma[u]
        ru = rows[u]
        for w in range(n):
            if not ru[w]:
                continue
            if dist[w] < 0:
                dist[w] = du1
                sigma[w] = su
                queue.append(w)
            elif dist[w] == du1:
                s = sigma[w] + su
                sigma[w] = 2 if s > 2 else s
    return dist, (sigma == 1).astype(np.uint8)


def _offdiag_norm(a):
    # sum off-diagonal squares directly: subtracting the diagonal sum from
    # the total cancels catastrophically once the matrix is near-diagonal
    sq = a * a
    np.fill_diagonal(sq, 0.0)
    return math.sqrt(float(sq.sum()))


def _one_sweep(a, n):
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            app = a[p, p]
            aqq = a[q, q]
            theta = float(aqq - app) / (2.0 * float(apq))
            if abs(theta) > 1.0e154:  # theta**2 would overflow
                t = 1.0 / (2.0 * theta)
            else:
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
            c = 1.0 / math.sqrt(t * t + 1.0)
            s = t * c
            colp = a[:, p].copy()
            colq = a[:, q].copy()
            a[:, p] = c * colp - s * colq
            a[:, q] = s * colp + c * colq
            a[p, :] = a[:, p]
            a[q, :] = a[:, q]
            a[p, p] = c * c * app - 2.0 * s * c * apq + s * s * aqq
            a[q, q] = s * s * app + 2.0 * s * c * apq + c * c * aqq
            a[p, q] = 0.0
            a[q, p] = 0.0


def jacobi_sweeps(a, rel_tol, max_sweeps):
    """Cyclic Jacobi diagonalization of a symmetric float64 matrix (in place).

    Sweeps rotate every off-diagonal position in row order until the
    off-diagonal Frobenius norm drops to ``rel_tol`` times the Frobenius
    norm of the input.  Returns ``(eigenvalues_ascending, sweeps, converged)``.
    """
    n = a.shape[0]
    if n < 2:
        return np.diagonal(a).copy(), 0, True
    stop = rel_tol * math.sqrt(float((a * a).sum()))
    sweeps = 0
    while True:
        if _offdiag_norm(a) <= stop:
            return np.sort(np.diagonal(a).copy()), sweeps, True
        if sweeps >= max_sweeps:
            return np.sort(np.diagonal(a).copy()), sweeps, False
        _one_sweep(a, n)
        sweeps += 1
