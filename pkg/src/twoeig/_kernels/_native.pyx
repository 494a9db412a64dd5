# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: P4/coclique scans, BFS uniqueness, Jacobi sweeps.

Must stay semantically identical (including iteration order) to the
pure-Python implementations in ``pure.py``.
"""
from libc.math cimport sqrt, fabs, copysign

import numpy as np

BACKEND = "native"


def induced_p4(const unsigned char[:, ::1] adj):
    """First (lexicographic) ordered 4-tuple inducing a 3-edge path, or None."""
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t a, b, c, d
    for a in range(n):
        for b in range(n):
            if b == a or not adj[a, b]:
                continue
            for c in range(n):
                if c == a or c == b or not adj[b, c] or adj[a, c]:
                    continue
                for d in range(n):
                    if d == a or d == b or d == c:
                        continue
                    if adj[c, d] and not adj[b, d] and not adj[a, d]:
                        return (int(a), int(b), int(c), int(d))
    return None


def coclique3(const unsigned char[:, ::1] adj):
    """First (lexicographic) triple i < j < k of pairwise non-adjacent vertices, or None."""
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t i, j, k
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j]:
                continue
            for k in range(j + 1, n):
                if not adj[i, k] and not adj[j, k]:
                    return (int(i), int(j), int(k))
    return None


def bfs_unique_distances(const unsigned char[:, ::1] adj, Py_ssize_t src):
    """BFS distances from src plus a shortest-path uniqueness flag per target."""
    cdef Py_ssize_t n = adj.shape[0]
    dist_arr = np.full(n, -1, dtype=np.int64)
    sigma_arr = np.zeros(n, dtype=np.int64)
    queue_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] dist = dist_arr
    cdef long long[::1] sigma = sigma_arr
    cdef long long[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, u, w
    cdef long long du1, su, s
    dist[src] = 0
    sigma[src] = 1
    queue[tail] = src
    tail += 1
    while head < tail:
        u = <Py_ssize_t> queue[head]
        head += 1
        du1 = dist[u] + 1
        su = sigma[u]
        for w in range(n):
            if not adj[u, w]:
                continue
            if dist[w] < 0:
                dist[w] = du1
                sigma[w] = su
                queue[tail] = w
                tail += 1
            elif dist[w] == du1:
                s = sigma[w] + su
                sigma[w] = 2 if s > 2 else s
    return dist_arr, (sigma_arr == 1).astype(np.uint8)


cdef double _offdiag_norm(double[:, ::1] a, Py_ssize_t n):
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j] * a[i, j]
    return sqrt(acc)


cdef void _one_sweep(double[:, ::1] a, Py_ssize_t n):
    cdef Py_ssize_t p, q, i
    cdef double apq, app, aqq, theta, t, c, s, aip, aiq
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            app = a[p, p]
            aqq = a[q, q]
            theta = (aqq - app) / (2.0 * apq)
            if fabs(theta) > 1.0e154:  # theta**2 would overflow
                t = 1.0 / (2.0 * theta)
            else:
                t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
            c = 1.0 / sqrt(t * t + 1.0)
            s = t * c
            for i in range(n):
                aip = a[i, p]
                aiq = a[i, q]
                a[i, p] = c * aip - s * aiq
                a[i, q] = s * aip + c * aiq
            for i in range(n):
                a[p, i] = a[i, p]
                a[q, i] = a[i, q]
            a[p, p] = c * c * app - 2.0 * s * c * apq + s * s * aqq
            a[q, q] = s * s * app + 2.0 * s * c * apq + c * c * aqq
            a[p, q] = 0.0
            a[q, p] = 0.0


def jacobi_sweeps(double[:, ::1] a, double rel_tol, int max_sweeps):
    """Cyclic Jacobi diagonalization in place; returns (values, sweeps, converged)."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j
    cdef double norm = 0.0, stop
    cdef int sweeps = 0
    diag = np.empty(n, dtype=np.float64)
    if n < 2:
        for i in range(n):
            diag[i] = a[i, i]
        return diag, 0, True
    for i in range(n):
        for j in range(n):
            norm += a[i, j] * a[i, j]
    stop = rel_tol * sqrt(norm)
    while True:
        if _offdiag_norm(a, n) <= stop:
            for i in range(n):
                diag[i] = a[i, i]
            return np.sort(diag), sweeps, True
        if sweeps >= max_sweeps:
            for i in range(n):
                diag[i] = a[i, i]
            return np.sort(diag), sweeps, False
        _one_sweep(a, n)
        sweeps += 1
