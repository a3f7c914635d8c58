"""Numba-compiled kernels; mirrors py_impl exactly, value for value."""

import numpy as np
from numba import njit


@njit(cache=True)
def _bfs_fill(indptr, indices, n, source, dist):
    queue = np.empty(n, dtype=np.int32)
    dist[:] = -1
    dist[source] = 0
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v]
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if dist[w] < 0:
                dist[w] = dv + 1
                queue[tail] = w
                tail += 1


@njit(cache=True)
def single_source_distances(indptr, indices, n, source):
    dist = np.empty(n, dtype=np.int32)
    _bfs_fill(indptr, indices, n, source, dist)
    return dist


@njit(cache=True)
def all_pairs_distances(indptr, indices, n):
    out = np.empty((n, n), dtype=np.int32)
    for s in range(n):
        _bfs_fill(indptr, indices, n, s, out[s])
    return out


@njit(cache=True)
def girth_value(indptr, indices, n):
    best = -1
    dist = np.empty(n, dtype=np.int32)
    parent = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for s in range(n):
        dist[:] = -1
        parent[:] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            v = queue[head]
            head += 1
            if best > 0 and dist[v] * 2 >= best:
                break
            for i in range(indptr[v], indptr[v + 1]):
                w = indices[i]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue[tail] = w
                    tail += 1
                elif w != parent[v] and dist[w] >= dist[v]:
                    c = dist[v] + dist[w] + 1
                    if best < 0 or c < best:
                        best = c
    return best


@njit(cache=True)
def brandes_float(indptr, indices, n):
    bc = np.zeros(n, dtype=np.float64)
    sigma = np.zeros(n, dtype=np.float64)
    dist = np.empty(n, dtype=np.int32)
    delta = np.zeros(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for s in range(n):
        sigma[:] = 0.0
        dist[:] = -1
        delta[:] = 0.0
        sigma[s] = 1.0
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        cnt = 0
        while head < tail:
            v = queue[head]
            head += 1
            order[cnt] = v
            cnt += 1
            for i in range(indptr[v], indptr[v + 1]):
                w = indices[i]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        for idx in range(cnt - 1, -1, -1):
            w = order[idx]
            coeff = (1.0 + delta[w]) / sigma[w]
            for i in range(indptr[w], indptr[w + 1]):
                v = indices[i]
                if dist[v] == dist[w] - 1:
                    delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return bc


@njit(cache=True)
def diag_powers_int64(A, k_max):
    n = A.shape[0]
    out = np.zeros((k_max + 1, n), dtype=np.int64)
    for v in range(n):
        out[0, v] = 1
    if k_max == 0:
        return out
    P = A.copy()
    for v in range(n):
        out[1, v] = P[v, v]
    for k in range(2, k_max + 1):
        P = P @ A
        for v in range(n):
            out[k, v] = P[v, v]
    return out
