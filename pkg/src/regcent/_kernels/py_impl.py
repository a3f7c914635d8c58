"""Pure numpy/Python reference implementations of the hot kernels."""

from collections import deque

import numpy as np


def single_source_distances(indptr, indices, n, source):
    """BFS hop distances from source; -1 marks unreachable vertices."""
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        dv = dist[v]
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if dist[w] < 0:
                dist[w] = dv + 1
                q.append(w)
    return dist


def all_pairs_distances(indptr, indices, n):
    out = np.empty((n, n), dtype=np.int32)
    for s in range(n):
        out[s] = single_source_distances(indptr, indices, n, s)
    return out


def girth_value(indptr, indices, n):
    """Length of the shortest cycle, or -1 for forests.

    Per-root BFS: an edge closing within a level gives an odd cycle, an edge
    between sibling branches one level apart gives an even one; the minimum
    over all roots is exact.
    """
    best = -1
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int32)
        parent = np.full(n, -1, dtype=np.int32)
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            if best > 0 and dist[v] * 2 >= best:
                break
            for i in range(indptr[v], indptr[v + 1]):
                w = indices[i]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
                elif w != parent[v] and dist[w] >= dist[v]:
                    c = dist[v] + dist[w] + 1
                    if best < 0 or c < best:
                        best = c
    return int(best)


def brandes_float(indptr, indices, n):
    """Floating betweenness under the ordered-pair convention (no halving).

    Used only as a scan prefilter and benchmark subject; exact values come
    from the rational implementation in the centrality module.
    """
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


def diag_powers_int64(A, k_max):
    """diag(A^k) for k = 0..k_max as int64; caller must guarantee no overflow."""
    n = A.shape[0]
    out = np.zeros((k_max + 1, n), dtype=np.int64)
    out[0] = 1
    if k_max == 0:
        return out
    P = A.copy()
    out[1] = np.diag(P)
    for k in range(2, k_max + 1):
        P = P @ A
        out[k] = np.diag(P)
    return out
