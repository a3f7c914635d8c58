"""Basic structural algorithms: BFS distances, connectivity, girth, shells."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import PreconditionError

#: marker used for unreachable vertices in distance output
UNREACHABLE = -1


def bfs_distances(g, source):
    """Exact hop distances from source; UNREACHABLE (-1) marks unreachable."""
    if not 0 <= source < g.n:
        raise PreconditionError(f"source {source} out of range for n={g.n}")
    indptr, indices = g.csr()
    return _kernels.single_source_distances(indptr, indices, g.n, source)


def distance_matrix(g):
    """All-pairs hop distances as an int32 (n, n) array."""
    indptr, indices = g.csr()
    return _kernels.all_pairs_distances(indptr, indices, g.n)


def is_connected(g):
    return bool((bfs_distances(g, 0) >= 0).all())


def girth(g):
    """Length of the shortest cycle; None for forests (acyclic marker)."""
    indptr, indices = g.csr()
    value = _kernels.girth_value(indptr, indices, g.n)
    return None if value < 0 else int(value)


def distance_levels(g, root):
    """Shells around root: [{root}, neighbors, ...] as sorted vertex tuples.

    Requires a connected graph so the shells partition the vertex set.
    """
    dist = bfs_distances(g, root)
    if (dist < 0).any():
        raise PreconditionError("distance levels need a connected graph")
    d = int(dist.max())
    shells = [[] for _ in range(d + 1)]
    for v in range(g.n):
        shells[int(dist[v])].append(v)
    return [tuple(s) for s in shells]


def is_bipartite(g):
    color = np.full(g.n, -1, dtype=np.int8)
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def triangle_vertices(g):
    """Set of vertices lying on at least one triangle."""
    out = set()
    rows = g.bitrows
    for u, v in g.edges:
        common = rows[u] & rows[v]
        if common:
            out.add(u)
            out.add(v)
            while common:
                low = common & -common
                out.add(low.bit_length() - 1)
                common ^= low
    return out


def has_triangle(g):
    rows = g.bitrows
    for u, v in g.edges:
        if rows[u] & rows[v]:
            return True
    return False
