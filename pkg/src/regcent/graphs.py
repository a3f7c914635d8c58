"""Immutable simple undirected graph plus the constructions used by the catalog.

Vertices are labelled 0..n-1 throughout. A Graph never holds self-loops or
duplicate edges; adjacency is exposed three ways (sorted neighbor tuples,
bitmask rows, numpy CSR arrays) because different kernels want different
layouts.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import GraphConstructionError


class Graph:
    """Simple undirected unweighted graph, immutable after construction."""

    __slots__ = ("n", "edges", "adjacency", "bitrows", "degrees", "_csr")

    def __init__(self, n, edges):
        if n < 1:
            raise GraphConstructionError(f"vertex count must be positive, got {n}")
        seen = set()
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphConstructionError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphConstructionError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphConstructionError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        norm.sort()
        adj = [[] for _ in range(n)]
        rows = [0] * n
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "bitrows", tuple(rows))
        object.__setattr__(self, "degrees", tuple(len(a) for a in adj))
        object.__setattr__(self, "_csr", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def m(self):
        return len(self.edges)

    def neighbors(self, v):
        return self.adjacency[v]

    def has_edge(self, u, v):
        return (self.bitrows[u] >> v) & 1 == 1

    def csr(self):
        """(indptr, indices) int32 arrays for the numeric kernels."""
        cached = self._csr
        if cached is None:
            indptr = np.zeros(self.n + 1, dtype=np.int32)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self.adjacency[v])
            indices = np.fromiter(
                (w for v in range(self.n) for w in self.adjacency[v]),
                dtype=np.int32,
                count=int(indptr[-1]),
            )
            cached = (indptr, indices)
            object.__setattr__(self, "_csr", cached)
        return cached

    def adjacency_matrix(self, dtype=np.int64):
        A = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges:
            A[u, v] = 1
            A[v, u] = 1
        return A


def from_bitrows(rows):
    n = len(rows)
    edges = []
    for u in range(n):
        r = rows[u] >> (u + 1)
        v = u + 1
        while r:
            if r & 1:
                edges.append((u, v))
            r >>= 1
            v += 1
    return Graph(n, edges)


def permute(g, perm):
    """Relabel g by the bijection perm (vertex i becomes perm[i])."""
    if sorted(perm) != list(range(g.n)):
        raise GraphConstructionError("perm is not a bijection on 0..n-1")
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def line_graph(g):
    """Graph on the edges of g; two edge-vertices adjacent iff they share an endpoint.

    Edge-vertex labels follow the lexicographic order of g.edges.
    """
    if g.m < 1:
        raise GraphConstructionError("line graph needs at least one edge")
    es = g.edges
    out = []
    for a, b in combinations(range(len(es)), 2):
        if set(es[a]) & set(es[b]):
            out.append((a, b))
    return Graph(len(es), out)


def seidel_switch(g, s):
    """Complement every edge/non-edge between s and its complement."""
    sset = set(s)
    for v in sset:
        if not 0 <= v < g.n:
            raise GraphConstructionError(f"switch vertex {v} out of range")
    edges = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            inside = (u in sset) == (v in sset)
            if inside:
                if g.has_edge(u, v):
                    edges.append((u, v))
            else:
                if not g.has_edge(u, v):
                    edges.append((u, v))
    return Graph(g.n, edges)


def from_lcf(n, shifts):
    """Cubic Hamiltonian graph from LCF notation.

    The cycle 0-1-...-(n-1)-0 gets one chord {i, i+shift_i mod n} per vertex.
    Standard LCF lists every chord from both endpoints, so the shift list must
    be reciprocal: shifts[(i + shifts[i]) % n] == -shifts[i] (mod n).
    """
    if n < 3 or n % 2:
        raise GraphConstructionError(f"LCF needs an even cycle length >= 4, got {n}")
    if len(shifts) != n:
        raise GraphConstructionError(
            f"need {n} shifts (repeat the pattern), got {len(shifts)}"
        )
    edges = set()
    for i in range(n):
        edges.add((min(i, (i + 1) % n), max(i, (i + 1) % n)))
    for i, s in enumerate(shifts):
        r = s % n
        if r in (0, 1, n - 1):
            raise GraphConstructionError(f"shift {s} at position {i} duplicates a cycle edge")
        j = (i + s) % n
        if (j + shifts[j]) % n != i:
            raise GraphConstructionError(
                f"shift list not reciprocal at position {i}: chord ({i},{j}) "
                f"is not listed back from {j}"
            )
        edges.add((min(i, j), max(i, j)))
    g = Graph(n, sorted(edges))
    if any(d != 3 for d in g.degrees):
        raise GraphConstructionError("shift list does not produce a cubic graph")
    return g


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise GraphConstructionError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, list(combinations(range(n), 2)))


def star_graph(n):
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 2:
        raise GraphConstructionError("star needs n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)])


def petersen_graph():
    """Kneser graph K(5,2): vertices are 2-subsets of {0..4}, disjoint pairs adjacent."""
    verts = list(combinations(range(5), 2))
    edges = []
    for a in range(10):
        for b in range(a + 1, 10):
            if not set(verts[a]) & set(verts[b]):
                edges.append((a, b))
    return Graph(10, edges)
