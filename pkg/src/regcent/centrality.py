"""Centrality and communicability measures, each with an exactness contract.

Measures whose defining claims in this project are exact-equality claims
(closeness, betweenness, degree) are computed in exact rational arithmetic;
spectral quantities are floating point with stated absolute error bounds.
Betweenness uses the ordered-pair convention: bc_i sums sigma_jk(i)/sigma_jk
over ordered pairs (j, k), which reproduces integer-valued vectors on the
counterexample catalog (the unordered convention halves them).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    ConnectivityError,
    DivergenceError,
    PreconditionError,
    UndefinedMeasureError,
)
from .numerics import (
    integer_matrix_power_diagonals,
    lambda1_upper,
    solve_resolvent,
    symmetric_eigendecomposition,
)
from .structure import distance_matrix, is_connected

#: relative gap used when clustering floating vectors into value classes
FLOAT_CLUSTER_REL = 1e-9


@dataclass(frozen=True)
class CentralityVector:
    """Per-vertex values of one measure.

    Exact vectors (ints / Fractions) carry no error bound; floating vectors
    carry a positive absolute bound.
    """

    measure: str
    values: tuple
    exact: bool
    error_bound: float | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.exact and self.error_bound is not None:
            raise PreconditionError("exact vectors carry no error bound")
        if not self.exact and not (self.error_bound and self.error_bound > 0):
            raise PreconditionError("floating vectors need a positive error bound")


@dataclass(frozen=True)
class UniformityReport:
    distinct: int
    is_uniform: bool
    spread: object   # Fraction for exact vectors, float otherwise
    variance: object

    def __post_init__(self):
        if self.is_uniform != (self.distinct == 1):
            raise PreconditionError("is_uniform must mirror distinct == 1")


def degree_centrality(g):
    return CentralityVector("degree", tuple(g.degrees), exact=True)


def eigenvector_centrality(g):
    """Perron vector of A, L2-normalized and positive; residual <= 1e-10."""
    if not is_connected(g):
        raise ConnectivityError("eigenvector centrality needs a connected graph")
    dec = symmetric_eigendecomposition(g)
    vec = dec.vectors[:, 0].copy()
    if vec.sum() < 0:
        vec = -vec
    vec /= np.linalg.norm(vec)
    A = g.adjacency_matrix(dtype=np.float64)
    resid = float(np.abs(A @ vec - dec.lambda1 * vec).max())
    if g.n > 1 and (vec <= 0).any():
        raise PreconditionError("Perron vector not strictly positive; numeric fault")
    if resid > 1e-10:
        raise PreconditionError(f"eigenvector residual {resid:.3e} above 1e-10")
    return CentralityVector(
        "eigenvector",
        tuple(float(x) for x in vec),
        exact=False,
        error_bound=max(resid, 1e-15),
        params={"lambda1": dec.lambda1},
    )


def closeness_centrality(g):
    """cc_i = (n-1) / sum_j P(i,j) as exact rationals."""
    if g.n < 2:
        raise UndefinedMeasureError("closeness undefined on a single vertex")
    D = distance_matrix(g)
    if (D < 0).any():
        raise ConnectivityError("closeness centrality needs a connected graph")
    sums = D.sum(axis=1)
    vals = tuple(Fraction(g.n - 1, int(s)) for s in sums)
    return CentralityVector("closeness", vals, exact=True)


def distance_sums(g):
    """Row sums of the distance matrix (the denominators of closeness)."""
    D = distance_matrix(g)
    if (D < 0).any():
        raise ConnectivityError("distance sums need a connected graph")
    return tuple(int(s) for s in D.sum(axis=1))


def betweenness_centrality(g):
    """Exact rational betweenness over ordered pairs, via Brandes accumulation.

    Path counts are Python ints (arbitrary precision); dependencies are
    Fractions, so the result is exact.
    """
    if not is_connected(g):
        raise ConnectivityError("betweenness centrality needs a connected graph")
    n = g.n
    adj = g.adjacency
    bc = [Fraction(0)] * n
    for s in range(n):
        order = []
        preds = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            order.append(v)
            dv1 = dist[v] + 1
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv1
                    q.append(w)
                if dist[w] == dv1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [Fraction(0)] * n
        for w in reversed(order):
            if preds[w]:
                coeff = (1 + delta[w]) / sigma[w]
                for v in preds[w]:
                    delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return CentralityVector("betweenness", tuple(bc), exact=True)


def _series_truncation_order(bound, tol):
    """Smallest K with K+1 >= 2*bound and 2*bound^(K+1)/(K+1)! < tol."""
    if bound <= 0:
        return 0
    k = max(0, int(math.ceil(2 * bound)) - 1)
    while True:
        log_tail = math.log(2) + (k + 1) * math.log(bound) - math.lgamma(k + 2)
        if k + 1 >= 2 * bound and log_tail < math.log(tol):
            return k
        k += 1


def subgraph_centrality_series(g, tol=1e-12):
    """sc_i = sum_k (A^k)_ii / k!, truncated once the spectral tail is below tol.

    Walk counts are exact integers and the partial sum is taken over a common
    denominator, so the only error is the truncation tail.
    """
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    bound = lambda1_upper(g)
    K = _series_truncation_order(bound, tol)
    diags = integer_matrix_power_diagonals(g, K)
    # sum_k d_k * (K!/k!) / K!  -- one exact rational per vertex
    weights = [1] * (K + 1)
    for k in range(K - 1, -1, -1):
        weights[k] = weights[k + 1] * (k + 1)
    denom = weights[0] if K >= 0 else 1
    vals = []
    for i in range(g.n):
        num = sum(diags[k][i] * weights[k] for k in range(K + 1))
        vals.append(float(Fraction(num, denom)))
    return CentralityVector(
        "subgraph",
        tuple(vals),
        exact=False,
        error_bound=tol,
        params={"terms": K + 1, "tol": tol},
    )


def subgraph_centrality_spectral(g):
    """sc_i = sum_j (v_j^i)^2 e^(lambda_j) from the eigendecomposition."""
    dec = symmetric_eigendecomposition(g)
    expw = np.exp(dec.eigenvalues)
    vals = (dec.vectors**2) @ expw
    scale = float(expw.max()) if g.n else 1.0
    err = (dec.residual + dec.ortho_defect + 8 * np.finfo(float).eps) * g.n * scale
    return CentralityVector(
        "subgraph",
        tuple(float(x) for x in vals),
        exact=False,
        error_bound=max(err, 1e-15),
        params={"route": "spectral"},
    )


def katz_centrality(g, alpha):
    """Row sums of (I - alpha*A)^-1; alpha must lie below 1/lambda1."""
    if alpha < 0:
        raise PreconditionError("alpha must be non-negative")
    if alpha == 0:
        return CentralityVector(
            "katz", tuple([1.0] * g.n), exact=False, error_bound=1e-15,
            params={"alpha": 0.0},
        )
    x = solve_resolvent(g, alpha)
    lam1 = symmetric_eigendecomposition(g).lambda1
    err = 1e-10 / max(1e-12, 1.0 - alpha * max(lam1, 0.0))
    return CentralityVector(
        "katz",
        tuple(float(v) for v in x),
        exact=False,
        error_bound=err,
        params={"alpha": alpha},
    )


class ExponentialCoefficients:
    """c_k = 1/k!; converges everywhere."""

    radius = math.inf

    def value(self, k):
        return 1.0 / math.factorial(k)

    def tail_bound(self, K, x):
        if x <= 0:
            return 0.0
        if K + 2 < 2 * x:
            return math.inf
        return 2.0 * math.exp((K + 1) * math.log(x) - math.lgamma(K + 2))

    def describe(self):
        return "1/k!"


class GeometricCoefficients:
    """c_k = alpha^k; converges for |x| < 1/alpha."""

    def __init__(self, alpha):
        if alpha <= 0:
            raise PreconditionError("alpha must be positive")
        self.alpha = alpha
        self.radius = 1.0 / alpha

    def value(self, k):
        return self.alpha**k

    def tail_bound(self, K, x):
        q = self.alpha * x
        if q >= 1:
            return math.inf
        return q ** (K + 1) / (1 - q)

    def describe(self):
        return f"alpha^k, alpha={self.alpha!r}"


class FiniteCoefficients:
    """Explicit finite list; everything beyond it is zero."""

    radius = math.inf

    def __init__(self, values):
        self.values = tuple(float(v) for v in values)

    def value(self, k):
        return self.values[k] if k < len(self.values) else 0.0

    def tail_bound(self, K, x):
        return sum(abs(c) * x**k for k, c in enumerate(self.values) if k > K)

    def describe(self):
        return f"finite{list(self.values)!r}"


def _check_radius(g, coefficients):
    lam1 = symmetric_eigendecomposition(g).lambda1 if g.m else 0.0
    safe = lam1 * (1 + 1e-12) + 1e-12
    if coefficients.radius <= safe:
        raise DivergenceError(
            f"coefficient radius {coefficients.radius} does not exceed "
            f"lambda1={lam1:.12g}",
            spectral_radius=lam1,
        )
    return lam1


def communicability(g, coefficients, tol=1e-10):
    """c_i = sum_k c_k sum_j (A^k)_ij with the declared coefficient decay."""
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    lam1 = _check_radius(g, coefficients)
    x = max(lam1 * (1 + 1e-12) + 1e-12, 1e-12)
    sqrtn = math.sqrt(g.n)
    adj = g.adjacency
    vec = [1] * g.n  # exact A^k * 1
    total = np.zeros(g.n)
    k = 0
    while True:
        ck = coefficients.value(k)
        if ck:
            total += ck * np.array([float(v) for v in vec], dtype=np.float64)
        if sqrtn * coefficients.tail_bound(k, x) < tol:
            break
        vec = [sum(vec[w] for w in adj[v]) for v in range(g.n)]
        k += 1
        if k > 100000:
            raise PreconditionError("series did not reach tolerance in 100000 terms")
    return CentralityVector(
        "communicability",
        tuple(float(v) for v in total),
        exact=False,
        error_bound=tol,
        params={"coefficients": coefficients.describe(), "tol": tol, "terms": k + 1},
    )


def self_communicability(g, coefficients, tol=1e-10):
    """Diagonal restriction of communicability: c_ii = sum_k c_k (A^k)_ii."""
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    lam1 = _check_radius(g, coefficients)
    x = max(lam1 * (1 + 1e-12) + 1e-12, 1e-12)
    K = 0
    while coefficients.tail_bound(K, x) >= tol:
        K += 1
        if K > 100000:
            raise PreconditionError("series did not reach tolerance in 100000 terms")
    diags = integer_matrix_power_diagonals(g, K)
    total = np.zeros(g.n)
    for k in range(K + 1):
        ck = coefficients.value(k)
        if ck:
            total += ck * np.array([float(v) for v in diags[k]], dtype=np.float64)
    return CentralityVector(
        "self-communicability",
        tuple(float(v) for v in total),
        exact=False,
        error_bound=tol,
        params={"coefficients": coefficients.describe(), "tol": tol, "terms": K + 1},
    )


def uniformity(vector):
    """Distinct-value count, spread and variance of one centrality vector.

    Exact vectors use exact comparisons; floating vectors are clustered with
    gap threshold max(1e-9 * |mean|, 2 * error bound).
    """
    vals = vector.values
    n = len(vals)
    if n == 0:
        raise PreconditionError("empty centrality vector")
    if vector.exact:
        exact_vals = [Fraction(v) for v in vals]
        distinct = len(set(exact_vals))
        mean = sum(exact_vals, Fraction(0)) / n
        var = sum((v - mean) ** 2 for v in exact_vals) / n
        spread = max(exact_vals) - min(exact_vals)
        return UniformityReport(distinct, distinct == 1, spread, var)
    fvals = sorted(float(v) for v in vals)
    mean = math.fsum(fvals) / n
    gap = max(FLOAT_CLUSTER_REL * abs(mean), 2.0 * (vector.error_bound or 0.0))
    distinct = 1
    for a, b in zip(fvals, fvals[1:]):
        if b - a > gap:
            distinct += 1
    spread = fvals[-1] - fvals[0]
    var = math.fsum((v - mean) ** 2 for v in fvals) / n
    return UniformityReport(distinct, distinct == 1, spread, var)
