"""Numeric kernels with explicit error contracts.

Closed-walk counts diag(A^k) are always exact: the implementation runs on
int64 while a proven entry bound fits, then promotes to Python big integers
(entries grow like lambda1^k, which overflows 64-bit words for e.g. a cubic
graph taken to its 125th power). Floating eigendecompositions carry residual
and orthonormality bounds that are checked, not assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DivergenceError, NumericFaultError, PreconditionError

_INT64_SAFE = 1 << 62

#: moduli for the optional walk-count screening pass; small enough that a
#: mod-p matmul never overflows int64 for n <= 512
_SCREEN_PRIMES = (134217689, 133999999)

EIG_RESIDUAL_FACTOR = 1e-12
SOLVE_RESIDUAL = 1e-10


def integer_matrix_power_diagonals(g, k_max):
    """Exact diag(A^k) for k = 0..k_max, as tuples of Python ints."""
    if k_max < 0:
        raise PreconditionError("k_max must be >= 0")
    n = g.n
    out = [tuple([1] * n)]
    if k_max == 0:
        return out
    out.append(tuple([0] * n))
    if k_max == 1:
        return out
    d_max = max(g.degrees) if g.degrees else 0
    if d_max == 0:
        return out + [tuple([0] * n) for _ in range(k_max - 1)]

    # int64 stage: safe while (max entry of A^k) * d_max stays below 2^62
    A = g.adjacency_matrix(dtype=np.int64)
    P = A
    k = 1
    max_entry = 1
    while k < k_max and max_entry * d_max < _INT64_SAFE:
        P = P @ A
        k += 1
        out.append(tuple(int(x) for x in np.diag(P)))
        max_entry = int(P.max())
    if k == k_max:
        return out

    # big-integer stage
    rows = [[int(x) for x in P[i]] for i in range(n)]
    adj = g.adjacency
    while k < k_max:
        rows = [
            [sum(row[w] for w in adj[j]) for j in range(n)]
            for row in rows
        ]
        k += 1
        out.append(tuple(rows[i][i] for i in range(n)))
    return out


def diag_powers_mod(g, k_max, prime):
    """diag(A^k) mod prime for k = 0..k_max; a difference mod p proves an exact one."""
    n = g.n
    if prime * prime * n >= (1 << 63):
        raise PreconditionError("modulus too large for overflow-free int64 matmul")
    A = g.adjacency_matrix(dtype=np.int64)
    out = np.zeros((k_max + 1, n), dtype=np.int64)
    out[0] = 1
    P = A.copy()
    if k_max >= 1:
        out[1] = np.diag(P)
    for k in range(2, k_max + 1):
        P = (P @ A) % prime
        out[k] = np.diag(P)
    return out


def screening_primes():
    return _SCREEN_PRIMES


def lambda1_upper(g):
    """Rigorous upper bound on the spectral radius from integer data."""
    if g.m == 0:
        return 0.0
    d_max = max(g.degrees)
    two_step = max(
        sum(g.degrees[w] for w in g.adjacency[v]) for v in range(g.n)
    )
    root = math.isqrt(two_step)
    if root * root < two_step:
        root += 1
    return float(min(d_max, root))


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues sorted descending with an orthonormal eigenvector matrix."""

    eigenvalues: np.ndarray
    vectors: np.ndarray  # column j pairs with eigenvalues[j]
    residual: float      # max_j ||A v_j - lambda_j v_j||_2
    ortho_defect: float  # ||V^T V - I||_max

    @property
    def lambda1(self):
        return float(self.eigenvalues[0])


def symmetric_eigendecomposition(g):
    A = g.adjacency_matrix(dtype=np.float64)
    w, V = np.linalg.eigh(A)
    idx = np.argsort(w)[::-1]
    w = w[idx]
    V = V[:, idx]
    resid = float(np.linalg.norm(A @ V - V * w, axis=0).max()) if g.n else 0.0
    ortho = float(np.abs(V.T @ V - np.eye(g.n)).max())
    scale = g.n * (1.0 if g.m else 0.0)
    bound = EIG_RESIDUAL_FACTOR * max(scale, 1.0)
    if resid > bound or ortho > EIG_RESIDUAL_FACTOR * max(g.n, 1):
        raise NumericFaultError(
            f"eigendecomposition out of tolerance: residual={resid:.3e}, "
            f"orthonormality defect={ortho:.3e}"
        )
    return SpectralDecomposition(w, V, resid, ortho)


def solve_resolvent(g, alpha, rhs=None):
    """Solve (I - alpha*A) x = rhs (all-ones by default) to 1e-10 residual."""
    if alpha < 0:
        raise PreconditionError("alpha must be non-negative")
    n = g.n
    b = np.ones(n) if rhs is None else np.asarray(rhs, dtype=np.float64)
    if alpha == 0.0:
        return b.copy()
    dec = symmetric_eigendecomposition(g)
    lam1 = dec.lambda1
    if lam1 > 0 and alpha >= 1.0 / lam1:
        raise DivergenceError(
            f"alpha={alpha} is not below 1/lambda1={1.0 / lam1:.12g}",
            spectral_radius=lam1,
        )
    A = g.adjacency_matrix(dtype=np.float64)
    M = np.eye(n) - alpha * A
    x = np.linalg.solve(M, b)
    for _ in range(4):
        r = b - M @ x
        if np.abs(r).max() <= SOLVE_RESIDUAL:
            return x
        x = x + np.linalg.solve(M, r)
    r = b - M @ x
    if np.abs(r).max() <= SOLVE_RESIDUAL:
        return x
    raise NumericFaultError(
        f"resolvent solve stalled at residual {np.abs(r).max():.3e}"
    )


def diag_powers_int64_checked(g, k_max):
    """int64 fast path for diag(A^k); returns None when overflow is possible."""
    d_max = max(g.degrees) if g.degrees else 0
    if d_max <= 1:
        return None
    if (k_max) * math.log2(d_max) >= 62:
        return None
    A = g.adjacency_matrix(dtype=np.int64)
    return _kernels.diag_powers_int64(A, k_max)
