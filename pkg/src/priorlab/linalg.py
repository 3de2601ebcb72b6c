"""Small dense linear algebra and vector samplers used by every sampler.

Matrices are plain float ndarrays with row-major semantics.  Sizes stay
tiny (k <= 64 by contract, k = 2 in practice), so the Cholesky loop is
written out rather than delegated: the explicit pivot test is what lets
callers distinguish "degenerate covariance" from a numpy LinAlgError.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, NotPositiveDefinite
from .rng import RngStream

MAX_CHOLESKY_DIM = 64


def cholesky(a) -> np.ndarray:
    """Lower-triangular L with L @ L.T == a for symmetric positive-definite a.

    Raises NotPositiveDefinite when a pivot falls at or below
    1e-13 * max|a|, the signal for a degenerate covariance.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"cholesky needs a square matrix, got shape {a.shape}")
    k = a.shape[0]
    if k > MAX_CHOLESKY_DIM:
        raise DomainError(f"cholesky supports k <= {MAX_CHOLESKY_DIM}, got {k}")
    scale = np.max(np.abs(a)) if k else 0.0
    if not np.all(np.abs(a - a.T) <= 1e-12 * max(scale, 1e-300)):
        raise DomainError("cholesky needs a symmetric matrix")
    tol = 1e-13 * scale
    L = np.zeros_like(a)
    for i in range(k):
        s = a[i, i] - np.dot(L[i, :i], L[i, :i])
        if s <= tol:
            raise NotPositiveDefinite(f"pivot {s:.3e} at index {i} (tol {tol:.3e})")
        L[i, i] = np.sqrt(s)
        if i + 1 < k:
            L[i + 1 :, i] = (a[i + 1 :, i] - L[i + 1 :, :i] @ L[i, :i]) / L[i, i]
    return L


def mvn_sample(mean, cov, rng: RngStream) -> np.ndarray:
    """One multivariate normal draw, mean + L z with z iid standard normal."""
    mean = np.asarray(mean, dtype=float)
    L = cholesky(cov)
    z = rng.standard_normal(mean.shape[0])
    return mean + L @ z


def dirichlet_sample(gamma, rng: RngStream, size=None) -> np.ndarray:
    """Dirichlet draws: shape (K,) for size None, else (size, K).

    Components are nonnegative and each row sums to 1 within 1e-12.
    """
    gamma = np.asarray(gamma, dtype=float)
    if gamma.ndim != 1 or gamma.size == 0:
        raise DomainError("gamma must be a nonempty 1-D vector")
    if not np.all(gamma > 0):
        raise DomainError("all Dirichlet parameters must be > 0")
    n = 1 if size is None else int(size)
    out = rng.generator.gamma(gamma, 1.0, size=(n, gamma.size))
    total = out.sum(axis=1)
    # Underflow to an all-zero row is possible for tiny shapes; redraw.
    bad = total <= 0.0
    while np.any(bad):
        out[bad] = rng.generator.gamma(gamma, 1.0, size=(int(bad.sum()), gamma.size))
        total = out.sum(axis=1)
        bad = total <= 0.0
    out /= total[:, None]
    return out[0] if size is None else out


def logit_inv(u):
    """Overflow-safe inverse logit, exp(u)/(1+exp(u)), elementwise."""
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    pos = u >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-u[pos]))
    eu = np.exp(u[~pos])
    out[~pos] = eu / (1.0 + eu)
    if out.ndim == 0:
        return float(out)
    return out


def bernoulli_variance(eta):
    """rho * (1 - rho) for rho = logit_inv(eta), computed symmetrically.

    Uses exp(-|eta|)/(1+exp(-|eta|))**2, which keeps full relative
    precision in both tails.
    """
    eta = np.asarray(eta, dtype=float)
    t = np.exp(-np.abs(eta))
    out = t / (1.0 + t) ** 2
    if out.ndim == 0:
        return float(out)
    return out
