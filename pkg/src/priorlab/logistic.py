"""Two-parameter logistic regression under four noninformative priors.

The model is P(y=1 | x) = logit_inv(alpha + beta * x) with a single
covariate.  The module provides the log-likelihood, an IRLS maximum
likelihood fit with its observed Fisher information, the four prior
log-densities (iid normal, g-prior, flat, Jeffreys), and two
Metropolis-Hastings kernels sharing the same target:

* ``rw_metropolis`` - Gaussian random walk with covariance
  c^2 * inv(fisher_info), c defaulting to 2.38/sqrt(2), optionally
  tuned during burn-in only;
* ``fisher_proposal_mh`` - independence sampler whose fixed proposal is
  the normal approximation N(theta_hat, inv(fisher_info)).

Both return a :class:`Chain` of kept draws with acceptance bookkeeping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateProposal,
    DomainError,
    NotConverged,
    NotPositiveDefinite,
    Separation,
    UnsimulablePrior,
)
from .linalg import bernoulli_variance, cholesky, logit_inv
from .rng import RngStream

DEFAULT_RW_SCALE = 2.38 / math.sqrt(2.0)
SEPARATION_GUARD = 1e6


@dataclass
class BinaryDataset:
    """Binary response ``y`` in {0,1} with one real covariate ``x``."""

    y: np.ndarray
    x: np.ndarray

    def __post_init__(self):
        self.y = np.asarray(self.y)
        self.x = np.asarray(self.x, dtype=float)
        if self.y.ndim != 1 or self.x.ndim != 1 or len(self.y) != len(self.x):
            raise DomainError("y and x must be 1-D vectors of equal length")
        if len(self.y) < 1:
            raise DomainError("dataset must contain at least one row")
        if not np.all((self.y == 0) | (self.y == 1)):
            raise DomainError("y values must be 0 or 1")
        self.y = self.y.astype(int)

    @property
    def n(self) -> int:
        return len(self.y)

    def design_matrix(self) -> np.ndarray:
        """n x 2 design [1, x]."""
        return np.column_stack([np.ones(self.n), self.x])


@dataclass(frozen=True)
class IidNormal:
    """Independent N(0, sigma^2) on both coefficients."""

    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError("IidNormal: sigma must be > 0")


@dataclass(frozen=True)
class GPrior:
    """Zero-mean normal with covariance g * inv(X'X)."""

    g: float

    def __post_init__(self):
        if not self.g > 0:
            raise DomainError("GPrior: g must be > 0")


@dataclass(frozen=True)
class Flat:
    """Improper constant density."""


@dataclass(frozen=True)
class Jeffreys:
    """Square root of the determinant of the Fisher information."""


LogisticPrior = IidNormal | GPrior | Flat | Jeffreys


@dataclass
class GlmFit:
    theta_hat: tuple[float, float]
    fisher_info: np.ndarray
    iterations: int
    converged: bool


@dataclass
class MHConfig:
    """Sampler run lengths and tuning.

    ``iterations`` counts total kernel steps including burn-in, so the
    chain keeps ``iterations - burnin`` draws.  ``proposal_scale`` is the
    factor c; None means the 2.38/sqrt(2) default.  With ``adapt`` set,
    c is retuned during burn-in only (toward acceptance in [0.2, 0.5])
    and frozen afterwards, which keeps the post-burn-in kernel valid.
    """

    seed: int
    iterations: int = 10_000
    burnin: int = 1_000
    proposal_scale: float | None = None
    adapt: bool = False

    def __post_init__(self):
        if not 0 <= self.burnin < self.iterations:
            raise DomainError("need 0 <= burnin < iterations")
        if self.proposal_scale is not None and not self.proposal_scale > 0:
            raise DomainError("proposal_scale must be > 0")


@dataclass
class Chain:
    """Kept posterior draws plus acceptance bookkeeping."""

    draws: np.ndarray
    logpost: np.ndarray
    accept_rate: float
    prior: LogisticPrior
    config: MHConfig
    tuned_scale: float = field(default=float("nan"))


def loglik(theta, data: BinaryDataset) -> float:
    """Bernoulli log-likelihood sum(y*eta - log(1+exp(eta))), overflow-safe."""
    alpha, beta = float(theta[0]), float(theta[1])
    eta = alpha + beta * data.x
    return float(np.dot(data.y, eta) - np.logaddexp(0.0, eta).sum())


def fit_mle(data: BinaryDataset, tol: float = 1e-8, max_iter: int = 100) -> GlmFit:
    """Newton/IRLS maximum likelihood fit of (alpha, beta).

    Iterates until the gradient max-norm drops below ``tol``.  Raises
    Separation when the iterates blow past 1e6 (complete separation) and
    NotConverged when the iteration budget runs out.  The returned
    ``fisher_info`` is X'WX with W = diag(rho*(1-rho)) at the optimum.
    """
    y01 = data.y
    if y01.min() == y01.max():
        raise DomainError("MLE needs both response classes present")
    if np.ptp(data.x) == 0:
        raise DomainError("MLE needs a non-constant covariate")
    X = data.design_matrix()
    yf = y01.astype(float)
    theta = np.zeros(2)
    ll = loglik(theta, data)
    for it in range(1, max_iter + 1):
        eta = X @ theta
        rho = logit_inv(eta)
        grad = X.T @ (yf - rho)
        if np.max(np.abs(grad)) < tol:
            w = bernoulli_variance(eta)
            info = (X * w[:, None]).T @ X
            return GlmFit((float(theta[0]), float(theta[1])), info, it - 1, True)
        w = bernoulli_variance(eta)
        info = (X * w[:, None]).T @ X
        step = np.linalg.solve(info, grad)
        # Step-halving keeps Newton monotone on flat likelihoods.
        new_theta = theta + step
        new_ll = loglik(new_theta, data)
        halvings = 0
        while new_ll < ll and halvings < 30:
            step *= 0.5
            new_theta = theta + step
            new_ll = loglik(new_theta, data)
            halvings += 1
        theta, ll = new_theta, new_ll
        if np.max(np.abs(theta)) > SEPARATION_GUARD:
            raise Separation("MLE iterates exceeded 1e6; data are separated")
    raise NotConverged(f"IRLS did not converge in {max_iter} iterations")


def _jeffreys_logdet(theta, X):
    eta = X @ theta
    w = bernoulli_variance(eta)
    s0 = float(w.sum())
    s1 = float(np.dot(w, X[:, 1]))
    s2 = float(np.dot(w, X[:, 1] ** 2))
    det = s0 * s2 - s1 * s1
    scale = max(s0 * s2, s1 * s1)
    if det < -1e-12 * scale:
        raise DomainError("Jeffreys determinant negative: degenerate design")
    if det <= 1e-12 * scale or det <= 0.0:
        return -math.inf
    return math.log(det)


def log_prior(prior: LogisticPrior, theta, X=None) -> float:
    """Log prior density at theta, up to an additive constant per prior.

    GPrior and Jeffreys need the n x 2 design ``X`` (intercept column
    plus covariate).  Jeffreys returns -inf where the information
    determinant vanishes (e.g. a rank-deficient one-row design).
    """
    alpha, beta = float(theta[0]), float(theta[1])
    if isinstance(prior, IidNormal):
        return -(alpha * alpha + beta * beta) / (2.0 * prior.sigma**2)
    if isinstance(prior, GPrior):
        if X is None:
            raise DomainError("GPrior log density needs the design matrix")
        v = X @ np.array([alpha, beta])
        return -float(v @ v) / (2.0 * prior.g)
    if isinstance(prior, Flat):
        return 0.0
    if isinstance(prior, Jeffreys):
        if X is None:
            raise DomainError("Jeffreys log density needs the design matrix")
        return 0.5 * _jeffreys_logdet(np.array([alpha, beta]), X)
    raise TypeError(f"not a LogisticPrior: {prior!r}")


def _prior_covariance(prior, X):
    # Covariance of a *proper* prior; used to seed pure-prior runs.
    if isinstance(prior, IidNormal):
        return prior.sigma**2 * np.eye(2)
    if isinstance(prior, GPrior):
        if X is None:
            raise DomainError("GPrior covariance needs the design matrix")
        return prior.g * np.linalg.inv(X.T @ X)
    raise UnsimulablePrior(f"{type(prior).__name__} is improper and has no covariance")


class _MHRun:
    """Shared accept/reject loop for both kernels."""

    def __init__(self, config):
        self.config = config
        kept = config.iterations - config.burnin
        self.draws = np.empty((kept, 2))
        self.logpost = np.empty(kept)
        self.accepted_kept = 0
        self.kept_steps = 0

    def run(self, logtarget, init, propose, log_q=None, adapt_cb=None):
        cfg = self.config
        rng = RngStream(cfg.seed)
        g = rng.generator
        theta = np.asarray(init, dtype=float)
        lp = logtarget(theta)
        if not np.isfinite(lp):
            raise DomainError("initial point has non-finite target log-density")
        window_acc = 0
        for step in range(cfg.iterations):
            prop = propose(g, theta)
            lp_prop = logtarget(prop)
            if lp_prop == -math.inf:
                log_ratio = -math.inf
            else:
                log_ratio = lp_prop - lp
                if log_q is not None:
                    log_ratio += log_q(theta) - log_q(prop)
            if log_ratio >= 0.0 or math.log(g.random()) < log_ratio:
                theta, lp = prop, lp_prop
                accepted = True
            else:
                accepted = False
            in_burnin = step < cfg.burnin
            if in_burnin:
                window_acc += accepted
                if adapt_cb is not None and (step + 1) % 100 == 0:
                    adapt_cb(window_acc / 100.0)
                    window_acc = 0
            else:
                i = step - cfg.burnin
                self.draws[i] = theta
                self.logpost[i] = lp
                self.accepted_kept += accepted
                self.kept_steps += 1
        return self

    @property
    def accept_rate(self):
        return self.accepted_kept / max(self.kept_steps, 1)


def rw_metropolis(
    data: BinaryDataset | None,
    prior: LogisticPrior,
    config: MHConfig,
    prior_only: bool = False,
) -> Chain:
    """Random-walk Metropolis-Hastings chain for the posterior.

    The proposal is N(0, c^2 * inv(fisher_info)) around the current
    point, started at the MLE.  With ``prior_only`` the likelihood term
    is dropped (the chain samples the prior itself, a sampler check);
    the proposal covariance then comes from the prior, since no Fisher
    information exists without a likelihood, and the chain starts at 0.
    """
    if prior_only:
        X = data.design_matrix() if data is not None else None
        base_cov = _prior_covariance(prior, X)
        init = np.zeros(2)

        def logtarget(theta):
            return log_prior(prior, theta, X)

    else:
        if data is None:
            raise DomainError("posterior sampling needs data")
        X = data.design_matrix()
        fit = fit_mle(data)
        base_cov = np.linalg.inv(fit.fisher_info)
        init = np.array(fit.theta_hat)

        def logtarget(theta):
            return loglik(theta, data) + log_prior(prior, theta, X)

    c = config.proposal_scale if config.proposal_scale is not None else DEFAULT_RW_SCALE
    try:
        L0 = cholesky(base_cov)
    except NotPositiveDefinite as e:
        raise DegenerateProposal(f"proposal covariance not SPD: {e}") from e

    state = {"c": c}

    def propose(g, theta):
        return theta + state["c"] * (L0 @ g.standard_normal(2))

    def adapt_cb(rate):
        if rate < 0.2:
            state["c"] *= 0.6
        elif rate > 0.5:
            state["c"] *= 1.5

    run = _MHRun(config).run(
        logtarget, init, propose, adapt_cb=adapt_cb if config.adapt else None
    )
    return Chain(run.draws, run.logpost, run.accept_rate, prior, config, state["c"])


def fisher_proposal_mh(
    data: BinaryDataset, prior: LogisticPrior, config: MHConfig
) -> Chain:
    """Independence Metropolis-Hastings with proposal N(theta_hat, inv(I)).

    The acceptance ratio corrects for the fixed proposal density, so the
    chain targets the same posterior as :func:`rw_metropolis`.
    """
    if data is None:
        raise DomainError("posterior sampling needs data")
    X = data.design_matrix()
    fit = fit_mle(data)
    info = fit.fisher_info
    theta_hat = np.array(fit.theta_hat)
    c = config.proposal_scale if config.proposal_scale is not None else 1.0
    cov = c * c * np.linalg.inv(info)
    try:
        L = cholesky(cov)
    except NotPositiveDefinite as e:
        raise DegenerateProposal(f"proposal covariance not SPD: {e}") from e
    prec = info / (c * c)

    def logtarget(theta):
        return loglik(theta, data) + log_prior(prior, theta, X)

    def propose(g, _theta):
        return theta_hat + L @ g.standard_normal(2)

    def log_q(theta):
        d = theta - theta_hat
        return -0.5 * float(d @ prec @ d)

    run = _MHRun(config).run(logtarget, theta_hat, propose, log_q=log_q)
    return Chain(run.draws, run.logpost, run.accept_rate, prior, config, c)
