"""
Estimators of f(0), the density of perpendicular distances at the line.

Four estimators are provided: the exponential and half-normal maximum
likelihood estimators, and the moment and maximum likelihood estimators
under the proposed model with a known integer ``m``. The density of
objects is then ``n * f0_hat / (2 * L)``.
"""

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import model as _model

__all__ = [
    "Method",
    "PerpendicularSample",
    "EstimateResult",
    "DegenerateSampleError",
    "ConvergenceError",
    "estimate_exponential",
    "estimate_halfnormal",
    "estimate_mom",
    "mle_score",
    "mle_score_derivative",
    "solve_score",
    "estimate_mle",
    "estimate",
    "density",
]


class DegenerateSampleError(ValueError):
    """The sample carries no information about scale (e.g. all distances zero)."""


class ConvergenceError(RuntimeError):
    """Root finding on the score equation did not converge."""

    def __init__(self, message, bracket):
        super().__init__(message)
        self.bracket = bracket


class Method(str, enum.Enum):
    EXPONENTIAL = "exponential"
    HALFNORMAL = "halfnormal"
    MOM = "mom"
    MLE = "mle"


@dataclass(frozen=True)
class PerpendicularSample:
    """Observed perpendicular distances, in the order they were recorded."""

    distances: np.ndarray

    def __post_init__(self):
        x = np.array(self.distances, dtype=float).reshape(-1)
        if x.size < 1:
            raise ValueError("a sample needs at least one distance")
        if not np.all(np.isfinite(x)):
            raise ValueError("distances must be finite")
        if np.any(x < 0):
            raise ValueError("distances must be nonnegative")
        x.setflags(write=False)
        object.__setattr__(self, "distances", x)

    @property
    def n(self):
        return int(self.distances.size)

    @property
    def total(self):
        return math.fsum(self.distances)

    @property
    def mean(self):
        return self.total / self.n

    @property
    def sum_squares(self):
        return math.fsum(self.distances ** 2)

    def scaled(self, c):
        return PerpendicularSample(self.distances * c)

    def __len__(self):
        return self.n


def _as_sample(sample):
    if isinstance(sample, PerpendicularSample):
        return sample
    return PerpendicularSample(sample)


@dataclass(frozen=True)
class EstimateResult:
    method: Method
    f0_hat: float
    m: Optional[int] = None
    beta_hat: Optional[float] = None
    converged: bool = True
    iterations: int = 0
    n: Optional[int] = None

    def density(self, line_length):
        """Object density for total line length ``line_length`` (same length unit as the distances)."""
        return density(self.n, self.f0_hat, line_length)

    def as_dict(self):
        return {
            "method": self.method.value,
            "m": self.m,
            "beta_hat": self.beta_hat,
            "f0_hat": self.f0_hat,
            "converged": self.converged,
            "iterations": self.iterations,
            "n": self.n,
        }


def _require_positive_mean(s):
    if not s.total > 0.0:
        raise DegenerateSampleError("all distances are zero; f(0) cannot be estimated")


def estimate_exponential(sample):
    """``1 / mean``, the MLE of f(0) under the exponential detection function."""
    s = _as_sample(sample)
    _require_positive_mean(s)
    return EstimateResult(Method.EXPONENTIAL, 1.0 / s.mean, n=s.n)


def estimate_halfnormal(sample):
    """``sqrt(2n / (pi * sum(x**2)))``, the half-normal MLE of f(0)."""
    s = _as_sample(sample)
    _require_positive_mean(s)
    return EstimateResult(Method.HALFNORMAL, math.sqrt(2.0 * s.n / (math.pi * s.sum_squares)), n=s.n)


def estimate_mom(sample, m):
    """Method of moments under the proposed model.

    Matching the model mean ``S_1 / (beta S_0)`` to the sample mean gives
    ``beta_hat = S_1 / (mean * S_0)`` and ``f0_hat = L_m / mean``.
    """
    s = _as_sample(sample)
    _require_positive_mean(s)
    c = _model.model_constants(m)
    xbar = s.mean
    return EstimateResult(
        Method.MOM,
        c.lm / xbar,
        m=c.m,
        beta_hat=c.s1 / (xbar * c.s0),
        n=s.n,
    )


def mle_score(beta, sample, m):
    """Score of the log-likelihood in ``beta``, divided by ``m``.

    ``n/(m beta) + sum x/(1 + beta x) - sum x``; strictly decreasing on (0, inf).
    """
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta!r}")
    s = _as_sample(sample)
    x = s.distances
    return s.n / (m * beta) + math.fsum(x / (1.0 + beta * x)) - s.total


def mle_score_derivative(beta, sample, m):
    s = _as_sample(sample)
    x = s.distances
    return -s.n / (m * beta * beta) - math.fsum((x / (1.0 + beta * x)) ** 2)


def solve_score(sample, m, tol=1e-10, max_iter=200, beta0=None, newton=True):
    """Find the unique positive root of :func:`mle_score`.

    Newton steps are accepted only when they fall strictly inside the current
    sign-change bracket; otherwise the bracket is bisected. With
    ``newton=False`` this is plain bisection.

    Returns
    -------
    beta : float
    iterations : int
    bracket : tuple of float
    """
    s = _as_sample(sample)
    _require_positive_mean(s)
    if beta0 is None:
        beta0 = estimate_mom(s, m).beta_hat

    def score(b):
        return mle_score(b, s, m)

    lo = hi = beta0
    while score(lo) <= 0.0:
        lo *= 0.5
    while score(hi) >= 0.0:
        hi *= 2.0
    beta = beta0
    for it in range(1, max_iter + 1):
        f = score(beta)
        if abs(f) <= tol:
            return beta, it - 1, (lo, hi)
        if f > 0.0:
            lo = beta
        else:
            hi = beta
        step = beta - f / mle_score_derivative(beta, s, m) if newton else math.nan
        beta = step if lo < step < hi else 0.5 * (lo + hi)
        if hi - lo <= 4.0 * np.finfo(float).eps * hi:
            # bracket at machine resolution; best achievable root
            return beta, it, (lo, hi)
    if abs(score(beta)) <= tol:
        return beta, max_iter, (lo, hi)
    raise ConvergenceError(
        f"score equation did not converge in {max_iter} iterations", (lo, hi)
    )


def estimate_mle(sample, m, tolerance=1e-10, max_iter=200):
    """Maximum likelihood under the proposed model with known ``m``.

    The score equation has no closed-form root; it is solved by safeguarded
    Newton iteration started from the moment estimate.
    """
    s = _as_sample(sample)
    beta, iters, _ = solve_score(s, m, tol=tolerance, max_iter=max_iter)
    f0_hat = _model.f0(_model.ProposedModel(m, beta))
    return EstimateResult(Method.MLE, f0_hat, m=int(m), beta_hat=beta, converged=True, iterations=iters, n=s.n)


def estimate(sample, method, m=None, **kwargs):
    """Dispatch on ``method`` (a :class:`Method` or its string value)."""
    method = Method(method)
    if method is Method.EXPONENTIAL:
        return estimate_exponential(sample)
    if method is Method.HALFNORMAL:
        return estimate_halfnormal(sample)
    if m is None:
        raise ValueError(f"method {method.value!r} requires m")
    if method is Method.MOM:
        return estimate_mom(sample, m)
    return estimate_mle(sample, m, **kwargs)


def density(n, f0_hat, line_length):
    """``n * f0_hat / (2 * line_length)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not line_length > 0:
        raise ValueError("line_length must be positive")
    return n * f0_hat / (2.0 * line_length)
