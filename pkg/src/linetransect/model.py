"""
The two-parameter detection model ``g(x; m, beta) = (1 + beta*x)**m * exp(-m*beta*x)``.

Everything here is closed form. The normalising constant, the moments and
the value of the density at zero are all ratios of the sums

    S_r(m) = sum_{k=0}^{m} C(m, k) * Gamma(k + r + 1) / m**(k + r + 1)

which are evaluated with a multiplicative term recurrence so that ``m`` in
the hundreds of thousands never touches a factorial or a binomial.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate, special

from ._numerics import invert_cdf

__all__ = [
    "ProposedModel",
    "ModelConstants",
    "gamma_sum_terms",
    "weighted_gamma_sum",
    "model_constants",
    "l_constant",
    "f0_fraction",
    "f0",
    "detection_g",
    "pdf",
    "cdf",
    "moment",
    "mean",
    "variance",
    "mgf",
    "sample",
]


def _check_m(m):
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    return int(m)


@dataclass(frozen=True)
class ProposedModel:
    """Proposed detection model with known integer shape ``m`` and rate ``beta``."""

    m: int
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "m", _check_m(self.m))
        beta = float(self.beta)
        if not (beta > 0.0 and math.isfinite(beta)):
            raise ValueError(f"beta must be a positive finite number, got {self.beta!r}")
        object.__setattr__(self, "beta", beta)

    @property
    def constants(self):
        return model_constants(self.m)

    @property
    def f0(self):
        return f0(self)

    def g(self, x):
        return detection_g(self, x)

    def pdf(self, x):
        return pdf(self, x)

    def cdf(self, x):
        return cdf(self, x)

    def moment(self, r):
        return moment(self, r)

    @property
    def mean(self):
        return mean(self)

    @property
    def variance(self):
        return variance(self)

    def mgf(self, t):
        return mgf(self, t)

    def sample(self, count, rng):
        return sample(self, count, rng)


@dataclass(frozen=True)
class ModelConstants:
    """The sums ``S_0, S_1, S_2`` and ``L_m = S_1 / S_0**2`` for one ``m``."""

    m: int
    s0: float
    s1: float
    s2: float
    lm: float

    @property
    def c(self):
        """Normalising constant ``C(m) = 1 / S_0(m)`` (for ``beta = 1``)."""
        return 1.0 / self.s0


def gamma_sum_terms(m, r=0):
    """Individual terms ``C(m,k) Gamma(k+r+1) / m**(k+r+1)`` for ``k = 0..m``.

    Built from ``T_0 = Gamma(r+1) / m**(r+1)`` and
    ``T_{k+1} = T_k * (m-k)/(k+1) * (k+r+1)/m``.
    """
    m = _check_m(m)
    if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or r < 0:
        raise ValueError(f"r must be a nonnegative integer, got {r!r}")
    r = int(r)
    k = np.arange(m, dtype=float)
    ratios = (m - k) / (k + 1.0) * (k + r + 1.0) / m
    t0 = math.exp(math.lgamma(r + 1) - (r + 1) * math.log(m))
    return t0 * np.concatenate(([1.0], np.cumprod(ratios)))


def weighted_gamma_sum(m, r=0):
    """Return ``S_r(m)``.

    Examples
    --------
    >>> weighted_gamma_sum(1, 0)
    2.0
    >>> weighted_gamma_sum(1, 1)
    3.0
    """
    return math.fsum(gamma_sum_terms(m, r))


@lru_cache(maxsize=256)
def model_constants(m):
    m = _check_m(m)
    s0 = weighted_gamma_sum(m, 0)
    s1 = weighted_gamma_sum(m, 1)
    s2 = weighted_gamma_sum(m, 2)
    return ModelConstants(m=m, s0=s0, s1=s1, s2=s2, lm=s1 / (s0 * s0))


def l_constant(m):
    """``L_m = S_1(m) / S_0(m)**2``, so that the moment estimator of f(0) is ``L_m / mean``."""
    return model_constants(m).lm


def f0_fraction(m):
    """Exact ``f(0; m, 1)`` as a :class:`fractions.Fraction`.

    With ``beta = 1`` the sum ``S_0(m)`` is rational, which gives the closed
    forms 1/2, 4/5, 27/26, ... for m = 1, 2, 3, ...
    """
    m = _check_m(m)
    s0 = sum(Fraction(math.comb(m, k) * math.factorial(k), m ** (k + 1)) for k in range(m + 1))
    return 1 / s0


def f0(model):
    """Density at zero, ``beta / S_0(m)``."""
    return model.beta / model_constants(model.m).s0


def _as_distance(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0):
        raise ValueError("perpendicular distances must be nonnegative")
    return x


def _scalar_or_array(out, x):
    return float(out) if np.ndim(x) == 0 else out


def detection_g(model, x):
    """Detection probability ``(1 + beta*x)**m * exp(-m*beta*x)``, evaluated in log space."""
    xa = _as_distance(x)
    bx = model.beta * xa
    with np.errstate(invalid="ignore"):
        logg = model.m * (np.log1p(bx) - bx)
    out = np.where(np.isinf(xa), 0.0, np.exp(logg))
    return _scalar_or_array(out, x)


def pdf(model, x):
    xa = _as_distance(x)
    out = f0(model) * np.asarray(detection_g(model, xa))
    return _scalar_or_array(out, x)


def cdf(model, x):
    """Distribution function.

    The density is a mixture of Gamma(k+1, rate m*beta) laws with weights
    ``T_k / S_0``, so the CDF is the weighted sum of regularised lower
    incomplete gamma functions. All weights are positive.
    """
    xa = _as_distance(x)
    c = model_constants(model.m)
    w = gamma_sum_terms(model.m, 0) / c.s0
    z = model.m * model.beta * xa
    shape = np.arange(1, model.m + 2, dtype=float)
    flat = z.reshape(-1)
    out = np.empty_like(flat)
    # chunk to bound the (points x terms) temporary
    step = max(1, 2_000_000 // shape.size)
    for i in range(0, flat.size, step):
        zz = flat[i:i + step, None]
        out[i:i + step] = special.gammainc(shape[None, :], zz) @ w
    out = np.clip(out, 0.0, 1.0).reshape(z.shape)
    return _scalar_or_array(out, x)


def cdf_quadrature(model, x):
    """CDF by adaptive quadrature of the density; slow, used as a cross-check."""
    val, _ = integrate.quad(lambda t: pdf(model, t), 0.0, float(x), epsabs=1e-13, epsrel=1e-12, limit=500)
    return val


def moment(model, r):
    """``E[X**r] = S_r(m) / (beta**r * S_0(m))``."""
    s0 = model_constants(model.m).s0
    return weighted_gamma_sum(model.m, r) / (model.beta ** r * s0)


def mean(model):
    return moment(model, 1)


def variance(model):
    return moment(model, 2) - moment(model, 1) ** 2


def mgf(model, t):
    """Moment generating function, defined for ``t < m*beta``.

    ``M(t) = beta / (S_0 (m beta - t)) * sum_k C(m,k) k! q**k`` with
    ``q = beta / (m beta - t)``; the summand obeys ``a_{k+1} = a_k (m-k) q``.
    """
    m, beta = model.m, model.beta
    t = float(t)
    if not t < m * beta:
        raise ValueError(f"mgf is only defined for t < m*beta = {m * beta}, got t={t}")
    denom = m * beta - t
    q = beta / denom
    k = np.arange(m, dtype=float)
    terms = np.concatenate(([1.0], np.cumprod((m - k) * q)))
    return beta * math.fsum(terms) / (model_constants(m).s0 * denom)


def sample(model, count, rng):
    """Draw ``count`` distances by numerical inversion of :func:`cdf`.

    Parameters
    ----------
    model : ProposedModel
    count : int
    rng : numpy.random.Generator

    Returns
    -------
    ndarray of shape (count,)
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    u = rng.random(int(count))
    return invert_cdf(
        lambda x: cdf(model, x),
        lambda x: pdf(model, x),
        u,
        scale=2.0 * mean(model),
    )
