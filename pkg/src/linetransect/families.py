"""
Truth models used to benchmark the f(0) estimators by simulation.

``EP``  exponential power   f(x) = exp(-x**d) / Gamma(1 + 1/d),             x >= 0, d >= 1
``HR``  hazard rate         f(x) = (1 - exp(-x**-d)) / Gamma(1 - 1/d),      x >= 0, d > 1
``BE``  beta                f(x) = (1 + d) (1 - x)**d,                       0 <= x < 1, d >= 0
``GP``  general polynomial  f(x) = K(d) (1 + (x/0.6)**2)**-d,               x >= 0, d > 1/2

with ``K(d) = 10 Gamma(d) / (3 sqrt(pi) Gamma(d - 1/2))``. The hazard-rate
density uses the negative exponent ``x**-d``; with ``x**d`` the function
tends to one and cannot be normalised on [0, inf).
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from ._numerics import invert_cdf

__all__ = ["TargetFamily", "STUDY_CONFIGURATIONS", "study_families", "GP_SCALE"]

GP_SCALE = 0.6

_DOMAIN = {
    "EP": (lambda d: d >= 1.0, "EP requires delta >= 1"),
    "HR": (lambda d: d > 1.0, "HR requires delta > 1"),
    "BE": (lambda d: d >= 0.0, "BE requires delta >= 0"),
    "GP": (lambda d: d > 0.5, "GP requires delta > 1/2"),
}

STUDY_CONFIGURATIONS = (
    ("EP", (1.0, 1.5, 2.0)),
    ("HR", (2.0, 2.5, 3.0)),
    ("BE", (1.5, 2.0, 2.5)),
    ("GP", (0.9, 1.9, 3.5)),
)


@dataclass(frozen=True)
class TargetFamily:
    """One simulation truth: a family code and its shape ``delta``."""

    family: str
    delta: float

    def __post_init__(self):
        fam = str(self.family).upper()
        if fam not in _DOMAIN:
            raise ValueError(f"unknown family {self.family!r}; expected one of EP, HR, BE, GP")
        delta = float(self.delta)
        ok, msg = _DOMAIN[fam]
        if not (math.isfinite(delta) and ok(delta)):
            raise ValueError(f"{msg}, got delta={self.delta!r}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "delta", delta)

    @property
    def label(self):
        return f"{self.family}(delta={self.delta:g})"

    @property
    def upper(self):
        """Right end of the support."""
        return 1.0 if self.family == "BE" else math.inf

    @property
    def f0(self):
        """True density at zero."""
        d = self.delta
        if self.family == "EP":
            return 1.0 / float(special.gamma(1.0 + 1.0 / d))
        if self.family == "HR":
            return 1.0 / float(special.gamma(1.0 - 1.0 / d))
        if self.family == "BE":
            return 1.0 + d
        return _gp_const(d)

    def _check(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(np.isnan(x)) or np.any(x < 0):
            raise ValueError(f"{self.label}: x must be >= 0")
        if self.family == "BE" and np.any(x > 1):
            raise ValueError(f"{self.label}: support is [0, 1)")
        return x

    def pdf(self, x):
        xa = self._check(x)
        d = self.delta
        if self.family == "EP":
            out = np.exp(-xa ** d) * self.f0
        elif self.family == "HR":
            with np.errstate(divide="ignore"):
                out = -np.expm1(-(xa ** -d)) * self.f0
        elif self.family == "BE":
            out = (1.0 + d) * (1.0 - xa) ** d
        else:
            out = self.f0 * (1.0 + (xa / GP_SCALE) ** 2) ** -d
        return float(out) if np.ndim(x) == 0 else out

    def cdf(self, x):
        """Closed-form distribution function."""
        xa = self._check(x)
        d = self.delta
        if self.family == "EP":
            # X**d ~ Gamma(1/d, 1)
            out = special.gammainc(1.0 / d, xa ** d)
        elif self.family == "HR":
            out = _hr_cdf(xa, d)
        elif self.family == "BE":
            out = 1.0 - (1.0 - xa) ** (1.0 + d)
        else:
            nu = 2.0 * d - 1.0
            # |T_nu| folded: 2 * F_t - 1 written via the upper tail for accuracy
            t = xa * math.sqrt(nu) / GP_SCALE
            out = 1.0 - 2.0 * special.stdtr(nu, -t)
        out = np.clip(out, 0.0, 1.0)
        return float(out) if np.ndim(x) == 0 else out

    def quantile(self, p):
        p = np.asarray(p, dtype=float)
        if np.any((p < 0) | (p > 1)):
            raise ValueError("probabilities must lie in [0, 1]")
        d = self.delta
        if self.family == "EP":
            out = special.gammaincinv(1.0 / d, p) ** (1.0 / d)
        elif self.family == "BE":
            out = 1.0 - (1.0 - p) ** (1.0 / (1.0 + d))
        elif self.family == "GP":
            nu = 2.0 * d - 1.0
            out = GP_SCALE * special.stdtrit(nu, 0.5 + 0.5 * p) / math.sqrt(nu)
        else:
            out = invert_cdf(self.cdf, self.pdf, np.atleast_1d(p), scale=2.0)
            out = out.reshape(p.shape)
        out = np.where(p == 0.0, 0.0, np.where(p == 1.0, self.upper, out))
        return float(out) if np.ndim(p) == 0 else out

    def sample(self, count, rng):
        """Draw ``count`` i.i.d. distances using generator ``rng``.

        EP uses ``G**(1/d)`` with ``G ~ Gamma(1/d)``; BE inverts its CDF
        directly; GP uses ``0.6 |Z| / sqrt(2 G)`` with ``G ~ Gamma(nu/2)``,
        which is ``0.6 |T_nu| / sqrt(nu)`` for ``nu = 2d - 1``; HR inverts
        its CDF numerically.
        """
        count = int(count)
        if count < 1:
            raise ValueError("count must be >= 1")
        d = self.delta
        if self.family == "EP":
            return rng.standard_gamma(1.0 / d, size=count) ** (1.0 / d)
        if self.family == "BE":
            u = rng.random(count)
            return -np.expm1(np.log1p(-u) / (1.0 + d))
        if self.family == "GP":
            nu = 2.0 * d - 1.0
            z = rng.standard_normal(count)
            g = rng.standard_gamma(0.5 * nu, size=count)
            return GP_SCALE * np.abs(z) / np.sqrt(2.0 * g)
        u = rng.random(count)
        return invert_cdf(self.cdf, self.pdf, u, scale=2.0)


def _gp_const(d):
    return 10.0 * math.exp(special.gammaln(d) - special.gammaln(d - 0.5)) / (3.0 * math.sqrt(math.pi))


def _hr_cdf(x, d):
    # Substituting u = t**-d turns the integral of 1 - exp(-t**-d) into
    #   x (1 - exp(-x**-d)) + Gamma(1 - 1/d, x**-d)   (upper incomplete gamma)
    a = 1.0 - 1.0 / d
    with np.errstate(divide="ignore", over="ignore"):
        z = x ** -d
        first = np.where(x > 0, -x * np.expm1(-z), 0.0)
    upper = special.gammaincc(a, z)
    return first / special.gamma(a) + upper


def study_families():
    """The twelve (family, delta) truths in table order."""
    return [TargetFamily(f, d) for f, deltas in STUDY_CONFIGURATIONS for d in deltas]
