"""
Nonparametric bootstrap of f(0) point estimates.

Resample ``b`` of a run seeded with ``seed`` draws its indices from
``SeedSequence(seed, spawn_key=(b,))``, so every estimator bootstrapped with
the same seed sees the same resamples.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import estimators as est

__all__ = [
    "BootstrapSummary",
    "BootstrapError",
    "EstimatorSpec",
    "STAKES_ESTIMATORS",
    "bootstrap",
    "stakes_table",
]

MAX_REDRAWS = 10


class BootstrapError(RuntimeError):
    pass


@dataclass(frozen=True)
class EstimatorSpec:
    """An estimator id such as ``EX``, ``HN`` or ``MOM_m8``."""

    method: est.Method
    m: Optional[int] = None

    @property
    def id(self):
        if self.method is est.Method.EXPONENTIAL:
            return "EX"
        if self.method is est.Method.HALFNORMAL:
            return "HN"
        return f"{self.method.value.upper()}_m{self.m}"

    def __call__(self, sample):
        return est.estimate(sample, self.method, m=self.m)

    @classmethod
    def parse(cls, text):
        t = text.strip().upper()
        if t in ("EX", "EXPONENTIAL"):
            return cls(est.Method.EXPONENTIAL)
        if t in ("HN", "HALFNORMAL"):
            return cls(est.Method.HALFNORMAL)
        for tag, method in (("MOM_M", est.Method.MOM), ("MLE_M", est.Method.MLE)):
            if t.startswith(tag):
                return cls(method, int(t[len(tag):]))
        raise ValueError(f"unknown estimator id {text!r}")


STAKES_ESTIMATORS = (
    EstimatorSpec(est.Method.EXPONENTIAL),
    EstimatorSpec(est.Method.HALFNORMAL),
) + tuple(EstimatorSpec(est.Method.MOM, m) for m in (1, 2, 3, 8, 20, 100000))


@dataclass(frozen=True)
class BootstrapSummary:
    estimator: str
    point: float
    boot_mean: float
    bias: float
    sd: float
    mse: float
    density_hat: Optional[float]
    reps: int
    seed: int
    redraws: int = 0

    def as_dict(self):
        return {
            "estimator": self.estimator,
            "point": self.point,
            "boot_mean": self.boot_mean,
            "bias": self.bias,
            "sd": self.sd,
            "mse": self.mse,
            "density_hat": self.density_hat,
            "reps": self.reps,
            "seed": self.seed,
        }


def _resample_rng(seed, b):
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(b),)))


def bootstrap(sample, estimator, reps=1000, seed=0, line_length=None):
    """Bootstrap bias, standard deviation and MSE of an f(0) estimator.

    Parameters
    ----------
    sample : PerpendicularSample or array_like
    estimator : EstimatorSpec, str, or callable
        Callable receiving a PerpendicularSample and returning an
        EstimateResult (or a float).
    reps : int
        Number of resamples, at least 2.
    seed : int
    line_length : float, optional
        When given, ``density_hat = n * point / (2 * line_length)``.

    Returns
    -------
    BootstrapSummary

    Notes
    -----
    ``bias`` is measured against the original-sample estimate and
    ``mse = sd**2 + bias**2`` with ``sd`` using divisor ``reps - 1``. A
    resample on which the estimator fails is redrawn from the same stream,
    at most ten times over the whole run.
    """
    if reps < 2:
        raise ValueError("reps must be >= 2 to estimate a standard deviation")
    s = sample if isinstance(sample, est.PerpendicularSample) else est.PerpendicularSample(sample)
    if isinstance(estimator, str):
        estimator = EstimatorSpec.parse(estimator)
    name = getattr(estimator, "id", getattr(estimator, "__name__", "estimator"))

    def value(smp):
        r = estimator(smp)
        return float(getattr(r, "f0_hat", r))

    point = value(s)
    x = s.distances
    n = s.n
    boot = np.empty(reps)
    redraws = 0
    for b in range(reps):
        rng = _resample_rng(seed, b)
        while True:
            idx = rng.integers(0, n, size=n)
            try:
                boot[b] = value(est.PerpendicularSample(x[idx]))
                break
            except (est.DegenerateSampleError, est.ConvergenceError) as exc:
                redraws += 1
                if redraws > MAX_REDRAWS:
                    raise BootstrapError(f"{name}: estimator failed on more than {MAX_REDRAWS} resamples") from exc
    boot_mean = math.fsum(boot) / reps
    sd = float(np.std(boot, ddof=1))
    bias = boot_mean - point
    dens = est.density(n, point, line_length) if line_length is not None else None
    return BootstrapSummary(
        estimator=name,
        point=point,
        boot_mean=boot_mean,
        bias=bias,
        sd=sd,
        mse=sd * sd + bias * bias,
        density_hat=dens,
        reps=int(reps),
        seed=int(seed),
        redraws=redraws,
    )


def stakes_table(reps=1000, seed=0, sample=None, line_length=1000.0, estimators=STAKES_ESTIMATORS):
    """Bootstrap summaries for the stakes analysis, one row per estimator.

    Uses the bundled stakes distances unless ``sample`` is supplied.
    """
    if sample is None:
        from .io import load_stakes

        sample = load_stakes()
    return [bootstrap(sample, e, reps=reps, seed=seed, line_length=line_length) for e in estimators]
