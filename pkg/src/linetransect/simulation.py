"""
Monte Carlo comparison of f(0) estimators.

Each replication draws one sample from the truth and feeds it to every
estimator, so efficiencies are computed on paired samples. Replication
``i`` of a scenario seeded with ``seed`` always uses the random stream
``SeedSequence(seed, spawn_key=(i,))``; results therefore do not depend on
how replications are split across worker processes.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import estimators as est
from .families import TargetFamily, study_families

__all__ = [
    "ScenarioSpec",
    "ScenarioMetrics",
    "estimator_ids",
    "replicate_estimates",
    "compute_metrics",
    "mc_stderr",
    "run_scenario",
    "run_grid",
    "STUDY_SAMPLE_SIZES",
    "STUDY_M_LIST",
]

STUDY_SAMPLE_SIZES = (50, 100, 200)
STUDY_M_LIST = (2, 8, 20)


@dataclass(frozen=True)
class ScenarioSpec:
    family: TargetFamily
    n: int
    reps: int = 1000
    m_list: tuple = STUDY_M_LIST
    seed: int = 0
    method: str = "mom"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        m_list = tuple(int(m) for m in self.m_list)
        if not m_list or any(m < 1 for m in m_list):
            raise ValueError("m_list must be a nonempty list of positive integers")
        if self.method not in ("mom", "mle"):
            raise ValueError("method must be 'mom' or 'mle'")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        object.__setattr__(self, "m_list", m_list)


@dataclass(frozen=True)
class ScenarioMetrics:
    estimator: str
    rb: float
    rrmse: float
    eff: float
    mean_estimate: float
    rb_se: float = math.nan
    rrmse_se: float = math.nan
    eff_se: float = math.nan
    eff_mse: float = math.nan
    reps: int = 0
    seed: Optional[int] = None

    def as_dict(self):
        return {
            "estimator": self.estimator,
            "rb": self.rb,
            "rrmse": self.rrmse,
            "eff": self.eff,
            "mean_estimate": self.mean_estimate,
            "rb_se": self.rb_se,
            "rrmse_se": self.rrmse_se,
            "eff_se": self.eff_se,
            "eff_mse": self.eff_mse,
            "reps": self.reps,
            "seed": self.seed,
        }


def estimator_ids(m_list, method="mom"):
    """Column labels in table order: ``EX``, ``HN``, then one per ``m``."""
    tag = "MOM" if method == "mom" else "MLE"
    return ["EX", "HN"] + [f"{tag}_m{m}" for m in m_list]


def replication_rng(seed, rep):
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(rep),)))


def _estimate_row(x, m_list, method):
    s = est.PerpendicularSample(x)
    row = [est.estimate_exponential(s).f0_hat, est.estimate_halfnormal(s).f0_hat]
    for m in m_list:
        if method == "mom":
            row.append(est.estimate_mom(s, m).f0_hat)
        else:
            row.append(est.estimate_mle(s, m).f0_hat)
    return row


def _replicate_block(args):
    spec, reps = args
    out = np.empty((len(reps), 2 + len(spec.m_list)))
    for j, rep in enumerate(reps):
        x = spec.family.sample(spec.n, replication_rng(spec.seed, rep))
        try:
            out[j] = _estimate_row(x, spec.m_list, spec.method)
        except (est.DegenerateSampleError, est.ConvergenceError) as exc:
            raise RuntimeError(
                f"{spec.family.label}, n={spec.n}, replication {rep}: {exc}"
            ) from exc
    return out


def replicate_estimates(spec, workers=1):
    """Matrix of estimates, shape ``(reps, 2 + len(m_list))``, row i from replication i."""
    reps = np.arange(spec.reps)
    if workers is None or workers <= 1:
        return _replicate_block((spec, reps))
    chunks = [c for c in np.array_split(reps, workers * 4) if c.size]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        blocks = list(pool.map(_replicate_block, [(spec, c) for c in chunks]))
    return np.vstack(blocks)


def _fmean(v):
    return math.fsum(v) / len(v)


def mc_stderr(metric, values, truth, reference=None, eff_definition="rmse"):
    """Monte Carlo standard error of a metric from its replicate values.

    Parameters
    ----------
    metric : {'rb', 'rrmse', 'eff'}
    values : array_like
        Replicate estimates of the estimator under evaluation.
    truth : float
        True f(0).
    reference : array_like, optional
        Paired replicate estimates of the exponential estimator (``eff`` only).

    Notes
    -----
    ``rb``: ``sd / (sqrt(R) f0)``. ``rrmse``: delta method on the mean of the
    squared errors. ``eff``: delta method on the ratio of two paired mean
    squared errors, including their covariance, and half that in relative
    terms when ``eff_definition="rmse"``.
    """
    v = np.asarray(values, dtype=float)
    r = v.size
    if r < 2:
        raise ValueError("need at least two replicates")
    if metric == "rb":
        return float(np.std(v, ddof=1) / (math.sqrt(r) * truth))
    sq = (v - truth) ** 2
    mse = _fmean(sq)
    if metric == "rrmse":
        if mse == 0.0:
            return 0.0
        se_mse = np.std(sq, ddof=1) / math.sqrt(r)
        return float(se_mse / (2.0 * math.sqrt(mse) * truth))
    if metric == "eff":
        if reference is None:
            raise ValueError("eff needs the reference (exponential) replicates")
        sq_ref = (np.asarray(reference, dtype=float) - truth) ** 2
        mse_ref = _fmean(sq_ref)
        if mse == 0.0 or mse_ref == 0.0:
            return 0.0
        cov = np.cov(sq_ref, sq, ddof=1)
        rel_var = (cov[0, 0] / mse_ref ** 2 + cov[1, 1] / mse ** 2 - 2.0 * cov[0, 1] / (mse_ref * mse)) / r
        rel_se = math.sqrt(max(rel_var, 0.0))
        if eff_definition == "rmse":
            return float(math.sqrt(mse_ref / mse) * 0.5 * rel_se)
        return float(mse_ref / mse * rel_se)
    raise ValueError(f"unknown metric {metric!r}")


def compute_metrics(estimates, truth, labels, reference_column=0, seed=None, eff_definition="rmse"):
    """RB, RRMSE and EFF for every column of a replicate matrix.

    ``eff`` is reported as ``RRMSE(EX) / RRMSE(U)`` by default, the
    convention behind the published efficiency tables; ``eff_mse`` always
    holds the plain MSE ratio. Pass ``eff_definition="mse"`` to make
    ``eff`` the MSE ratio as well.
    """
    if eff_definition not in ("rmse", "mse"):
        raise ValueError("eff_definition must be 'rmse' or 'mse'")
    estimates = np.asarray(estimates, dtype=float)
    truth = float(truth)
    reps = estimates.shape[0]
    ref = estimates[:, reference_column]
    mse_ref = _fmean((ref - truth) ** 2)
    out = []
    for j, label in enumerate(labels):
        col = estimates[:, j]
        mean_est = _fmean(col)
        mse = _fmean((col - truth) ** 2)
        if j == reference_column:
            eff_mse = 1.0
        else:
            eff_mse = mse_ref / mse if mse > 0 else math.inf
        eff = eff_mse if eff_definition == "mse" else math.sqrt(eff_mse)
        out.append(
            ScenarioMetrics(
                estimator=label,
                rb=(mean_est - truth) / truth,
                rrmse=math.sqrt(mse) / truth,
                eff=eff,
                mean_estimate=mean_est,
                rb_se=mc_stderr("rb", col, truth) if reps > 1 else math.nan,
                rrmse_se=mc_stderr("rrmse", col, truth) if reps > 1 else math.nan,
                eff_se=(
                    0.0 if j == reference_column else mc_stderr("eff", col, truth, ref, eff_definition)
                ) if reps > 1 else math.nan,
                eff_mse=eff_mse,
                reps=reps,
                seed=seed,
            )
        )
    return out


def run_scenario(spec, workers=1, eff_definition="rmse"):
    """Run one (family, delta, n) scenario and return one metrics row per estimator."""
    estimates = replicate_estimates(spec, workers=workers)
    labels = estimator_ids(spec.m_list, spec.method)
    return compute_metrics(estimates, spec.family.f0, labels, seed=spec.seed, eff_definition=eff_definition)


def run_grid(
    reps=1000,
    seed=0,
    m_list=STUDY_M_LIST,
    sample_sizes=STUDY_SAMPLE_SIZES,
    method="mom",
    workers=1,
    families=None,
    eff_definition="rmse",
):
    """All twelve truths crossed with the sample sizes.

    Every cell uses the same ``seed``, so a cell equals the single-scenario
    run with that seed.

    Returns
    -------
    list of (TargetFamily, n, list of ScenarioMetrics)
    """
    families = study_families() if families is None else families
    table = []
    for fam in families:
        for n in sample_sizes:
            spec = ScenarioSpec(fam, n, reps=reps, m_list=tuple(m_list), seed=seed, method=method)
            table.append((fam, n, run_scenario(spec, workers=workers, eff_definition=eff_definition)))
    return table
