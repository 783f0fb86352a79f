"""Line transect estimation of f(0) and object density with a two-parameter detection model."""

from .bootstrap import BootstrapSummary, bootstrap, stakes_table
from .estimators import (
    ConvergenceError,
    DegenerateSampleError,
    EstimateResult,
    Method,
    PerpendicularSample,
    density,
    estimate,
    estimate_exponential,
    estimate_halfnormal,
    estimate_mle,
    estimate_mom,
    mle_score,
)
from .families import TargetFamily, study_families
from .io import load_stakes, read_distances
from .model import (
    ProposedModel,
    detection_g,
    f0,
    f0_fraction,
    l_constant,
    model_constants,
    weighted_gamma_sum,
)
from .simulation import ScenarioMetrics, ScenarioSpec, run_grid, run_scenario

__version__ = "0.1.0"
