"""Small numerical helpers shared by the model and the target families."""

import numpy as np


def invert_cdf(cdf, pdf, u, scale=1.0, xtol=1e-10, max_iter=200):
    """Vectorised inverse of a continuous CDF on [0, inf).

    Newton steps on ``cdf(x) - u`` are taken only when they land strictly
    inside the current sign-change bracket; otherwise the bracket is bisected.

    Parameters
    ----------
    cdf, pdf : callable
        Vectorised distribution and density functions.
    u : array_like
        Probabilities in [0, 1).
    scale : float
        Initial guess for the upper bracket; doubled until it covers ``u``.
    xtol : float
        Absolute tolerance on the returned abscissae.

    Returns
    -------
    ndarray
    """
    u = np.atleast_1d(np.asarray(u, dtype=float))
    lo = np.zeros_like(u)
    hi = np.full_like(u, float(scale))
    for _ in range(2000):
        short = cdf(hi) < u
        if not short.any():
            break
        lo = np.where(short, hi, lo)
        hi = np.where(short, 2.0 * hi, hi)
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        resid = cdf(x) - u
        lo = np.where(resid <= 0.0, x, lo)
        hi = np.where(resid > 0.0, x, hi)
        dens = pdf(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = x - resid / dens
        inside = np.isfinite(step) & (step > lo) & (step < hi)
        x_new = np.where(inside, step, 0.5 * (lo + hi))
        done = np.abs(x_new - x) <= xtol
        x = x_new
        if np.all(done | (hi - lo <= xtol)):
            break
    return x
