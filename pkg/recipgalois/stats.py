__doc__ = """Submodule with the statistics used by the census fits and the
Frobenius fingerprints."""

# -----------------------------------------------------------------------
# Useful statistical metrics as methods
# -----------------------------------------------------------------------

import warnings

import numpy as np
from scipy.stats import linregress

from .utils import Bunch, ShapeError

# -----------------------------------------------------------------------
# Distances between distributions
# -----------------------------------------------------------------------

def total_variation(p, q):
    """Total variation distance between two finite distributions.

    Parameters
    ----------
    p, q : dict
        Outcome -> probability. Missing outcomes have probability 0.

    Returns
    -------
    distance : float
        Half the L1 distance, in [0, 1].
    """
    keys = set(p) | set(q)
    return 0.5 * sum(abs(float(p.get(k, 0)) - float(q.get(k, 0))) for k in keys)

# -----------------------------------------------------------------------
# Asymptotic fits
# -----------------------------------------------------------------------

class FitReport(Bunch):
    """Fit of counts against the model C * H^a * log(H)^b.

    ``fitted_constant_range`` holds the smallest and largest value of
    count / (H^a log^b H) over the samples; ``ratio`` is their quotient and
    is the stability statistic. ``exponent`` is the least squares slope of
    log(count / log^b H) against log H, for reference.
    """
    _fields = ("model", "a", "b", "samples", "constants",
               "fitted_constant_range", "ratio", "exponent", "r_squared",
               "dropped")


def fit_asymptotic(samples, a, b=0):
    """Fit (H, count) samples to C * H^a * log(H)^b.

    Parameters
    ----------
    samples : sequence of (H, count)
        At least three samples with strictly increasing H.
    a, b : float
        Exponents of H and log H.

    Returns
    -------
    report : FitReport
    """
    samples = [(int(H), int(c)) for H, c in samples]
    if len(samples) < 3:
        raise ShapeError("fit_asymptotic needs at least 3 samples.")
    Hs = [H for H, _ in samples]
    if any(h1 <= h0 for h0, h1 in zip(Hs, Hs[1:])):
        raise ShapeError("Sample heights must be strictly increasing.")

    kept, dropped = [], []
    for H, c in samples:
        if c <= 0 or (b != 0 and H <= 1):
            dropped.append((H, c))
        else:
            kept.append((H, c))
    if dropped:
        warnings.warn("Dropping {} sample(s) with zero count or log H = 0 "
                      "from the fit.".format(len(dropped)))

    H = np.array([h for h, _ in kept], dtype=float)
    counts = np.array([c for _, c in kept], dtype=float)
    scale = H ** a * np.log(H) ** b
    constants = counts / scale

    exponent, r_squared = None, None
    if len(kept) >= 2:
        fit = linregress(np.log(H), np.log(counts / np.log(H) ** b))
        exponent = float(fit.slope)
        r_squared = float(fit.rvalue ** 2)

    if len(constants):
        c_low, c_high = float(constants.min()), float(constants.max())
        ratio = c_high / c_low
    else:
        c_low = c_high = ratio = None

    return FitReport(
        model="H^{} log^{} H".format(a, b),
        a=a,
        b=b,
        samples=samples,
        constants=[float(c) for c in constants],
        fitted_constant_range=(c_low, c_high),
        ratio=ratio,
        exponent=exponent,
        r_squared=r_squared,
        dropped=dropped,
    )
