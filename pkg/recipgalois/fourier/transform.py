__doc__ = """Exhaustive Fourier transforms of w and w' over F_p.

The normalized transform is

    w^(g) = p^(-dim) sum_F w(F) zeta^<F, g>,    zeta = exp(2 pi i / p),

which is numpy's inverse FFT of the weight table reshaped to (p,) * dim.
Single values are also available exactly, as elements of Q(zeta).
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import logging
import cmath
from fractions import Fraction
from functools import partial
from multiprocessing import Pool

import numpy as np

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..utils import Bunch, ShapeError
from ..discriminants import SplittingType
from .forms import forms_array, digit_grid

logger = logging.getLogger(__name__)


class CharacterSum(object):
    """Element sum_t a_t zeta^t (0 <= t < p - 1) of Q(zeta_p) with rational
    a_t. The powers 1, ..., zeta^(p-2) are a basis."""
    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != p - 1:
            raise ShapeError("Expected {} coordinates.".format(p - 1))
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_counts(cls, p, counts, denominator=1):
        """sum_t counts[t] zeta^t / denominator for t in [0, p)."""
        top = counts[p - 1]
        return cls(p, [Fraction(int(c - top), denominator)
                       for c in counts[:p - 1]])

    @property
    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        if not self.is_rational:
            raise ValueError("{!r} is not rational.".format(self))
        return self.coeffs[0]

    def __complex__(self):
        zeta = cmath.exp(2j * cmath.pi / self.p)
        return complex(sum(float(a) * zeta ** t for t, a in enumerate(self.coeffs)))

    def __abs__(self):
        return abs(complex(self))

    def __eq__(self, other):
        if isinstance(other, CharacterSum):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coeffs[0] == other
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "CharacterSum({}, {})".format(
            self.p, [str(a) for a in self.coeffs])


class FourierReport(Bunch):
    """Envelope summary of one transform.

    ``zero_constant`` is |w^(0) #Aut - p^-k| p^(k+1) (one more power of
    p when pointed); ``off_constant`` scales the largest value off the
    support's annihilator by p^off_exponent.
    """
    _fields = ("p", "n", "sigma", "pointed", "monic", "zero_value",
               "max_off_support", "envelope_constant", "main_term",
               "zero_constant", "off_constant", "off_exponent")
    _defaults = {"pointed": False, "monic": False}


class FourierTransform(object):
    """Weights of w or w' together with their full transform.

    Parameters
    ----------
    p : int
    sigma : SplittingType
    n : int
    pointed : bool
    monic : bool
    weights : numpy.ndarray
        As returned by :func:`forms_array`.
    """

    def __init__(self, p, sigma, n, pointed, monic, weights):
        self.p = p
        self.sigma = sigma
        self.n = n
        self.pointed = pointed
        self.monic = monic
        self.dim = n if monic else n + 1
        self.weights = weights
        shape = (p,) * self.dim
        # numpy's C order reverses the axes, which the pairing does not see
        self.values = np.fft.ifftn(weights.reshape(shape)).ravel()

    def _index(self, g):
        g = [int(c) % self.p for c in g]
        if len(g) != self.dim:
            raise ShapeError("Dual vectors have {} coordinates.".format(self.dim))
        return sum(c * self.p ** i for i, c in enumerate(g))

    def __getitem__(self, g):
        """Floating value of the transform at the dual vector g."""
        return complex(self.values[self._index(g)])

    def exact(self, g):
        """The transform at g as a :class:`CharacterSum`."""
        g = np.array([int(c) % self.p for c in g], dtype=np.int64)
        self._index(g)
        phases = digit_grid(self.p, self.dim) @ g % self.p
        counts = np.bincount(phases, weights=self.weights, minlength=self.p)
        counts = [int(round(c)) for c in counts]
        return CharacterSum.from_counts(self.p, counts, self.p ** self.dim)

    @property
    def zero_value(self):
        return Fraction(int(self.weights.sum()), self.p ** self.dim)

    @property
    def k(self):
        return self.sigma.index

    def aut(self):
        if self.pointed:
            return self.sigma.aut_prime_count()
        return self.sigma.aut_count()

    def main_term(self):
        shift = 1 if self.pointed else 0
        return Fraction(1, self.p ** (self.k + shift) * self.aut())

    def off_support(self):
        """Mask of the dual vectors outside the annihilator of the span of
        the support of the weights."""
        grid = digit_grid(self.p, self.dim)
        free = (grid[self.weights > 0] != 0).any(axis=0)
        return (grid[:, free] != 0).any(axis=1)

    def off_exponent(self):
        exponent = self.k + 1.0 + (1 if self.pointed else 0)
        if self.monic and self.sigma.degree == self.n:
            exponent -= 0.5
        return exponent

    def report(self):
        p = self.p
        zero = self.zero_value
        main = self.main_term()
        shift = 2 if self.pointed else 1
        zero_constant = float(abs(zero - main) * self.aut()
                              * p ** (self.k + shift))
        mask = self.off_support()
        max_off = float(np.abs(self.values[mask]).max()) if mask.any() else 0.0
        exponent = self.off_exponent()
        off_constant = max_off * p ** exponent
        return FourierReport(
            p=p, n=self.n, sigma=str(self.sigma), pointed=self.pointed,
            monic=self.monic, zero_value=zero, max_off_support=max_off,
            envelope_constant=max(zero_constant, off_constant),
            main_term=main, zero_constant=zero_constant,
            off_constant=off_constant, off_exponent=exponent)


def fourier_full(p, sigma, n=None, pointed=None, monic=False,
                 transform_budget=10**7):
    """Tabulate w (or w') and transform it exhaustively.

    Parameters
    ----------
    p : int
        Prime.
    sigma : SplittingType or str
    n : int, optional
        Form degree; defaults to deg sigma.
    pointed : bool, optional
        Use w'; defaults to whether sigma has a marked factor.
    monic : bool
        Work on the monic model V(F_p) instead of V^hom(F_p).
    transform_budget : int
        Largest number of points p^dim.

    Returns
    -------
    transform : FourierTransform
    """
    if isinstance(sigma, str):
        sigma = SplittingType.parse(sigma)
    if n is None:
        n = sigma.degree
    if pointed is None:
        pointed = sigma.marked is not None
    weights = forms_array(p, sigma, n, pointed, monic, transform_budget)
    logger.debug("transforming %d points for sigma = %s mod %d",
                 len(weights), sigma, p)
    return FourierTransform(p, sigma, n, pointed, monic, weights)


def double_transform_check(weights, p, dim):
    """Apply the unnormalized transform twice; the result must be
    p^dim w(-h). Returns the largest deviation divided by p^dim."""
    axes = tuple(range(dim))
    table = np.asarray(weights, dtype=float).reshape((p,) * dim)
    twice = np.fft.fftn(np.fft.fftn(table))
    reflected = np.roll(np.flip(table, axis=axes), 1, axis=axes)
    return float(np.abs(twice - p ** dim * reflected).max()) / p ** dim


def _report_job(job, transform_budget):
    p, sigma, n, pointed, monic = job
    return fourier_full(p, sigma, n, pointed, monic,
                        transform_budget).report()


def fourier_reports(jobs, config):
    """Reports for (p, sigma, n, pointed, monic) jobs, in input order."""
    jobs = list(jobs)
    worker = partial(_report_job, transform_budget=config.transform_budget)
    if config.workers == 1 or len(jobs) < 2:
        return [worker(job) for job in jobs]
    with Pool(min(config.workers, len(jobs))) as pool:
        return pool.map(worker, jobs)
