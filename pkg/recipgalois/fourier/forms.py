__doc__ = """Binary forms over F_p and the divisor-tuple counts w and w'.

A binary n-ic form is stored by its coefficient vector (c_0, ..., c_n),
c_i being the coefficient of x^i y^(n - i). The same vector read as an
ascending polynomial is F(x, 1), so forms multiply by convolution.

For a splitting type sigma = (f_1^e_1 ... f_r^e_r), w(F) counts sets of
distinct irreducible forms P_i of degree f_i (each either y or monic in x)
with prod P_i^e_i dividing F, up to the permutations preserving sigma.
The pointed count w' freezes the marked factor at y and counts the rest
among forms prime to y.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import itertools as it
from collections import Counter
from functools import lru_cache

import numpy as np
from sympy import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_rem

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..utils import ShapeError, ResourceError
from ..discriminants import _check_prime

#: The form y, as a coefficient vector.
Y_FORM = (1, 0)
#: The monic polynomial u.
U_POLY = (0, 1)


class BinaryFormModP(object):
    """Binary form over F_p given by (c_0, ..., c_n)."""
    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        coeffs = tuple(int(c) % p for c in coeffs)
        if not coeffs:
            raise ShapeError("A binary form needs at least one coefficient.")
        self.p = int(p)
        self.coeffs = coeffs

    @classmethod
    def from_index(cls, p, n, index):
        """Inverse of :attr:`flat_index`."""
        return cls(p, [(index // p ** i) % p for i in range(n + 1)])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not any(self.coeffs)

    @property
    def flat_index(self):
        return sum(c * self.p ** i for i, c in enumerate(self.coeffs))

    def dehomogenized(self):
        """Ascending coefficients of F(x, 1) with trailing zeros removed."""
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    def y_order(self):
        """Exponent of the largest power of y dividing F."""
        if self.is_zero:
            return float("inf")
        return self.degree - (len(self.dehomogenized()) - 1)

    def divides(self, other):
        if other.is_zero:
            return True
        if self.is_zero or self.degree > other.degree:
            return False
        if self.y_order() > other.y_order():
            return False
        num = list(reversed(other.dehomogenized()))
        den = list(reversed(self.dehomogenized()))
        return not gf_rem(num, den, self.p, ZZ)

    def __mul__(self, other):
        if self.p != other.p:
            raise ShapeError("Forms over different fields.")
        return BinaryFormModP(self.p, np.convolve(self.coeffs, other.coeffs))

    def __eq__(self, other):
        if not isinstance(other, BinaryFormModP):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return "BinaryFormModP({}, {})".format(self.p, list(self.coeffs))


def _as_form(p, F):
    if isinstance(F, BinaryFormModP):
        return F
    return BinaryFormModP(p, F)


# ----------------------------------------------------------
# Irreducibles
# ----------------------------------------------------------

@lru_cache(maxsize=None)
def monic_irreducibles(p, d):
    """Ascending coefficient tuples of the monic irreducible polynomials of
    degree d over F_p."""
    out = []
    for digits in it.product(range(p), repeat=d):
        asc = digits + (1,)
        if d == 1 or gf_irreducible_p(list(reversed(asc)), p, ZZ):
            out.append(asc)
    return tuple(out)


def irreducible_forms(p, d, exclude_y=False):
    """Irreducible binary forms of degree d over F_p up to scalars: y (for
    d = 1) and the homogenized monic irreducibles in x."""
    forms = monic_irreducibles(p, d)
    if d == 1 and not exclude_y:
        forms = (Y_FORM,) + forms
    return forms


def _monic_pool(p, d, exclude_u=False):
    forms = monic_irreducibles(p, d)
    if d == 1 and exclude_u:
        forms = tuple(P for P in forms if P != U_POLY)
    return forms


def factor_tuples(factors, pool):
    """Divisor tuples for a splitting type.

    Parameters
    ----------
    factors : tuple of (int, int)
        (f_i, e_i) pairs.
    pool : callable
        Maps a degree f to the irreducibles of that degree.

    Yields
    ------
    terms : list of (tuple, int)
        (P_i, e_i) with distinct P_i, one representative per orbit of the
        permutations preserving the type.
    """
    classes = sorted(Counter(factors).items())
    choices = [list(it.combinations(pool(f), m)) for (f, _), m in classes]
    for pick in it.product(*choices):
        used = [P for group in pick for P in group]
        if len(set(used)) < len(used):
            continue
        yield [(P, e) for ((_, e), _), group in zip(classes, pick)
               for P in group]


def divisor_product(p, terms, start=(1,)):
    """prod P_i^e_i over F_p as an ascending coefficient array."""
    D = np.array(start, dtype=np.int64)
    for P, e in terms:
        for _ in range(e):
            D = np.convolve(D, P) % p
    return D


# ----------------------------------------------------------
# Pointwise counts
# ----------------------------------------------------------

def _check_sigma(sigma, n, pointed):
    if sigma.degree > n:
        raise ShapeError("deg sigma = {} exceeds n = {}".format(sigma.degree, n))
    if pointed and sigma.marked is None:
        raise ShapeError("Pointed counts need a marked linear factor.")
    if not pointed and sigma.annotation is not None:
        raise ShapeError("w is defined for unannotated types only.")


def _pointed_parts(sigma, pointed):
    if pointed:
        return sigma.without_marked().factors, sigma.marked
    return sigma.factors, 0


def w_value(p, sigma, F):
    """w_{p, sigma}(F), the number of divisor tuples of type sigma of F."""
    _check_prime(p)
    F = _as_form(p, F)
    _check_sigma(sigma, F.degree, False)
    pool = lambda f: irreducible_forms(p, f)
    return sum(
        BinaryFormModP(p, divisor_product(p, terms)).divides(F)
        for terms in factor_tuples(sigma.factors, pool))


def w_pointed_value(p, sigma, F):
    """w'_{p, sigma}(F): the marked factor is y^e1, the others are prime
    to y."""
    _check_prime(p)
    F = _as_form(p, F)
    _check_sigma(sigma, F.degree, True)
    rest, e1 = _pointed_parts(sigma, True)
    fixed = tuple(divisor_product(p, [(Y_FORM, e1)]))
    pool = lambda f: irreducible_forms(p, f, exclude_y=True)
    return sum(
        BinaryFormModP(p, divisor_product(p, terms, fixed)).divides(F)
        for terms in factor_tuples(rest, pool))


def w_monic_value(p, sigma, f, pointed=False):
    """w (or w' with the marked factor frozen at u) on a monic polynomial
    f given by ascending coefficients."""
    _check_prime(p)
    f = [int(c) % p for c in f]
    if len(f) < 2 or f[-1] != 1:
        raise ShapeError("Expected a monic polynomial of positive degree.")
    _check_sigma(sigma, len(f) - 1, pointed)
    rest, e1 = _pointed_parts(sigma, pointed)
    fixed = tuple(divisor_product(p, [(U_POLY, e1)]))
    pool = lambda d: _monic_pool(p, d, exclude_u=pointed)
    num = list(reversed(f))
    count = 0
    for terms in factor_tuples(rest, pool):
        D = divisor_product(p, terms, fixed)
        count += not gf_rem(num, [int(c) for c in D[::-1]], p, ZZ)
    return count


# ----------------------------------------------------------
# Full tables
# ----------------------------------------------------------

def digit_grid(p, m):
    """All vectors of F_p^m; row r holds the base-p digits of r."""
    return (np.arange(p ** m, dtype=np.int64)[:, None]
            // p ** np.arange(m, dtype=np.int64)) % p


def _multiples(p, D, n, monic):
    # Rows of D * Q for every admissible cofactor Q.
    d = len(D) - 1
    m = n - d + 1
    T = np.zeros((m, n + 1), dtype=np.int64)
    for j in range(m):
        T[j, j:j + d + 1] = D
    if monic:
        Q = np.hstack([digit_grid(p, m - 1),
                       np.ones((p ** (m - 1), 1), dtype=np.int64)])
        return (Q @ T % p)[:, :n]
    return digit_grid(p, m) @ T % p


def forms_array(p, sigma, n=None, pointed=None, monic=False,
            transform_budget=10**7):
    """Tabulate w (or w') on every point of V^hom(F_p), or of the monic
    model V(F_p) identified with F_p^n by subtracting u^n.

    Returns
    -------
    weights : numpy.ndarray
        int64 array of length p^dim indexed by sum_i c_i p^i.

    Raises
    ------
    ResourceError
        If p^dim exceeds ``transform_budget``.
    """
    _check_prime(p)
    if n is None:
        n = sigma.degree
    if pointed is None:
        pointed = sigma.marked is not None
    _check_sigma(sigma, n, pointed)
    dim = n if monic else n + 1
    if p ** dim > transform_budget:
        raise ResourceError("p^{} = {} points exceed the transform budget {}"
                            .format(dim, p ** dim, transform_budget))
    rest, e1 = _pointed_parts(sigma, pointed)
    if monic:
        fixed = divisor_product(p, [(U_POLY, e1)])
        pool = lambda d: _monic_pool(p, d, exclude_u=pointed)
    else:
        fixed = divisor_product(p, [(Y_FORM, e1)])
        pool = lambda d: irreducible_forms(p, d, exclude_y=pointed)
    powers = p ** np.arange(dim, dtype=np.int64)
    weights = np.zeros(p ** dim, dtype=np.int64)
    for terms in factor_tuples(rest, pool):
        D = divisor_product(p, terms, fixed)
        # D * Q is injective in Q, so the indices are distinct
        weights[_multiples(p, D, n, monic) @ powers] += 1
    return weights
