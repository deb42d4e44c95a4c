# Integer polynomials and the reciprocal <-> symmetrized correspondence.
#
# Coefficients are stored ascending: index i holds the coefficient of x^i.
#
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np
from scipy.special import comb
from sympy import Poly, Symbol, ZZ

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from .utils import (Bunch, ShapeError, DomainError, parse_coefficients,
                    format_coefficients)

NEG_INF = float("-inf")

_x = Symbol("x")


class IntPoly(object):
    """Dense univariate polynomial with arbitrary precision integer
    coefficients.

    Parameters
    ----------
    coeffs : sequence of int
        Ascending coefficients; trailing zeros are stripped.
    """
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def parse(cls, text):
        """Read the comma separated ascending format ("1,3,1")."""
        return cls(parse_coefficients(text))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def from_sympy(cls, poly):
        """Build from a sympy Poly (or expression in one variable)."""
        if not isinstance(poly, Poly):
            poly = Poly(poly)
        return cls(reversed([int(c) for c in poly.all_coeffs()]))

    def to_sympy(self, symbol=_x):
        """Convert to a sympy Poly over ZZ."""
        if self.is_zero:
            return Poly(0, symbol, domain=ZZ)
        return Poly(list(reversed(self._coeffs)), symbol, domain=ZZ)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        """Degree; the zero polynomial has degree -inf."""
        if not self._coeffs:
            return NEG_INF
        return len(self._coeffs) - 1

    @property
    def is_zero(self):
        return not self._coeffs

    @property
    def leading(self):
        if self.is_zero:
            return 0
        return self._coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def padded(self, length):
        """Coefficient list padded with zeros to ``length``."""
        if len(self._coeffs) > length:
            raise ShapeError("Polynomial of degree {} does not fit in {} "
                             "coefficients.".format(self.degree, length))
        return list(self._coeffs) + [0] * (length - len(self._coeffs))

    def __call__(self, value):
        # Horner; exact for int and Fraction arguments.
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return IntPoly([-c for c in self._coeffs])

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self), len(other))
        return IntPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        return reduce(lambda acc, _: acc * self, range(k), IntPoly([1]))

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self._coeffs)][1:])

    def reversed(self, degree=None):
        """x^degree * P(1/x); ``degree`` defaults to deg P."""
        if degree is None:
            degree = len(self) - 1
        return IntPoly(list(reversed(self.padded(degree + 1))))

    def content(self):
        """gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(gcd, (abs(c) for c in self._coeffs), 0)

    def primitive(self):
        ct = self.content()
        if ct == 0:
            return self
        return IntPoly([c // ct for c in self._coeffs])

    def height(self):
        """Naive height, max |coefficient|."""
        return max((abs(c) for c in self._coeffs), default=0)

    def __repr__(self):
        return "IntPoly({})".format(list(self._coeffs))

    def __str__(self):
        return format_coefficients(self._coeffs)


def _as_poly(obj):
    if isinstance(obj, IntPoly):
        return obj
    if isinstance(obj, int):
        return IntPoly([obj])
    return IntPoly(obj)


# ----------------------------------------------------------
# The reciprocal <-> symmetrized bijection
# ----------------------------------------------------------

class SymPair(object):
    """A reciprocal polynomial f of degree 2n with its symmetrized
    polynomial g, f(x) = x^n g(x + 1/x).
    """
    __slots__ = ("f", "g", "n")

    def __init__(self, f, g, n):
        self.f = f
        self.g = g
        self.n = n

    @classmethod
    def from_g(cls, g, n=None):
        g = _as_poly(g)
        if n is None:
            n = g.degree
        return cls(expand(g, n), g, n)

    @property
    def degenerate(self):
        """True when deg g < n, i.e. the leading coefficient of f vanishes."""
        return self.g.degree != self.n

    def __eq__(self, other):
        if not isinstance(other, SymPair):
            return NotImplemented
        return (self.f, self.g, self.n) == (other.f, other.g, other.n)

    def __hash__(self):
        return hash((self.f, self.g, self.n))

    def __repr__(self):
        return "SymPair(f={}, g={}, n={})".format(self.f, self.g, self.n)


def _laurent_power_rows(n):
    """Row k holds the ascending coefficients (length 2n+1) of
    x^n * (x + 1/x)^k = x^(n-k) * (x^2 + 1)^k."""
    rows = []
    for k in range(n + 1):
        row = [0] * (2 * n + 1)
        for j in range(k + 1):
            row[n - k + 2 * j] = int(comb(k, j, exact=True))
        rows.append(row)
    return rows


def is_reciprocal(f, n=None):
    """True iff the coefficient list of ``f`` is palindromic.

    The zero polynomial is reciprocal. With ``n`` given, f is read as a
    degree-2n polynomial, so vanishing outer coefficients count (x^n g(x+1/x)
    with deg g < n is reciprocal for that n).
    """
    f = _as_poly(f)
    c = f.coeffs if n is None else f.padded(2 * n + 1)
    return c == c[::-1]


def symmetrize(f, n=None):
    """Return the SymPair of a reciprocal polynomial f of degree 2n.

    Parameters
    ----------
    f : IntPoly
        Reciprocal polynomial.
    n : int, optional
        Half degree. When given, f is read as a degree-2n polynomial whose
        outer coefficients may vanish (this is how f looks when deg g < n).

    Returns
    -------
    pair : SymPair

    Raises
    ------
    ShapeError
        If f has odd degree or is not palindromic.
    """
    f = _as_poly(f)
    if n is None:
        if f.is_zero or f.degree % 2 == 1:
            raise ShapeError("Reciprocal input must have even degree 2n.")
        n = f.degree // 2
    a = f.padded(2 * n + 1)
    if a != a[::-1]:
        raise ShapeError("Polynomial is not reciprocal: {}".format(f))
    rows = _laurent_power_rows(n)
    b = [0] * (n + 1)
    # Peel off b_k x^(n-k) (x^2+1)^k from the top coefficient down.
    for k in range(n, -1, -1):
        b[k] = a[n + k]
        if b[k]:
            row = rows[k]
            a = [ai - b[k] * ri for ai, ri in zip(a, row)]
    if any(a):
        raise ShapeError("Residual after symmetrization; input not reciprocal.")
    return SymPair(f, IntPoly(b), n)


def expand(g, n):
    """Return f(x) = x^n g(x + 1/x).

    Raises
    ------
    ShapeError
        If deg g > n.
    """
    g = _as_poly(g)
    if g.degree > n:
        raise ShapeError("deg g = {} exceeds n = {}".format(g.degree, n))
    rows = _laurent_power_rows(n)
    out = [0] * (2 * n + 1)
    for k, bk in enumerate(g.coeffs):
        if bk:
            out = [o + bk * r for o, r in zip(out, rows[k])]
    return IntPoly(out)


def cayley(f, n=None):
    """Cayley transform (1 + x)^(2n) f((1 - x)/(1 + x)).

    The result is even (only even powers of x) iff f is reciprocal.
    """
    f = _as_poly(f)
    if n is None:
        if f.is_zero or f.degree % 2 == 1:
            raise ShapeError("Cayley transform needs deg f = 2n.")
        n = f.degree // 2
    a = f.padded(2 * n + 1)
    one_minus = IntPoly([1, -1])
    one_plus = IntPoly([1, 1])
    out = IntPoly()
    for i, ai in enumerate(a):
        if ai:
            out = out + ai * (one_minus ** i) * (one_plus ** (2 * n - i))
    return out


def is_even(P):
    """True iff P has no odd-degree terms."""
    return not any(c for c in _as_poly(P).coeffs[1::2])


# ----------------------------------------------------------
# Resultants and discriminants
# ----------------------------------------------------------

def resultant(P, Q):
    """Exact resultant Res(P, Q) by the subresultant PRS.

    Follows the convention Res(x - a, Q) = Q(a).

    Raises
    ------
    DomainError
        If either argument is the zero polynomial.
    """
    P, Q = _as_poly(P), _as_poly(Q)
    if P.is_zero or Q.is_zero:
        raise DomainError("Resultant of the zero polynomial.")
    if P.degree == 0:
        return P.leading ** Q.degree
    if Q.degree == 0:
        return Q.leading ** P.degree
    return int(P.to_sympy().resultant(Q.to_sympy()))


def discriminant(P):
    """disc P = (-1)^(d(d-1)/2) Res(P, P') / lc(P) for deg P = d >= 1."""
    P = _as_poly(P)
    d = P.degree
    if P.is_zero or d < 1:
        raise DomainError("Discriminant needs degree at least 1.")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    res = resultant(P, P.derivative())
    q, r = divmod(sign * res, P.leading)
    assert r == 0
    return q


# ----------------------------------------------------------
# Heights
# ----------------------------------------------------------

class HeightReport(Bunch):
    """Heights of a nonzero integer polynomial.

    ``mahler_error`` is an estimate, see :func:`mahler_measure`.
    """
    _fields = ("naive_height", "content", "projective_height",
               "affine_height", "mahler_measure", "mahler_error")


def _polished_roots(P):
    """numpy roots refined by two Newton steps, with first-order error
    estimates |P(r)/P'(r)|."""
    desc = np.array([float(c) for c in reversed(P.coeffs)])
    ddesc = np.polyder(desc)
    roots = np.roots(desc).astype(complex)
    for _ in range(2):
        dv = np.polyval(ddesc, roots)
        safe = np.abs(dv) > 0
        step = np.zeros_like(roots)
        step[safe] = np.polyval(desc, roots[safe]) / dv[safe]
        roots = roots - step
    dv = np.polyval(ddesc, roots)
    with np.errstate(divide="ignore", invalid="ignore"):
        err = np.abs(np.polyval(desc, roots)) / np.abs(dv)
    err[~np.isfinite(err)] = np.sqrt(np.finfo(float).eps)
    return roots, err


def mahler_measure(P):
    """Mahler measure |lc| * prod max(1, |root|) from numpy roots.

    Returns
    -------
    measure : float
    error : float
        First-order estimate of the absolute error, built from the Newton
        residuals |P(r) / P'(r)| of the polished roots and the rounding of
        the product. It is not a certified bound: near clustered or
        multiple roots the true error can be larger.
    """
    P = _as_poly(P)
    if P.is_zero:
        raise DomainError("Mahler measure of the zero polynomial.")
    lc = abs(float(P.leading))
    if P.degree == 0:
        return lc, 0.0
    roots, err = _polished_roots(P)
    mods = np.abs(roots)
    outside = mods > 1.0
    measure = lc * float(np.prod(mods[outside]))
    rel = float(np.sum(err[outside] / mods[outside]))
    rel += 4 * np.finfo(float).eps * P.degree
    return measure, measure * rel


def heights(P):
    """Height data of a nonzero integer polynomial.

    Parameters
    ----------
    P : IntPoly

    Returns
    -------
    report : HeightReport
        naive height, content, projective height (naive / content),
        affine height, Mahler measure and an estimate (not a bound) of its
        absolute error.
    """
    P = _as_poly(P)
    if P.is_zero:
        raise DomainError("Heights of the zero polynomial.")
    naive = P.height()
    ct = P.content()
    measure, error = mahler_measure(P)
    return HeightReport(
        naive_height=naive,
        content=ct,
        projective_height=Fraction(naive, ct),
        affine_height=Fraction(max(naive, 1)),
        mahler_measure=measure,
        mahler_error=error,
    )


def height_root_bounds(P):
    """Return (lower, Htp P, upper) with lower = 2^-d M and
    upper = 2^(d-1) M, M the Mahler measure of the primitive part.

    The product of the heights of the roots equals M for a primitive
    integer polynomial, so lower <= Htp P <= upper.
    """
    P = _as_poly(P)
    d = P.degree
    measure, _ = mahler_measure(P.primitive())
    htp = float(Fraction(P.height(), P.content()))
    return measure * 2.0 ** (-d), htp, measure * 2.0 ** (d - 1)


def height_factor_ratio(g, h):
    """Htp(gh) / (Htp(g) Htp(h)) as an exact rational."""
    g, h = _as_poly(g), _as_poly(h)
    prod = g * h

    def htp(P):
        return Fraction(P.height(), P.content())
    return htp(prod) / (htp(g) * htp(h))


def reflected_product(a_half, b_half, k):
    """Reciprocal f = A^2 - k B^2 = h(x) * x^n h(1/x) for h = A + B sqrt(k).

    ``a_half`` and ``b_half`` hold the coefficients 0..(n-1)/2 of A and B
    for odd n = 2 * len(a_half) - 1; the rest follow from
    theta_i = conj(theta_{n-i}), i.e. A palindromic and B anti-palindromic.
    """
    if len(a_half) != len(b_half):
        raise ShapeError("a_half and b_half must have the same length.")
    m = len(a_half)
    n = 2 * m - 1
    A = [0] * (n + 1)
    B = [0] * (n + 1)
    for i in range(m):
        A[i] = A[n - i] = a_half[i]
        B[i] = b_half[i]
        B[n - i] = -b_half[i]
    A, B = IntPoly(A), IntPoly(B)
    return A * A - k * (B * B)


# ----------------------------------------------------------
# Text format
# ----------------------------------------------------------

def parse_poly(text):
    """Read "1,3,1" (ascending) as 1 + 3x + x^2."""
    return IntPoly.parse(text)


def format_poly(P):
    """Write P in the ascending comma separated format."""
    return format_coefficients(_as_poly(P).coeffs)
