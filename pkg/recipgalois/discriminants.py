__doc__ = """Discriminant identities, splitting types modulo p and the double
discriminant.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import logging
import itertools as it
from collections import Counter
from math import factorial, prod

from sympy import Symbol, Poly, QQ, ZZ
from sympy import diff, Expr
from sympy.ntheory import isprime, factorint, pollard_rho, perfect_power
from sympy.polys.galoistools import gf_factor, gf_from_int_poly
from sympy.polys.polyfuncs import interpolate

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from .utils import (Bunch, ShapeError, DomainError, ResourceError, valuation)
from .polynomials import IntPoly, SymPair, discriminant, _as_poly

logger = logging.getLogger(__name__)

_b0 = Symbol("b0")


def _check_prime(p):
    if not isprime(p):
        raise DomainError("{} is not prime.".format(p))


# ----------------------------------------------------------
# disc f from g
# ----------------------------------------------------------

def disc_f_via_g(pair):
    """disc f computed from the symmetrized polynomial:

        disc f = g(2) * g(-2) * (disc g)^2

    Parameters
    ----------
    pair : SymPair
        deg g must equal n.

    Returns
    -------
    disc : int
        Equal to discriminant(pair.f).
    """
    g = pair.g
    if pair.degenerate:
        raise ShapeError("deg g < n; the leading coefficient of f vanishes.")
    if g.degree == 0:
        raise ShapeError("n must be positive.")
    return g(2) * g(-2) * discriminant(g) ** 2


# ----------------------------------------------------------
# Splitting types
# ----------------------------------------------------------

class _InfiniteType(object):
    """Splitting type of a polynomial that vanishes mod p (index infinity)."""
    index = float("inf")

    def __repr__(self):
        return "INFINITY"

    __str__ = __repr__

    def __reduce__(self):
        return "INFINITY"


INFINITY = _InfiniteType()

_ANNOTATIONS = {None: "a", "plus2": "b", "minus2": "c"}
_ANNOTATION_TEXT = {"plus2": "@2", "minus2": "@-2"}


class SplittingType(object):
    """Multiset of (degree, multiplicity) pairs of the irreducible factors of
    a polynomial modulo p.

    Parameters
    ----------
    factors : iterable of (int, int)
        (f_i, e_i) pairs.
    marked : int or None
        Multiplicity e_1 of a distinguished linear factor. The pair
        (1, marked) must be one of ``factors``.
    annotation : {None, "plus2", "minus2"}
        Where the marked root sits: u = 2 (case b) or u = -2 (case c).
        None is case a (or a pointed type whose marked factor is y).
    """
    __slots__ = ("factors", "marked", "annotation")

    def __init__(self, factors, marked=None, annotation=None):
        factors = tuple(sorted((int(f), int(e)) for f, e in factors))
        for f, e in factors:
            if f < 1 or e < 1:
                raise ShapeError("Factor degrees and multiplicities must be "
                                 "positive: {}".format(factors))
        if marked is not None and (1, marked) not in factors:
            raise ShapeError("Marked factor 1^{} is not in {}".format(
                marked, factors))
        if annotation not in _ANNOTATIONS:
            raise ShapeError("Unknown annotation {!r}".format(annotation))
        if annotation is not None and marked is None:
            raise ShapeError("Cases b and c need a marked linear factor.")
        self.factors = factors
        self.marked = marked
        self.annotation = annotation

    @classmethod
    def parse(cls, text):
        """Read "1^2,1" style text. A leading "*" marks the distinguished
        linear factor and a trailing "@2" / "@-2" sets the annotation."""
        text = text.strip()
        annotation = None
        for key, suffix in _ANNOTATION_TEXT.items():
            if text.endswith(suffix):
                annotation = key
                text = text[:-len(suffix)]
        marked = None
        factors = []
        if text:
            for item in text.split(","):
                item = item.strip()
                star = item.startswith("*")
                item = item.lstrip("*")
                try:
                    if "^" in item:
                        f, e = item.split("^")
                        pair = (int(f), int(e))
                    else:
                        pair = (int(item), 1)
                except ValueError:
                    raise ShapeError("Malformed splitting type {!r}".format(text))
                if star:
                    if pair[0] != 1 or marked is not None:
                        raise ShapeError("Only one linear factor can be marked.")
                    marked = pair[1]
                factors.append(pair)
        return cls(factors, marked=marked, annotation=annotation)

    def __str__(self):
        rest = list(self.factors)
        items = []
        if self.marked is not None:
            rest.remove((1, self.marked))
            items.append("*" + _pair_text((1, self.marked)))
        items += [_pair_text(pair) for pair in rest]
        return ",".join(items) + _ANNOTATION_TEXT.get(self.annotation, "")

    def __repr__(self):
        return "SplittingType({!r})".format(str(self))

    def __eq__(self, other):
        if not isinstance(other, SplittingType):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        return (self.degree, self.index, self.factors) < \
            (other.degree, other.index, other.factors)

    def _key(self):
        return (self.factors, self.marked, self.annotation)

    @property
    def degree(self):
        return sum(f * e for f, e in self.factors)

    @property
    def index(self):
        return sum((e - 1) * f for f, e in self.factors)

    @property
    def case(self):
        return _ANNOTATIONS[self.annotation]

    @property
    def j(self):
        """Number of marked roots."""
        return 0 if self.marked is None else 1

    def aut_count(self):
        """prod f_i times the number of factor permutations preserving the
        type."""
        return prod(f for f, _ in self.factors) * _preserving(self.factors)

    def aut_prime_count(self):
        """As aut_count, but only permuting the factors other than the
        marked one."""
        if self.marked is None:
            raise ShapeError("aut_prime_count needs a marked linear factor.")
        return self.without_marked().aut_count()

    def aut_count_j(self):
        if self.j == 0:
            return self.aut_count()
        return self.aut_prime_count()

    def without_marked(self):
        """Type obtained by deleting the marked factor 1^e1."""
        if self.marked is None:
            raise ShapeError("No marked factor to delete.")
        rest = list(self.factors)
        rest.remove((1, self.marked))
        return SplittingType(rest)

    def with_marked(self, e1, annotation=None):
        return SplittingType(self.factors, marked=e1, annotation=annotation)


def _pair_text(pair):
    f, e = pair
    if e == 1:
        return str(f)
    return "{}^{}".format(f, e)


def _preserving(factors):
    return prod(factorial(c) for c in Counter(factors).values())


def splitting_types(d, max_index=None, min_degree=1):
    """All unannotated splitting types of degree in [min_degree, d] whose
    index is at most ``max_index``, sorted by (degree, index)."""
    pairs = [(f, e) for f in range(1, d + 1) for e in range(1, d // f + 1)]
    out = set()

    def extend(start, acc, deg):
        if deg >= min_degree:
            out.add(SplittingType(acc))
        for i in range(start, len(pairs)):
            f, e = pairs[i]
            if deg + f * e <= d:
                extend(i, acc + [pairs[i]], deg + f * e)
    extend(0, [], 0)
    if max_index is not None:
        out = set(s for s in out if s.index <= max_index)
    return sorted(out, key=lambda s: (s.degree, s.index, s.factors))


def splitting_type_mod_p(P, p, degree=None):
    """Factor P mod p and return its splitting type.

    Parameters
    ----------
    P : IntPoly
    p : int
        Prime.
    degree : int, optional
        Read P as a binary form of this degree; a drop in degree mod p
        contributes a factor y^(degree - deg(P mod p)).

    Returns
    -------
    sigma : SplittingType or INFINITY
        INFINITY when p divides every coefficient.
    """
    _check_prime(p)
    P = _as_poly(P)
    desc = gf_from_int_poly(list(reversed(P.coeffs)), p)
    if not desc:
        return INFINITY
    _, factors = gf_factor(desc, p, ZZ)
    pairs = [(len(f) - 1, e) for f, e in factors]
    if degree is not None:
        top = len(desc) - 1
        if top > degree:
            raise ShapeError("Polynomial exceeds the form degree {}".format(degree))
        if top < degree:
            pairs.append((1, degree - top))
    return SplittingType(pairs)


class IndexCheck(Bunch):
    """Both sides of ind(g mod p) <= v_p(disc g)."""
    _fields = ("holds", "index", "valuation", "status")


def index_valuation_check(g, p):
    """Check ind(g mod p) <= v_p(disc g).

    Violated preconditions (p <= deg g, disc g = 0, p | g) give
    ``status == "skip"`` and ``holds is None``.
    """
    _check_prime(p)
    g = _as_poly(g)
    if g.is_zero or g.degree < 1 or p <= g.degree:
        return IndexCheck(holds=None, status="skip")
    disc = discriminant(g)
    if disc == 0:
        return IndexCheck(holds=None, status="skip")
    sigma = splitting_type_mod_p(g, p, degree=g.degree)
    if sigma is INFINITY:
        return IndexCheck(holds=None, status="skip")
    v = valuation(disc, p)
    holds = sigma.index <= v
    logger.debug("index check g=%s p=%d: ind=%d v=%d", g, p, sigma.index, v)
    return IndexCheck(holds=holds, index=sigma.index, valuation=v, status="ok")


def count_pointed_high_index(p, n, k):
    """Number of binary n-ic forms over F_p with y | g (g(1, 0) = 0) and
    ind(g) >= k; the zero form counts (its index is infinite)."""
    _check_prime(p)
    total = 0
    # y | g means the x^n coefficient vanishes.
    for coeffs in it.product(range(p), repeat=n):
        sigma = splitting_type_mod_p(IntPoly(coeffs), p, degree=n)
        if sigma.index >= k:
            total += 1
    return total


# ----------------------------------------------------------
# Radical and smallest square multiple
# ----------------------------------------------------------

class SieveParams(Bunch):
    """D with its radical C and D' (D'^2 the smallest square multiple)."""
    _fields = ("D", "C", "D_prime", "delta")


def _prime_factors(D, trial_bound, rounds=8):
    found = Counter()
    pending = list(factorint(D, limit=trial_bound).items())
    while pending:
        m, e = pending.pop()
        if m == 1:
            continue
        if isprime(m):
            found[m] += e
            continue
        power = perfect_power(m)
        if power:
            base, k = power
            pending.append((base, e * k))
            continue
        d = None
        for seed in range(rounds):
            d = pollard_rho(m, seed=seed, retries=5, max_steps=10 ** 6)
            if d:
                break
        if not d:
            raise ResourceError("Could not split {} within the factoring "
                                "budget.".format(m))
        pending.append((int(d), e))
        pending.append((m // int(d), e))
    return found


def radical_and_square_multiple(D, trial_bound=10 ** 6, delta=None):
    """Radical C = prod p and D' = prod p^ceil(v_p(D)/2) of D >= 1.

    Raises
    ------
    ResourceError
        If Pollard rho cannot split a cofactor.
    """
    D = int(D)
    if D < 1:
        raise DomainError("D must be a positive integer.")
    factors = _prime_factors(D, trial_bound)
    C = prod(factors)
    D_prime = prod(q ** ((e + 1) // 2) for q, e in factors.items())
    return SieveParams(D=D, C=C, D_prime=D_prime, delta=delta)


# ----------------------------------------------------------
# Double discriminant
# ----------------------------------------------------------

def _interpolate_b0(values, points):
    """Integer polynomial in b0 through (points[i], values[i])."""
    expr = interpolate(list(zip(points, values)), _b0)
    poly = Poly(expr, _b0, domain=QQ)
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        if c.q != 1:
            raise ArithmeticError("Interpolant is not integral.")
        coeffs.append(int(c.p))
    return IntPoly(coeffs)


def _g_with_b0(b, b0):
    return IntPoly([b0] + list(b))


def _h_poly(b):
    """h(b0) = g(2) g(-2) disc_u g as a polynomial in b0."""
    n = len(b)
    points = list(range(n + 2))
    values = []
    for x in points:
        g = _g_with_b0(b, x)
        values.append(g(2) * g(-2) * discriminant(g))
    return _interpolate_b0(values, points)


def _disc_u_poly(b):
    """disc_u g as a polynomial (degree n - 1) in b0."""
    n = len(b)
    points = list(range(n))
    values = [discriminant(_g_with_b0(b, x)) for x in points]
    return _interpolate_b0(values, points)


def _check_point(b, n):
    b = [int(x) for x in b]
    if n < 2:
        raise ShapeError("The double discriminant needs n >= 2.")
    if len(b) != n:
        raise ShapeError("Expected {} coefficients b_1..b_n, got {}".format(
            n, len(b)))
    return b


def double_disc_R(b, n):
    """R(b_1, ..., b_n) = b_n * disc_{b0} h with h = g(2) g(-2) disc_u g.

    ``b`` holds b_1..b_n; h is treated as a polynomial in the constant
    term b0. R is 0 when b_n = 0.
    """
    b = _check_point(b, n)
    if b[-1] == 0:
        return 0
    return b[-1] * discriminant(_h_poly(b))


def fzn_R_factored(b, n):
    """Right hand side of the factorization of R:

        b_n disc_{b0}(disc_u g) (g(2) - g(-2))^2
            (disc_u(g - g(2)))^2 (disc_u(g - g(-2)))^2
    """
    b = _check_point(b, n)
    if b[-1] == 0:
        return 0
    upper = IntPoly([0] + b)
    diff_pm = upper(2) - upper(-2)
    shifted_plus = upper - upper(2)
    shifted_minus = upper - upper(-2)
    return (b[-1] * discriminant(_disc_u_poly(b)) * diff_pm ** 2 *
            discriminant(shifted_plus) ** 2 * discriminant(shifted_minus) ** 2)


def fzn_R_identity_check(b, n):
    """True iff |R| agrees with the factored form at the point b."""
    return abs(double_disc_R(b, n)) == abs(fzn_R_factored(b, n))


# ----------------------------------------------------------
# Divisibility for mod p reasons
# ----------------------------------------------------------

def _directions(m):
    yield (0,) * m
    for i in range(m):
        unit = [0] * m
        unit[i] = 1
        yield tuple(unit)
    for signs in it.product((-1, 1), repeat=m):
        yield signs


def p_reasons_derivative_check(h, c, p, derivative=None, variables=None):
    """Instance check of: if h(c + p d) = 0 mod p^2 for every direction d,
    then the partial derivative of h in the last variable vanishes mod p
    at c.

    Parameters
    ----------
    h : callable or sympy expression
        Integer polynomial. A callable takes the point as positional args.
    c : sequence of int
    p : int
        Odd prime.
    derivative : callable, optional
        Partial derivative of a callable ``h`` in its last argument.
    variables : sequence of sympy symbols, optional
        Variable order for a sympy expression ``h``.

    Returns
    -------
    bool
        Truth of the implication; vacuously True when the hypothesis fails
        on one of the tested directions (zero, unit and sign vectors).
    """
    _check_prime(p)
    if p == 2:
        raise DomainError("The derivative criterion needs an odd prime.")
    c = [int(x) for x in c]
    if isinstance(h, Expr):
        if variables is None:
            variables = sorted(h.free_symbols, key=lambda s: s.name)
        expr = h
        dexpr = diff(expr, variables[-1])

        def h(*point):
            return int(expr.subs(dict(zip(variables, point))))

        def derivative(*point):
            return int(dexpr.subs(dict(zip(variables, point))))
    if derivative is None:
        raise DomainError("A derivative is needed for a black-box h.")
    for d in _directions(len(c)):
        point = [ci + p * di for ci, di in zip(c, d)]
        if h(*point) % (p * p) != 0:
            return True
    return derivative(*c) % p == 0
