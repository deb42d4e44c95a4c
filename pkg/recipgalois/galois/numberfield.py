__doc__ = """Squares in Q[u]/(g) and the G3 test.

G_f lies in G3 exactly when f = c h(x) x^n h(1/x) over a quadratic field
Q(sqrt k), i.e. when k (beta^2 - 4) is a square in Q(beta). For odd n the
norm of beta^2 - 4 is g(2) g(-2) / b_n^2, so k must be the squarefree part
of g(2) g(-2).

The square test is deterministic: a false witness at a split prime or an
inert prime proves "no"; otherwise a square root found modulo an inert
prime is Hensel lifted, rationally reconstructed and verified exactly.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import logging
from fractions import Fraction
from math import gcd, isqrt

from sympy import QQ, Rational, Symbol, Poly, ZZ, legendre_symbol
from sympy.polys.galoistools import (gf_factor, gf_from_int_poly, gf_eval,
                                     gf_irreducible_p, gf_mul, gf_mul_ground,
                                     gf_pow_mod, gf_rem, gf_sqr, gf_sub)

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..utils import Bunch, ShapeError, SeparabilityError
from ..polynomials import (IntPoly, discriminant, is_reciprocal, symmetrize,
                           _as_poly)
from .flags import g3_radicand
from .certificate import is_irreducible, sn_certificate, CERTIFIED
from .fingerprint import prime_stream

logger = logging.getLogger(__name__)

_u = Symbol("u")

#: Split primes checked by the prefilter before attempting a lift.
SPLIT_PRIMES = 20


def rational_reconstruction(a, m):
    """The fraction r/s = a mod m with |r|, |s| <= sqrt(m/2), or None.

    Half extended Euclid on (m, a); the answer is unique when it exists.
    """
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


class SquareTest(Bunch):
    """Outcome of :func:`square_in_field`.

    ``root`` holds the ascending rational coefficients of a square root
    when ``status`` is "yes"; ``precision`` is the bit size of the p-adic
    modulus reached by the lift.
    """
    _fields = ("status", "prime", "precision", "root")


def _descending(P):
    return list(reversed(_as_poly(P).coeffs))


def _mulmod(a, b, G, m):
    return gf_rem(gf_mul(a, b, m, ZZ), G, m, ZZ)


def _reconstruct(gamma, m, n):
    ascending = list(reversed(gamma)) + [0] * (n - len(gamma))
    out = []
    for c in ascending:
        r = rational_reconstruction(c, m)
        if r is None:
            return None
        out.append(r)
    return out


def _verify(root, delta, g):
    gamma = Poly([Rational(c.numerator, c.denominator) for c in reversed(root)],
                 _u, domain=QQ)
    G = Poly(_descending(g), _u, domain=QQ)
    D = Poly(_descending(delta), _u, domain=QQ)
    return (gamma * gamma - D).rem(G).is_zero


def _hensel_lift(root, delta, g, p, max_bits):
    """Lift a square root of delta mod (p, g) to Q[u]/(g) if possible."""
    n = g.degree
    g_desc, d_desc = _descending(g), _descending(delta)
    G = gf_from_int_poly(g_desc, p)
    # (2 gamma)^-1 in F_q via gamma^(q - 2)
    w = gf_pow_mod(gf_mul_ground(root, 2, p, ZZ), p ** n - 2, G, p, ZZ)
    gamma, m = root, p
    while m.bit_length() <= max_bits:
        m = m * m
        G = gf_from_int_poly(g_desc, m)
        D = gf_rem(gf_from_int_poly(d_desc, m), G, m, ZZ)
        err = gf_sub(_mulmod(gamma, gamma, G, m), D, m, ZZ)
        gamma = gf_sub(gamma, _mulmod(w, err, G, m), m, ZZ)
        two_gw = gf_mul_ground(_mulmod(gamma, w, G, m), 2, m, ZZ)
        w = _mulmod(w, gf_sub([2], two_gw, m, ZZ), G, m)
        candidate = _reconstruct(gamma, m, n)
        if candidate is not None and _verify(candidate, delta, g):
            return SquareTest(status="yes", prime=p, precision=m.bit_length(),
                              root=candidate)
    logger.info("square root lift mod %d gave up at %d bits", p, m.bit_length())
    return SquareTest(status="undetermined", prime=p, precision=m.bit_length())


def square_in_field(delta, g, prime_budget=1000, seed=0, max_bits=4096):
    """Is delta a square in Q[u]/(g)?

    Parameters
    ----------
    delta : IntPoly
    g : IntPoly
        Monic and irreducible of odd degree (so that inert primes
        p = 3 mod 4 give residue fields of order q = 3 mod 4).
    prime_budget : int
        Primes scanned by each stage.
    max_bits : int
        Largest p-adic modulus tried by the lift.

    Returns
    -------
    test : SquareTest
        status "yes", "no" or "undetermined".
    """
    g, delta = _as_poly(g), _as_poly(delta)
    if g.leading != 1 or g.degree < 1 or g.degree % 2 == 0:
        raise ShapeError("square_in_field needs a monic g of odd degree.")
    n = g.degree
    disc = discriminant(g)
    if disc == 0:
        raise SeparabilityError("g has a repeated root.")
    g_desc, d_desc = _descending(g), _descending(delta)

    # Degree-one primes: delta(r) must be a square mod p at every root r.
    split, tried = 0, 0
    for p in prime_stream(seed):
        if split >= SPLIT_PRIMES or tried >= prime_budget:
            break
        tried += 1
        if p == 2 or disc % p == 0:
            continue
        G = gf_from_int_poly(g_desc, p)
        D = gf_from_int_poly(d_desc, p)
        roots = [(-h[1]) % p for h, _ in gf_factor(G, p, ZZ)[1] if len(h) == 2]
        for r in roots:
            value = gf_eval(D, r, p, ZZ)
            if value and legendre_symbol(value, p) == -1:
                logger.debug("delta is not a square at the root %d mod %d", r, p)
                return SquareTest(status="no", prime=p)
        split += bool(roots)

    # Inert prime p = 3 mod 4: the square root is delta^((q + 1) / 4).
    tried = 0
    for p in prime_stream(seed):
        if tried >= prime_budget:
            break
        tried += 1
        if p % 4 != 3 or disc % p == 0:
            continue
        G = gf_from_int_poly(g_desc, p)
        if not gf_irreducible_p(G, p, ZZ):
            continue
        D = gf_rem(gf_from_int_poly(d_desc, p), G, p, ZZ)
        if not D:
            continue
        root = gf_pow_mod(D, (p ** n + 1) // 4, G, p, ZZ)
        if gf_rem(gf_sqr(root, p, ZZ), G, p, ZZ) != D:
            return SquareTest(status="no", prime=p)
        return _hensel_lift(root, delta, g, p, max_bits)
    return SquareTest(status="undetermined")


def monic_g3_data(g, k):
    """Monic g*(u) = b_n^(n-1) g(u / b_n) and delta = k (u^2 - 4 b_n^2).

    The roots of g* are b_n beta, so delta is k (beta^2 - 4) times the
    square b_n^2.
    """
    g = _as_poly(g)
    n, bn = g.degree, g.leading
    star = [c * bn ** (n - 1 - i) for i, c in enumerate(g.coeffs[:-1])] + [1]
    return IntPoly(star), IntPoly([-4 * k * bn * bn, 0, k])


def g3_flag(pair, prime_budget=1000, seed=0, certificate=None, max_bits=4096):
    """G_f inside G3 = <1> x S_n.

    Returns
    -------
    status : str
        "not_applicable" for even n (or n = 1), "undetermined" when G_g = S_n
        is not certified or the lift gives up, else "yes" / "no".
    """
    n = pair.n
    if n % 2 == 0 or n < 3:
        return "not_applicable"
    k = g3_radicand(pair)
    if certificate is None:
        certificate = sn_certificate(pair.g, prime_budget, seed)
    if certificate != CERTIFIED:
        return "undetermined"
    g_star, delta = monic_g3_data(pair.g, k)
    test = square_in_field(delta, g_star, prime_budget, seed, max_bits)
    logger.debug("G3 test for %s with k = %d: %s", pair.g, k, test.status)
    return test.status


def reducibility_flag(f, prime_budget=50):
    """True iff f factors over Q.

    For reciprocal f with f(0) != 0 a factorization of g lifts to f, so g
    is tested first.
    """
    f = _as_poly(f)
    if f.is_zero or f.degree < 1:
        return False
    if f.degree % 2 == 0 and f.coeff(0) != 0 and is_reciprocal(f):
        g = symmetrize(f).g
        if g.degree > 1 and not is_irreducible(g, prime_budget):
            return True
    return not is_irreducible(f, prime_budget)
