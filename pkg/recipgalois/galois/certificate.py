__doc__ = """Irreducibility over Q and a Dedekind certificate for G_g = S_n.

A transitive subgroup of S_n containing an (n-1)-cycle is doubly
transitive, hence primitive, and a primitive group containing a
transposition is S_n. A transitive group containing a cycle of prime length
l with n/2 < l <= n - 3 is primitive and, by Jordan, contains A_n; a
non-square discriminant then forces S_n.
"""
import logging

from sympy import ZZ, isprime, nextprime
from sympy.polys.galoistools import gf_from_int_poly, gf_irreducible_p

from ..utils import ShapeError
from ..polynomials import discriminant, _as_poly
from .flags import is_square_int
from .fingerprint import frobenius_shapes

logger = logging.getLogger(__name__)

CERTIFIED = "certified"
REFUTED = "refuted"
UNDETERMINED = "undetermined"


def is_irreducible(P, prime_budget=50):
    """Irreducibility over Q (constants are not irreducible).

    Tries to find a prime modulo which the primitive part stays irreducible
    of the same degree; falls back to sympy's exact factorization.
    """
    P = _as_poly(P)
    if P.is_zero or P.degree < 1:
        return False
    Q = P.primitive()
    if Q.degree == 1:
        return True
    desc = list(reversed(Q.coeffs))
    p = 1
    for _ in range(prime_budget):
        p = int(nextprime(p))
        if Q.leading % p == 0:
            continue
        if gf_irreducible_p(gf_from_int_poly(desc, p), p, ZZ):
            return True
    _, factors = Q.to_sympy().factor_list()
    return len(factors) == 1 and factors[0][1] == 1


def _has_transposition_power(shape):
    # Exactly one 2-cycle and every other cycle odd: an odd power is a
    # transposition.
    return shape.count(2) == 1 and all(c % 2 for c in shape if c != 2)


def _has_large_prime_cycle(shape, n):
    return any(isprime(c) and 2 * c > n and c <= n - 3 for c in shape)


def sn_certificate(g, prime_budget=1000, seed=0):
    """Decide G_g = S_n from Frobenius cycle types.

    Parameters
    ----------
    g : IntPoly
        Degree n >= 1.
    prime_budget : int
        Unramified primes scanned before giving up.
    seed : int
        Prime order.

    Returns
    -------
    status : str
        "certified", "refuted" (g reducible, or disc g a square so that
        G_g lies in A_n) or "undetermined".
    """
    g = _as_poly(g)
    if g.is_zero or g.degree < 1:
        raise ShapeError("sn_certificate needs deg g >= 1.")
    n = g.degree
    if n == 1:
        return CERTIFIED
    if not is_irreducible(g):
        return REFUTED
    if n == 2:
        return CERTIFIED
    disc = discriminant(g)
    if is_square_int(disc):
        return REFUTED
    if n == 3:
        return CERTIFIED

    long_cycle = transposition = False
    for p, shape in frobenius_shapes(g, prime_budget, seed, disc=disc):
        long_cycle = long_cycle or shape == (n - 1, 1)
        transposition = transposition or _has_transposition_power(shape)
        if (long_cycle and transposition) or _has_large_prime_cycle(shape, n):
            logger.debug("S_%d certified for %s at p = %d", n, g, p)
            return CERTIFIED
    logger.info("no S_%d certificate for %s within %d primes", n, g,
                prime_budget)
    return UNDETERMINED
