__doc__ = """Frobenius cycle types and the Chebotarev fingerprint.

For p not dividing lc(P) disc(P) the degrees of the irreducible factors of
P mod p are the cycle lengths of the Frobenius at p. Tallying them over
many primes estimates the cycle type distribution of the Galois group,
which is then compared with the exact tables of the named subgroups of
S_2 wr S_n.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import logging
import warnings
from collections import Counter, OrderedDict
from functools import lru_cache

import numpy as np
from sympy import ZZ, nextprime
from sympy.polys.galoistools import gf_factor, gf_from_int_poly

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..utils import Bunch, ShapeError, SeparabilityError
from ..polynomials import discriminant, _as_poly
from ..groups.subgroups import TAGS, named_subgroup, cycle_type_distribution
from ..stats import total_variation

logger = logging.getLogger(__name__)

#: Below this many usable primes a fingerprint is flagged as unreliable.
MIN_PRIMES = 50


def prime_stream(seed=0, start=3, block=64):
    """Endless stream of primes >= start.

    Seed 0 gives increasing order; any other seed shuffles consecutive
    blocks of ``block`` primes with a numpy Generator.
    """
    rng = np.random.default_rng(seed) if seed else None
    p = start - 1
    while True:
        chunk = []
        for _ in range(block):
            p = int(nextprime(p))
            chunk.append(p)
        if rng is not None:
            rng.shuffle(chunk)
        for q in chunk:
            yield q


def factorization_shape(P, p):
    """Descending degrees of the irreducible factors of P mod p, with
    multiplicity."""
    desc = gf_from_int_poly(list(reversed(_as_poly(P).coeffs)), p)
    _, factors = gf_factor(desc, p, ZZ)
    degrees = []
    for f, e in factors:
        degrees += [len(f) - 1] * e
    return tuple(sorted(degrees, reverse=True))


def frobenius_shapes(P, prime_budget, seed=0, disc=None):
    """Yield (p, cycle type) for the first ``prime_budget`` primes not
    dividing lc(P) disc(P).

    Raises
    ------
    SeparabilityError
        If disc P = 0.
    """
    P = _as_poly(P)
    if disc is None:
        disc = discriminant(P)
    if disc == 0:
        raise SeparabilityError("Frobenius cycle types need a separable "
                                "polynomial.")
    bad = abs(disc * P.leading)
    used = 0
    for p in prime_stream(seed):
        if used >= prime_budget:
            return
        if bad % p == 0:
            continue
        used += 1
        yield p, factorization_shape(P, p)


def candidate_tags(n):
    """Named subgroups compared against by the fingerprint."""
    tags = ["FULL", "G1", "G2"]
    if n >= 3:
        tags.append("G3")
    tags += ["SN_PLAIN", "SN_TWISTED"]
    if n == 4:
        tags.append("EXC_2S4")
    return tags


@lru_cache(maxsize=None)
def group_tables(n):
    """tag -> (order, exact cycle type distribution on 2n points)."""
    out = OrderedDict()
    for tag in candidate_tags(n):
        desc = named_subgroup(tag, n)
        out[tag] = (desc.order, dict(cycle_type_distribution(desc)))
    return out


class Fingerprint(Bunch):
    """Empirical Frobenius statistics of one polynomial.

    ``distribution`` maps a cycle type written "4,1,1" to its empirical
    frequency; ``distances`` maps every candidate tag to its total
    variation distance from the empirical distribution.
    """
    _fields = ("tag", "distance", "primes_used", "distribution", "distances")


def _shape_key(shape):
    return ",".join(str(c) for c in shape)


def frobenius_fingerprint(f, prime_budget=1000, seed=0, disc=None):
    """Closest named subgroup to the Frobenius statistics of f.

    Parameters
    ----------
    f : IntPoly
        Separable reciprocal polynomial of degree 2n, n <= 6.
    prime_budget : int
        Number of unramified primes to sample.
    seed : int
        Prime order, see :func:`prime_stream`.
    disc : int, optional
        disc f, when already known.

    Returns
    -------
    fingerprint : Fingerprint
        Ties in distance go to the larger group.
    """
    f = _as_poly(f)
    if f.is_zero or f.degree % 2 == 1:
        raise ShapeError("Fingerprints need a polynomial of even degree 2n.")
    n = f.degree // 2
    tables = group_tables(n)

    counts = Counter(shape for _, shape in
                     frobenius_shapes(f, prime_budget, seed, disc=disc))
    used = sum(counts.values())
    if used < min(MIN_PRIMES, prime_budget):
        warnings.warn("Fingerprint of {} rests on only {} primes.".format(f, used))
    empirical = dict((shape, c / used) for shape, c in counts.items())

    distances = OrderedDict()
    for tag, (_, table) in tables.items():
        distances[tag] = total_variation(empirical, table)

    def rank(tag):
        return (round(distances[tag], 12), -tables[tag][0], TAGS.index(tag))

    best = min(tables, key=rank)
    logger.debug("fingerprint of %s: %s at distance %.4f over %d primes",
                 f, best, distances[best], used)
    distribution = OrderedDict((_shape_key(s), empirical[s])
                               for s in sorted(empirical, reverse=True))
    return Fingerprint(tag=best, distance=distances[best], primes_used=used,
                       distribution=distribution, distances=distances)
