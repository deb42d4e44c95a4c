__doc__ = """Counting solutions of xy = z^2 in a box.

Every solution with x, y, z >= 1 is x = k u^2, y = k v^2, z = k u v for a
unique k >= 1 and coprime u, v >= 1, so the count up to H is

    sum_k #{(u, v) coprime : u, v <= sqrt(H / k)}.
"""
from math import isqrt

import numpy as np
from sympy import sieve

from ..utils import DomainError


def coprime_pairs(m):
    """#{1 <= u, v <= m : gcd(u, v) = 1} for m = 0, ..., M, as an array."""
    phi = np.zeros(m + 1, dtype=np.int64)
    if m >= 1:
        phi[1:] = list(sieve.totientrange(1, m + 1))
    out = 2 * np.cumsum(phi) - 1
    out[0] = 0
    return out


def count_xyz_square(H):
    """Number of (x, y, z) with 1 <= x, y, z <= H and xy = z^2."""
    if H < 1:
        raise DomainError("H must be at least 1.")
    pairs = coprime_pairs(isqrt(H))
    return int(sum(pairs[isqrt(H // k)] for k in range(1, H + 1)))


def count_xyz_square_brute(H):
    """Direct count over the x, y grid."""
    if H < 1:
        raise DomainError("H must be at least 1.")
    x = np.arange(1, H + 1, dtype=np.int64)
    products = np.outer(x, x)
    z = np.rint(np.sqrt(products)).astype(np.int64)
    return int(((z * z == products) & (z <= H)).sum())
