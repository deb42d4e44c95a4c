__doc__ = """Elements of the hyperoctahedral group S_2 wr S_n = F_2^n x| S_n and its
permutation embeddings.

An element (v, sigma) acts on the 2n roots of a reciprocal polynomial,
paired as {alpha_i, 1/alpha_i} -> points (2i, 2i + 1), by sending pair i to
pair sigma(i) and then flipping inside the target pair when v_sigma(i) = 1.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import itertools as it
from functools import lru_cache
from math import factorial

from sympy.combinatorics import Permutation

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..utils import ShapeError


@lru_cache(maxsize=None)
def perm_sign(perm):
    """+1 or -1."""
    return Permutation(list(perm)).signature()


@lru_cache(maxsize=None)
def cycle_type(perm):
    """Cycle lengths of a permutation, fixed points included, descending."""
    structure = Permutation(list(perm)).cycle_structure
    out = []
    for length, count in structure.items():
        out += [length] * count
    return tuple(sorted(out, reverse=True))


def compose(p, q):
    """p o q (apply q first) on index tuples."""
    return tuple(p[x] for x in q)


def invert(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def act(sigma, v):
    """sigma(v): coordinate i of v moves to position sigma(i)."""
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[sigma[i]] = x
    return tuple(out)


def act_mask(sigma, mask):
    """sigma acting on a vector stored as a bitmask."""
    out = 0
    for i, target in enumerate(sigma):
        if mask >> i & 1:
            out |= 1 << target
    return out


def sn_generators(n):
    """The transposition (1 2) and the n-cycle (1 2 ... n), 0-indexed.

    S_1 has no generators and for n = 2 they coincide.
    """
    if n < 2:
        return []
    s = tuple([1, 0] + list(range(2, n)))
    if n == 2:
        return [s]
    t = tuple((i + 1) % n for i in range(n))
    return [s, t]


class WreathElement(object):
    """Pair (v, sigma) with v in F_2^n and sigma a permutation of 0..n-1.

    The law is (v, sigma)(w, tau) = (v + sigma(w), sigma tau).
    """
    __slots__ = ("v", "sigma")

    def __init__(self, v, sigma):
        v = tuple(int(x) & 1 for x in v)
        sigma = tuple(int(x) for x in sigma)
        if len(v) != len(sigma):
            raise ShapeError("v has length {} but sigma acts on {} points".format(
                len(v), len(sigma)))
        if sorted(sigma) != list(range(len(sigma))):
            raise ShapeError("{} is not a permutation".format(sigma))
        self.v = v
        self.sigma = sigma

    @classmethod
    def identity(cls, n):
        return cls((0,) * n, range(n))

    @classmethod
    def from_mask(cls, mask, sigma):
        n = len(sigma)
        return cls([mask >> i & 1 for i in range(n)], sigma)

    @property
    def n(self):
        return len(self.v)

    @property
    def mask(self):
        return sum(x << i for i, x in enumerate(self.v))

    @property
    def weight(self):
        return sum(self.v)

    @property
    def sign(self):
        """sgn sigma as +1 / -1."""
        return perm_sign(self.sigma)

    def is_identity(self):
        return not any(self.v) and self.sigma == tuple(range(self.n))

    def __mul__(self, other):
        return multiply(self, other)

    def inverse(self):
        # (v, s)^-1 = (s^-1(v), s^-1)
        sinv = invert(self.sigma)
        return WreathElement(act(sinv, self.v), sinv)

    def __eq__(self, other):
        if not isinstance(other, WreathElement):
            return NotImplemented
        return self.v == other.v and self.sigma == other.sigma

    def __hash__(self):
        return hash((self.v, self.sigma))

    def __lt__(self, other):
        return (self.v, self.sigma) < (other.v, other.sigma)

    def __repr__(self):
        return "WreathElement(v={}, sigma={})".format(self.v, self.sigma)

    def __str__(self):
        return "v={} s={}".format("".join(map(str, self.v)),
                                  ",".join(str(x + 1) for x in self.sigma))


def multiply(a, b):
    """Group law (v, sigma)(w, tau) = (v + sigma(w), sigma tau)."""
    if a.n != b.n:
        raise ShapeError("Cannot multiply elements of S2 wr S{} and "
                         "S2 wr S{}".format(a.n, b.n))
    moved = act(a.sigma, b.v)
    v = tuple(x ^ y for x, y in zip(a.v, moved))
    return WreathElement(v, compose(a.sigma, b.sigma))


def conjugate_element(y, e):
    """y e y^-1."""
    return multiply(multiply(y, e), y.inverse())


def embed_2n(e):
    """Image in S_2n: point 2i + b goes to 2 sigma(i) + (b xor v_sigma(i))."""
    n = e.n
    image = [0] * (2 * n)
    for i in range(n):
        target = e.sigma[i]
        flip = e.v[target]
        for b in (0, 1):
            image[2 * i + b] = 2 * target + (b ^ flip)
    return tuple(image)


def embed_3n(e):
    """Image in S_3n: embed_2n on the 2n roots of f and sigma on the n roots
    of g (points 2n .. 3n - 1)."""
    n = e.n
    return embed_2n(e) + tuple(2 * n + s for s in e.sigma)


def all_elements(n):
    """Every element of S_2 wr S_n in lexicographic (v, sigma) order."""
    perms = list(it.permutations(range(n)))
    for v in it.product((0, 1), repeat=n):
        for sigma in perms:
            yield WreathElement(v, sigma)


def random_element(n, rng):
    """Uniform element; ``rng`` is a numpy Generator."""
    v = rng.integers(0, 2, size=n)
    sigma = rng.permutation(n)
    return WreathElement(v.tolist(), sigma.tolist())


def group_order(n):
    return 2 ** n * factorial(n)
