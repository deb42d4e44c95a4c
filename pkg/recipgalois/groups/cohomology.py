__doc__ = """1-cocycles of S_n with values in quotients X/K of X = F_2^n.

A cocycle satisfies eps(st) = eps(s) + s(eps(t)); it is fixed by its values
on the generators (1 2), (1 2 ... n), and it exists exactly when the
extension along the Cayley graph of S_n is consistent.
"""
import itertools as it
from collections import deque

from ..utils import ShapeError, ResourceError
from .wreath import act_mask, compose, sn_generators
from .subspaces import Subspace

#: Quotient names understood by cocycle_space.
QUOTIENTS = {
    "X": Subspace.zero,
    "X_mod_1": Subspace.ones,
    "X_mod_1perp": Subspace.ones_perp,
}


def _quotient(n, quotient):
    if isinstance(quotient, Subspace):
        return quotient
    try:
        return QUOTIENTS[quotient](n)
    except KeyError:
        raise ShapeError("Unknown quotient {!r}; expected one of {}".format(
            quotient, sorted(QUOTIENTS)))


def extend_cocycle(n, values, K):
    """Extend generator values to a cocycle on all of S_n.

    Parameters
    ----------
    n : int
    values : sequence of int
        Bitmask images of the generators returned by ``sn_generators(n)``.
    K : Subspace
        S_n-invariant subspace; values live in X/K.

    Returns
    -------
    eps : dict or None
        Permutation -> canonical representative, or None when the
        generator values admit no cocycle.
    """
    gens = sn_generators(n)
    values = [K.reduce(x) for x in values]
    identity = tuple(range(n))
    eps = {identity: 0}
    queue = deque([identity])
    while queue:
        sigma = queue.popleft()
        for g, val in zip(gens, values):
            target = compose(sigma, g)
            image = K.reduce(eps[sigma] ^ act_mask(sigma, val))
            if target in eps:
                if eps[target] != image:
                    return None
            else:
                eps[target] = image
                queue.append(target)
    return eps


def is_cocycle(values, n, K=None):
    """True iff ``values`` satisfies the cocycle condition.

    ``values`` maps either the generators (as a list of images) or every
    permutation of S_n (as a dict) to bitmasks in X/K.
    """
    if K is None:
        K = Subspace.zero(n)
    if isinstance(values, dict):
        for s, t in it.product(values, repeat=2):
            lhs = K.reduce(values[compose(s, t)])
            rhs = K.reduce(values[s] ^ act_mask(s, values[t]))
            if lhs != rhs:
                return False
        return True
    return extend_cocycle(n, values, K) is not None


def coboundaries(n, K):
    """Generator images of the coboundaries sigma -> sigma(y) - y."""
    gens = sn_generators(n)
    out = set()
    for y in range(1 << n):
        out.add(tuple(K.reduce(act_mask(g, y) ^ y) for g in gens))
    return out


def cocycles(n, K):
    """Generator images of every cocycle S_n -> X/K."""
    gens = sn_generators(n)
    reps = sorted(set(K.reduce(x) for x in range(1 << n)))
    out = []
    for values in it.product(reps, repeat=len(gens)):
        if extend_cocycle(n, values, K) is not None:
            out.append(values)
    return out


def cocycle_space(n, quotient):
    """Sizes of Z^1(S_n, X/K) and H^1(S_n, X/K).

    Parameters
    ----------
    n : int
        1 <= n <= 5.
    quotient : {"X", "X_mod_1", "X_mod_1perp"} or Subspace

    Returns
    -------
    (z1, h1) : tuple of int
    """
    if n < 1:
        raise ShapeError("n must be positive.")
    if n > 5:
        raise ResourceError("cocycle enumeration is limited to n <= 5.")
    K = _quotient(n, quotient)
    z1 = len(cocycles(n, K))
    b1 = len(coboundaries(n, K))
    return z1, z1 // b1
