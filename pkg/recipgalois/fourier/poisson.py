__doc__ = """Numerical check of twisted Poisson summation over a lattice.

For L in Z^n of index I, M coprime to I, Psi defined mod M and a Schwartz
function Phi,

    sum_{x in L} Psi(x) Phi(x) = (1 / I) sum_{y in L*} Psi^(y) Phi^(y / M),

with Psi^(y) = M^-n sum_{x mod M} Psi(x) exp(-2 pi i x.y / M). A dual
vector y is read modulo M through the isomorphism L* / M L* = (Z / M)^n.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import logging
from math import gcd

import numpy as np

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..utils import Bunch, DomainError, ShapeError

logger = logging.getLogger(__name__)

#: Gaussian tails beyond exp(-TAIL) are dropped (well under 1e-12).
TAIL = 50.0


class PoissonCheck(Bunch):
    _fields = ("lhs", "rhs", "residual", "index", "lattice_points",
               "dual_points")


def _points(basis, radius):
    """Lattice vectors (rows of k @ basis) of norm <= radius."""
    basis = np.asarray(basis, dtype=float)
    dim = basis.shape[0]
    reach = int(np.ceil(radius * np.linalg.norm(np.linalg.inv(basis), 2))) + 1
    axis = np.arange(-reach, reach + 1)
    ks = np.stack(np.meshgrid(*([axis] * dim), indexing="ij"), -1).reshape(-1, dim)
    points = ks @ basis
    keep = np.einsum("ij,ij->i", points, points) <= radius * radius
    return ks[keep], points[keep]


def twisted_poisson_check(basis, M, psi, width=2.0):
    """Evaluate both sides for the Gaussian Phi(x) = exp(-pi |x|^2 / s^2),
    whose transform is s^n exp(-pi s^2 |xi|^2).

    Parameters
    ----------
    basis : array_like
        Integer rows spanning L (or a LatticeDescriptor).
    M : int
        Twist modulus, coprime to [Z^n : L].
    psi : array_like
        Values of Psi, shape (M,) * n.
    width : float
        Gaussian width s.

    Returns
    -------
    check : PoissonCheck
        ``residual`` is |LHS - RHS|.

    Raises
    ------
    DomainError
        If gcd(M, [Z^n : L]) != 1.
    """
    if hasattr(basis, "basis"):
        basis = basis.basis
    B = np.array(basis, dtype=np.int64)
    dim = B.shape[0]
    if B.shape != (dim, dim):
        raise ShapeError("The basis must be square.")
    index = int(round(abs(np.linalg.det(B))))
    if index == 0:
        raise ShapeError("The basis is singular.")
    if gcd(M, index) != 1:
        raise DomainError("M = {} is not coprime to the index {}".format(M, index))
    psi = np.asarray(psi)
    if psi.shape != (M,) * dim:
        raise ShapeError("psi must have shape {}".format((M,) * dim))
    s = float(width)

    # x in L
    radius = s * np.sqrt(TAIL / np.pi)
    _, xs = _points(B, radius)
    xs = np.rint(xs).astype(np.int64)
    phi = np.exp(-np.pi * np.einsum("ij,ij->i", xs, xs) / s ** 2)
    lhs = complex(np.sum(psi[tuple((xs % M).T)] * phi))

    # y in L*; index * y is integral and index is invertible mod M
    dual = np.linalg.inv(B.astype(float)).T
    radius = M / s * np.sqrt(TAIL / np.pi)
    _, ys = _points(dual, radius)
    scaled = np.rint(ys * index).astype(np.int64)
    residues = scaled * pow(index, -1, M) % M
    psi_hat = np.fft.fftn(psi) / M ** dim
    norms = np.einsum("ij,ij->i", ys, ys) / M ** 2
    phi_hat = s ** dim * np.exp(-np.pi * s ** 2 * norms)
    rhs = complex(np.sum(psi_hat[tuple(residues.T)] * phi_hat)) / index

    residual = abs(lhs - rhs)
    logger.debug("twisted Poisson: |%r - %r| = %g", lhs, rhs, residual)
    return PoissonCheck(lhs=lhs, rhs=rhs, residual=residual, index=index,
                        lattice_points=len(xs), dual_points=len(ys))
