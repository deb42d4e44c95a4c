__doc__ = """The lattices L_p of integer polynomials g of degree <= n with a
prescribed root of multiplicity e1 at u = 2 (case b) or u = -2 (case c)
modulo p, and the split Psi_p = Lambda_p + Delta_p of the local weight.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import logging
from fractions import Fraction

import numpy as np
from scipy.special import comb
from sympy import GF, ZZ, Matrix
from sympy.polys.matrices import DomainMatrix

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..utils import Bunch, ShapeError
from ..discriminants import SplittingType, _check_prime
from .forms import forms_array, digit_grid

logger = logging.getLogger(__name__)

#: Marked root of g for each case.
CENTERS = {"a": None, "b": 2, "c": -2}


class LatticeDescriptor(Bunch):
    """Sublattice of V(Z) = Z^(n+1) (coefficients b_0, ..., b_n of g).

    ``congruences`` are integer rows l_j with l_j . b = 0 mod p; ``basis``
    and ``dual_basis`` are rows, the latter exact rationals with
    basis . dual^T = identity.
    """
    _fields = ("p", "case", "e1", "n", "center", "congruences", "rank",
               "index", "basis", "dual_basis")

    def contains(self, b):
        if len(b) != self.n + 1:
            raise ShapeError("Expected {} coefficients.".format(self.n + 1))
        return all(sum(l * x for l, x in zip(row, b)) % self.p == 0
                   for row in self.congruences)

    def mask(self):
        """Indicator of L_p / p V(Z) on F_p^(n+1), flat indexed."""
        grid = digit_grid(self.p, self.n + 1)
        if not self.congruences:
            return np.ones(len(grid), dtype=bool)
        C = np.array(self.congruences, dtype=np.int64) % self.p
        return ~((grid @ C.T) % self.p).any(axis=1)


def taylor_rows(center, e1, n):
    """Rows of the maps b -> j-th Taylor coefficient of g at the center,
    for j < e1."""
    return [[int(comb(i, j, exact=True)) * center ** (i - j) if i >= j else 0
             for i in range(n + 1)] for j in range(e1)]


def _rank_mod_p(rows, p):
    if not rows:
        return 0
    M = DomainMatrix([[ZZ(x) for x in row] for row in rows],
                     (len(rows), len(rows[0])), ZZ)
    return M.convert_to(GF(p)).rank()


def _basis(rows, p, e1, n):
    # rows are unit upper triangular in their first e1 columns, so every
    # free coordinate i >= e1 is completed by back substitution
    basis = []
    for j in range(e1):
        vec = [0] * (n + 1)
        vec[j] = p
        basis.append(vec)
    for i in range(e1, n + 1):
        vec = [0] * (n + 1)
        vec[i] = 1
        for j in reversed(range(e1)):
            vec[j] = -sum(rows[j][t] * vec[t] for t in range(j + 1, n + 1))
        basis.append(vec)
    return basis


def lattice_Lp(p, case, e1, n):
    """L_p for case "a" (all of V(Z)), "b" or "c".

    Membership is the vanishing mod p of the first e1 Taylor coefficients
    of g at the center, i.e. (u - center)^e1 divides g mod p.

    Returns
    -------
    lattice : LatticeDescriptor
        ``index`` is p^e1 in cases b and c and 1 in case a.
    """
    _check_prime(p)
    if case not in CENTERS:
        raise ShapeError("Unknown case {!r}".format(case))
    center = CENTERS[case]
    if case == "a":
        e1 = 0
    elif not 1 <= e1 <= n + 1:
        raise ShapeError("Need 1 <= e1 <= n + 1, got e1 = {}".format(e1))
    rows = taylor_rows(center, e1, n) if e1 else []
    rank = _rank_mod_p(rows, p)
    basis = _basis(rows, p, e1, n)
    dual = Matrix(basis).inv().T
    dual_basis = [[Fraction(int(x.p), int(x.q)) for x in dual.row(r)]
                  for r in range(n + 1)]
    return LatticeDescriptor(
        p=p, case=case, e1=e1, n=n, center=center, congruences=rows,
        rank=rank, index=p ** rank, basis=basis, dual_basis=dual_basis)


def transport_matrix(p, n, center):
    """Matrix of F(x, y) -> F(1, u - center) on coefficient vectors mod p.

    Column i holds the coefficients of (u - center)^(n - i).
    """
    M = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n + 1):
        m = n - i
        for t in range(m + 1):
            M[t, i] = int(comb(m, t, exact=True)) * (-center) ** (m - t) % p
    return M


def transport(weights, p, n, center):
    """Move a table on binary forms to polynomials in u, sending the marked
    factor y to u - center."""
    grid = digit_grid(p, n + 1)
    image = grid @ transport_matrix(p, n, center).T % p
    out = np.zeros_like(weights)
    out[image @ p ** np.arange(n + 1, dtype=np.int64)] = weights
    return out


class DeltaSplit(Bunch):
    """Psi_p = a_p 1_{L_p} + Delta_p with max |Delta_p^| recorded.

    ``delta_constant`` is max |Delta_p^| p^(2 k_p + 1).
    """
    _fields = ("p", "sigma", "n", "a_p", "a_hat", "k_p", "lattice",
               "psi_zero", "delta_max", "delta_constant")


def lambda_delta_split(p, sigma, n=None, transform_budget=10**7):
    """Split the local weight of an annotated splitting type.

    Parameters
    ----------
    p : int
    sigma : SplittingType or str
        Unmarked for case a; marked and annotated ("@2" / "@-2") for cases
        b and c.
    n : int, optional
        Degree of g; defaults to deg sigma.

    Returns
    -------
    split : DeltaSplit
        a_p = [V(Z) : L_p] p^(-ind - j) / #Aut^(j) and a_hat = a_p / index.
    """
    if isinstance(sigma, str):
        sigma = SplittingType.parse(sigma)
    if n is None:
        n = sigma.degree
    case = sigma.case
    if case == "a":
        if sigma.marked is not None:
            raise ShapeError("A marked type needs the annotation @2 or @-2.")
        psi = forms_array(p, sigma, n, False, False, transform_budget)
        lattice = lattice_Lp(p, "a", 0, n)
        k_p = sigma.index // 2
    else:
        weights = forms_array(p, sigma, n, True, False, transform_budget)
        lattice = lattice_Lp(p, case, sigma.marked, n)
        psi = transport(weights, p, n, lattice.center)
        k_p = (sigma.index + 1) // 2

    a_hat = Fraction(1, p ** (sigma.index + sigma.j) * sigma.aut_count_j())
    a_p = lattice.index * a_hat
    delta = psi - float(a_p) * lattice.mask()
    transform = np.fft.ifftn(delta.reshape((p,) * (n + 1)))
    delta_max = float(np.abs(transform).max())
    logger.debug("sigma = %s mod %d: a_p = %s, max |Delta^| = %g",
                 sigma, p, a_p, delta_max)
    return DeltaSplit(
        p=p, sigma=str(sigma), n=n, a_p=a_p, a_hat=a_hat, k_p=k_p,
        lattice=lattice,
        psi_zero=Fraction(int(psi.sum()), p ** (n + 1)),
        delta_max=delta_max,
        delta_constant=delta_max * p ** (2 * k_p + 1))
