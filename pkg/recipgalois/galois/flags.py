__doc__ = """Square conditions for G_f inside the index-two subgroups G1, G2.

With disc f = g(2) g(-2) (disc g)^2, G_f lies in G1 (even weight) exactly
when g(2) g(-2) is a square, and in G2 (weight = parity of sigma) exactly
when g(2) g(-2) disc g is a square.
"""
from ..utils import Bunch, SeparabilityError, isqrt_exact, squarefree_part
from ..polynomials import discriminant, format_poly


def is_square_int(m):
    """Exact square test; 0 is a square, negatives are not."""
    return isqrt_exact(int(m)) is not None


def separability_data(pair):
    """Return (g(2) g(-2), disc g), raising when the pair is not separable.

    Raises
    ------
    SeparabilityError
        If deg g < n, g(2) g(-2) = 0 or disc g = 0.
    """
    g = pair.g
    if pair.degenerate or pair.n < 1:
        raise SeparabilityError("deg g = {} < n = {}: f has vanishing leading "
                                "coefficient.".format(g.degree, pair.n))
    g22 = g(2) * g(-2)
    if g22 == 0:
        raise SeparabilityError("g(2) g(-2) = 0: f has a root at +1 or -1.")
    disc = discriminant(g)
    if disc == 0:
        raise SeparabilityError("disc g = 0: g has a repeated root.")
    return g22, disc


def g1_flag(pair):
    """G_f in G1, i.e. g(2) g(-2) is a square."""
    g22, _ = separability_data(pair)
    return is_square_int(g22)


def g2_flag(pair):
    """G_f in G2, i.e. g(2) g(-2) disc g is a square."""
    g22, disc = separability_data(pair)
    return is_square_int(g22 * disc)


def g3_radicand(pair):
    """Squarefree part k of g(2) g(-2); the only candidate field for a G3
    factorization is Q(sqrt k)."""
    g22, _ = separability_data(pair)
    return squarefree_part(g22)


class GaloisFlags(Bunch):
    """Classification record for one reciprocal polynomial.

    ``gg_full_sn`` is one of "certified", "refuted", "undetermined";
    ``in_G3`` one of "yes", "no", "not_applicable", "undetermined".
    ``fingerprint_source`` is "frobenius" or "skipped"; ``fingerprint_tag``
    is always the empirical Frobenius verdict. ``deduced_tag`` is "FULL" when
    the certificate and every containment test leave no proper subgroup.
    """
    _fields = (
        "f",
        "g",
        "n",
        "separable",
        "g_irreducible",
        "gg_full_sn",
        "in_G1",
        "in_G2",
        "in_G3",
        "k",
        "reducible_f",
        "fingerprint_tag",
        "fingerprint_distance",
        "fingerprint_source",
        "deduced_tag",
        "primes_used",
    )
    _defaults = {
        "separable": True,
        "fingerprint_source": "skipped",
        "primes_used": 0,
    }

    @classmethod
    def inseparable(cls, pair):
        return cls(f=format_poly(pair.f), g=format_poly(pair.g), n=pair.n,
                   separable=False)
