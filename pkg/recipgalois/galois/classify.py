__doc__ = """Classification of G_f for a reciprocal polynomial f."""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import logging
from functools import partial
from multiprocessing import Pool

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..config import Config
from ..utils import SeparabilityError, squarefree_part
from ..polynomials import symmetrize, format_poly, parse_poly, _as_poly
from .flags import GaloisFlags, separability_data, is_square_int
from .certificate import is_irreducible, sn_certificate, CERTIFIED
from .numberfield import g3_flag, reducibility_flag
from .fingerprint import frobenius_fingerprint

logger = logging.getLogger(__name__)

#: Largest n with exact cycle type tables.
FINGERPRINT_MAX_N = 6


def classify(f, config=None, fingerprint=True):
    """Compute every flag of a reciprocal polynomial.

    Parameters
    ----------
    f : IntPoly or str
        Reciprocal polynomial of even degree 2n.
    config : Config, optional
        Supplies ``prime_budget`` and ``seed``.
    fingerprint : bool
        Run the Frobenius fingerprint (n <= 6 only).

    Returns
    -------
    flags : GaloisFlags

    Raises
    ------
    ShapeError
        If f is not reciprocal of even degree.
    SeparabilityError
        If f is not separable.
    """
    if config is None:
        config = Config(workers=1)
    if isinstance(f, str):
        f = parse_poly(f)
    pair = symmetrize(_as_poly(f))
    g22, disc_g = separability_data(pair)
    n, budget, seed = pair.n, config.prime_budget, config.seed

    flags = GaloisFlags(f=format_poly(pair.f), g=format_poly(pair.g), n=n)
    flags.g_irreducible = is_irreducible(pair.g)
    flags.gg_full_sn = sn_certificate(pair.g, budget, seed)
    flags.in_G1 = is_square_int(g22)
    flags.in_G2 = is_square_int(g22 * disc_g)
    flags.k = squarefree_part(g22)
    flags.in_G3 = g3_flag(pair, budget, seed, certificate=flags.gg_full_sn)
    flags.reducible_f = reducibility_flag(pair.f)

    # With G_g = S_n, G_f is a surjecting subgroup; none of the proper ones
    # is left once every containment test fails.
    forced = (flags.gg_full_sn == CERTIFIED and not flags.in_G1
              and not flags.in_G2 and flags.in_G3 in ("no", "not_applicable")
              and not flags.reducible_f)
    if forced:
        flags.deduced_tag = "FULL"

    if fingerprint and n <= FINGERPRINT_MAX_N:
        fp = frobenius_fingerprint(pair.f, budget, seed,
                                   disc=g22 * disc_g ** 2)
        flags.primes_used = fp.primes_used
        flags.fingerprint_tag = fp.tag
        flags.fingerprint_distance = fp.distance
        flags.fingerprint_source = "frobenius"
        if forced and fp.tag != "FULL":
            logger.warning("Frobenius statistics of %s point to %s at "
                           "distance %.3f, not the deduced FULL", pair.f,
                           fp.tag, fp.distance)
    return flags


def _classify_item(f, config, fingerprint):
    try:
        return classify(f, config, fingerprint)
    except SeparabilityError:
        if isinstance(f, str):
            f = parse_poly(f)
        return GaloisFlags.inseparable(symmetrize(_as_poly(f)))


def classify_many(polys, config=None, fingerprint=True):
    """Classify a batch; inseparable inputs give records with
    ``separable=False`` instead of raising.

    Output order follows input order for any worker count.
    """
    if config is None:
        config = Config()
    polys = list(polys)
    worker = partial(_classify_item, config=config, fingerprint=fingerprint)
    if config.workers == 1 or len(polys) < 2:
        return [worker(f) for f in polys]
    with Pool(min(config.workers, len(polys))) as pool:
        return pool.map(worker, polys)
