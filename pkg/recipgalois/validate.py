__doc__ = """Invariant suites behind ``recipgalois verify``.

Each suite is a function ``suite(config, samples)`` returning a list of
:class:`CheckResult` rows, one per named identity or bound. Random inputs
are drawn from ``numpy.random.default_rng(config.seed)`` so a run is
reproducible.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import time
import logging
from collections import OrderedDict
from fractions import Fraction

import numpy as np
from sympy import primerange

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from .config import Config
from .utils import Bunch, SeparabilityError, ShapeError, VerificationError
from .polynomials import (IntPoly, SymPair, symmetrize, expand, discriminant,
                          cayley, is_even, height_root_bounds,
                          height_factor_ratio, reflected_product)
from .discriminants import (disc_f_via_g, splitting_types,
                            index_valuation_check, count_pointed_high_index,
                            double_disc_R, fzn_R_identity_check)
from .groups import overgroup_census, named_subgroup, cocycle_space
from .galois import (g1_flag, g2_flag, g3_flag, is_square_int, sn_certificate,
                     reducibility_flag, classify)
from .galois.certificate import CERTIFIED
from .fourier import (fourier_reports, fourier_full, double_transform_check,
                      twisted_poisson_check)
from .census import (count_xyz_square, count_xyz_square_brute, run_census,
                     census_series, g2_suppression)
from .stats import fit_asymptotic

logger = logging.getLogger(__name__)

#: Frozen constant in front of every O(p^-e) transform bound.
ENVELOPE = 4.0

#: Frozen constant of the count of pointed forms of high index.
POINTED_ENVELOPE = 4

POISSON_TOLERANCE = 1e-9


class CheckResult(Bunch):
    """Outcome of one named check."""
    _fields = ("suite", "name", "passed", "checked", "failures", "detail",
               "seconds")
    _defaults = {"checked": 0, "failures": 0, "detail": "", "seconds": 0.0}


def _random_g(rng, n, height):
    b = rng.integers(-height, height + 1, size=n + 1).tolist()
    b[-1] = b[-1] or 1
    return b


def _result(suite, name, checked, failures, detail=""):
    return CheckResult(suite=suite, name=name, passed=not failures,
                       checked=checked, failures=len(failures),
                       detail=detail or "; ".join(failures[:3]))


# ----------------------------------------------------------
# poly
# ----------------------------------------------------------

def poly_suite(config, samples=10000):
    """Round trip, Cayley evenness and the height comparisons.

    Every check draws ``samples`` inputs; the Cayley check draws that many
    for each n <= 5.
    """
    rng = np.random.default_rng(config.seed)
    out = []

    failures = []
    checked = 0
    for _ in range(samples):
        n = int(rng.integers(1, 7))
        f = expand(_random_g(rng, n, 100), n)
        checked += 1
        pair = symmetrize(f)
        if expand(pair.g, n) != f:
            failures.append("g = {}".format(pair.g))
    out.append(_result("poly", "symmetrize inverts expand", checked, failures))

    failures = []
    for n in range(1, 6):
        for _ in range(samples):
            f = expand(_random_g(rng, n, 20), n)
            if not is_even(cayley(f, n)):
                failures.append("f = {}".format(f))
    out.append(_result("poly", "Cayley transform of reciprocal f is even",
                       5 * samples, failures))

    failures = []
    for _ in range(samples):
        d = int(rng.integers(1, 9))
        P = IntPoly(_random_g(rng, d, 30))
        lower, htp, upper = height_root_bounds(P)
        # loose enough for the floating Mahler measure
        if not lower * (1 - 1e-6) <= htp <= upper * (1 + 1e-6):
            failures.append("P = {}".format(P))
    out.append(_result("poly", "root heights bound the projective height",
                       samples, failures))

    failures = []
    worst = {}
    for _ in range(samples):
        n = int(rng.integers(1, 7))
        g = IntPoly(_random_g(rng, n, 100))
        f = expand(g, n)
        ratio = max(Fraction(g.height(), f.height()),
                    Fraction(f.height(), g.height()))
        worst[n] = max(worst.get(n, 0), ratio)
        if ratio > 4 ** n:
            failures.append("g = {}".format(g))
    detail = ", ".join("n={}: {:.2f}".format(n, float(r))
                       for n, r in sorted(worst.items()))
    out.append(_result("poly", "Ht f and Ht g agree within 4^n", samples,
                       failures, detail))

    failures = []
    for _ in range(samples):
        g = IntPoly(_random_g(rng, int(rng.integers(1, 5)), 20))
        h = IntPoly(_random_g(rng, int(rng.integers(1, 5)), 20))
        d = g.degree + h.degree
        ratio = height_factor_ratio(g, h)
        if not Fraction(1, 4 ** d) <= ratio <= 4 ** d:
            failures.append("g = {}, h = {}".format(g, h))
    out.append(_result("poly", "projective height is multiplicative up to "
                       "4^d", samples, failures))
    return out


# ----------------------------------------------------------
# disc
# ----------------------------------------------------------

def disc_suite(config, samples=10000):
    """Discriminant identities; the identity of disc f draws ``samples``
    pairs for each n <= 5."""
    rng = np.random.default_rng(config.seed)
    out = []

    failures = []
    checked = 0
    for n in range(1, 6):
        for _ in range(samples):
            pair = SymPair.from_g(_random_g(rng, n, 50), n)
            checked += 1
            if disc_f_via_g(pair) != discriminant(pair.f):
                failures.append("g = {}".format(pair.g))
    out.append(_result("disc", "disc f = g(2) g(-2) (disc g)^2", checked,
                       failures))

    failures = []
    skipped = 0
    for _ in range(samples):
        d = int(rng.integers(1, 6))
        g = IntPoly(_random_g(rng, d, 20))
        p = int(rng.choice(list(primerange(d + 1, 60))))
        check = index_valuation_check(g, p)
        skipped += check.status == "skip"
        if check.holds is False:
            failures.append("g = {}, p = {}".format(g, p))
    out.append(_result("disc", "ind(g mod p) <= v_p(disc g)", samples,
                       failures, "{} skipped".format(skipped)))

    failures = []
    checked = 0
    for p in (3, 5, 7):
        for n in (1, 2, 3):
            for k in range(n + 1):
                checked += 1
                count = count_pointed_high_index(p, n, k)
                if count > POINTED_ENVELOPE * p ** (n - k):
                    failures.append("p = {}, n = {}, k = {}: {}".format(
                        p, n, k, count))
    out.append(_result("disc", "pointed forms of index >= k are "
                       "O(p^(n - k))", checked, failures))

    failures = []
    checked = 0
    for n in (2, 3, 4):
        nonzero = False
        for _ in range(100):
            b = rng.integers(-5, 6, size=n).tolist()
            checked += 1
            if not fzn_R_identity_check(b, n):
                failures.append("b = {}".format(b))
            nonzero = nonzero or double_disc_R(b, n) != 0
        if not nonzero:
            failures.append("R vanished at every point for n = {}".format(n))
    out.append(_result("disc", "factorization of the double discriminant R",
                       checked, failures))
    return out


# ----------------------------------------------------------
# groups
# ----------------------------------------------------------

_CENSUS_ORDERS = {
    2: [("FULL", 8), ("G1", 4), ("G2", 4), ("SN_PLAIN", 2)],
    3: [("FULL", 48), ("G1", 24), ("G2", 24), ("G3", 12), ("SN_PLAIN", 6),
        ("SN_TWISTED", 6)],
    4: [("FULL", 384), ("G1", 192), ("G2", 192), ("G3", 48), ("EXC_2S4", 48),
        ("SN_PLAIN", 24), ("SN_TWISTED", 24)],
}

# (quotient, n) -> dim H^1
_COHOMOLOGY = dict(
    [(("X_mod_1perp", n), 1) for n in (2, 3, 4, 5)] +
    [(("X_mod_1", n), 0) for n in (3, 5)] +
    [(("X", n), 1) for n in (3, 5)])


def groups_suite(config, samples=None):
    out = []
    for n, expected in sorted(_CENSUS_ORDERS.items()):
        start = time.perf_counter()
        census = [(d.tag, d.order) for d in overgroup_census(n)]
        failures = [] if census == expected else [str(census)]
        result = _result("groups", "overgroups of S_n for n = {}".format(n),
                         1, failures)
        result.seconds = time.perf_counter() - start
        out.append(result)

    failures = []
    for (quotient, n), dim in sorted(_COHOMOLOGY.items()):
        size = cocycle_space(n, quotient)[1]
        if size != 2 ** dim:
            failures.append("{} n = {}: {}".format(quotient, n, size))
    out.append(_result("groups", "first cohomology of S_n", len(_COHOMOLOGY),
                       failures))

    failures = []
    for n in (3, 5):
        meet = named_subgroup("G1", n).elements & named_subgroup("G3", n).elements
        if (any(e.weight for e in meet) or
                len(meet) != named_subgroup("SN_PLAIN", n).order):
            failures.append("n = {}".format(n))
    for n in (2, 4):
        if not named_subgroup("G3", n).issubset(named_subgroup("G1", n)):
            failures.append("n = {}".format(n))
    out.append(_result("groups", "G1 and G3 meet in S_n (odd n), G3 in G1 "
                       "(even n)", 4, failures))
    return out


# ----------------------------------------------------------
# fourier
# ----------------------------------------------------------

def _fourier_jobs(primes=(3, 5, 7), degrees=(2, 3), max_index=2):
    jobs = []
    for p in primes:
        for n in degrees:
            for sigma in splitting_types(n, max_index, min_degree=n):
                jobs.append((p, sigma, n, False, False))
                jobs.append((p, sigma, n, False, True))
                for e in sorted(set(e for f, e in sigma.factors if f == 1)):
                    jobs.append((p, sigma.with_marked(e), n, True, False))
    return jobs


def fourier_suite(config, samples=50, primes=(3, 5, 7)):
    out = []
    start = time.perf_counter()
    reports = fourier_reports(_fourier_jobs(primes), config)
    failures = []
    for r in reports:
        if r.envelope_constant > ENVELOPE + 1e-9:
            failures.append("p = {} sigma = {} monic = {}: {:.3f}".format(
                r.p, r.sigma, r.monic, r.envelope_constant))
    worst = max(r.envelope_constant for r in reports)
    result = _result("fourier", "main term and decay of w-hat within "
                     "envelope {}".format(ENVELOPE), len(reports), failures,
                     "largest constant {:.3f}".format(worst))
    result.seconds = time.perf_counter() - start
    out.append(result)

    failures = []
    for p, text in ((3, "1,2"), (5, "1,1"), (5, "*1^2,1")):
        t = fourier_full(p, text, n=3)
        residual = double_transform_check(t.weights, p, t.dim)
        if residual > 1e-8:
            failures.append("p = {} sigma = {}: {:.2e}".format(p, text,
                                                              residual))
    out.append(_result("fourier", "double transform returns w(-h)", 3,
                       failures))

    rng = np.random.default_rng(config.seed)
    failures = []
    for i in range(samples):
        dim = 1 + i % 3
        basis = np.triu(rng.integers(0, 2, size=(dim, dim)))
        basis[np.diag_indices(dim)] = rng.integers(1, 3, size=dim)
        M = int(rng.choice([3, 5]))
        psi = rng.random((M,) * dim)
        check = twisted_poisson_check(basis, M, psi, width=2.0)
        if check.residual > POISSON_TOLERANCE:
            failures.append("basis = {} M = {}: {:.2e}".format(
                basis.tolist(), M, check.residual))
    out.append(_result("fourier", "twisted Poisson summation", samples,
                       failures))
    return out


# ----------------------------------------------------------
# galois
# ----------------------------------------------------------

#: Radicands of the constructed G3 instances.
G3_RADICANDS = (2, 3, 5)

#: Largest total variation distance of a fingerprint from its table.
FINGERPRINT_TOLERANCE = 0.1

#: Smallest share of FULL fingerprints among instances deduced to be FULL.
FULL_SHARE = 0.99


def constructed_g3_pairs(rng, count, radicands=G3_RADICANDS, height=3,
                         prime_budget=1000, seed=0):
    """Cubic pairs whose f = A^2 - k B^2 has G_f = G3.

    Candidates come from :func:`reflected_product` with random halves; only
    those with G_g = S_n certified and both square flags false are kept,
    which leaves G3 itself among the surjecting subgroups of G3.

    Returns
    -------
    pairs : list of (k, SymPair)
    """
    pairs = []
    attempts = 0
    while len(pairs) < count and attempts < 200 * count:
        attempts += 1
        k = radicands[len(pairs) % len(radicands)]
        a = rng.integers(-height, height + 1, size=2).tolist()
        b = rng.integers(-height, height + 1, size=2).tolist()
        if a[0] == 0 or not any(b):
            continue
        pair = symmetrize(reflected_product(a, b, k))
        try:
            if g1_flag(pair) or g2_flag(pair):
                continue
        except SeparabilityError:
            continue
        if sn_certificate(pair.g, prime_budget, seed) == CERTIFIED:
            pairs.append((k, pair))
    return pairs


def galois_suite(config, samples=10000, constructed=None, fingerprints=None):
    """Square conditions, the G3 test and the Frobenius cross-checks.

    ``constructed`` (default min(samples, 20)) G3 instances are classified
    in full; random cubics use min(samples, 1000) draws, and ``fingerprints``
    (default min(samples, 100)) of the ones deduced to be FULL are
    fingerprinted.
    """
    if constructed is None:
        constructed = min(samples, 20)
    if fingerprints is None:
        fingerprints = min(samples, 100)
    rng = np.random.default_rng(config.seed)
    budget, seed = config.prime_budget, config.seed
    out = []

    failures = []
    checked = 0
    for n in range(1, 6):
        for _ in range(samples):
            pair = SymPair.from_g(_random_g(rng, n, 50), n)
            try:
                in_g1, in_g2 = g1_flag(pair), g2_flag(pair)
            except SeparabilityError:
                continue
            checked += 1
            disc_f = discriminant(pair.f)
            if in_g1 != is_square_int(disc_f):
                failures.append("g1 at g = {}".format(pair.g))
            if in_g2 != is_square_int(disc_f * discriminant(pair.g)):
                failures.append("g2 at g = {}".format(pair.g))
    out.append(_result("galois", "square conditions match disc f and "
                       "disc f disc g", checked, failures))

    start = time.perf_counter()
    pairs = constructed_g3_pairs(rng, constructed, prime_budget=budget,
                                 seed=seed)
    failures = []
    if len(pairs) < constructed:
        failures.append("only {} of {} instances built".format(len(pairs),
                                                              constructed))
    worst = 0.0
    for k, pair in pairs:
        flags = classify(pair.f, config)
        worst = max(worst, flags.fingerprint_distance)
        if (flags.in_G3 != "yes" or flags.k != k
                or flags.fingerprint_tag != "G3"
                or flags.fingerprint_distance > FINGERPRINT_TOLERANCE):
            failures.append("k = {} g = {}: in_G3 = {}, fingerprint {} at "
                            "{:.3f}".format(k, pair.g, flags.in_G3,
                                            flags.fingerprint_tag,
                                            flags.fingerprint_distance))
    result = _result("galois", "constructed G3 instances classify as G3",
                     len(pairs), failures,
                     "" if failures else "largest distance {:.3f}".format(worst))
    result.seconds = time.perf_counter() - start
    out.append(result)

    start = time.perf_counter()
    failures = []
    recorded = []
    forced = []
    checked = 0
    for _ in range(min(samples, 1000)):
        pair = SymPair.from_g(_random_g(rng, 3, 20), 3)
        try:
            if g1_flag(pair) or g2_flag(pair):
                continue
        except SeparabilityError:
            continue
        certificate = sn_certificate(pair.g, budget, seed)
        if certificate != CERTIFIED:
            continue
        checked += 1
        flag = g3_flag(pair, budget, seed, certificate=certificate)
        if flag == "no":
            if not reducibility_flag(pair.f):
                forced.append(pair)
            continue
        # "yes" has to be backed by the Frobenius statistics
        recorded.append(pair)
        flags = classify(pair.f, config)
        if flag == "yes" and flags.fingerprint_tag != "G3":
            failures.append("g = {}: in_G3 = {}, fingerprint {}".format(
                pair.g, flag, flags.fingerprint_tag))
    result = _result("galois", "random cubics with square flags false are "
                     "not in G3", checked, failures,
                     "{} recorded".format(len(recorded)))
    result.seconds = time.perf_counter() - start
    out.append(result)

    start = time.perf_counter()
    failures = []
    full = 0
    for pair in forced[:fingerprints]:
        flags = classify(pair.f, config)
        if flags.deduced_tag != "FULL":
            failures.append("g = {}: not deduced FULL".format(pair.g))
        elif flags.fingerprint_tag == "FULL":
            full += 1
    tested = min(len(forced), fingerprints)
    if tested and full < FULL_SHARE * tested:
        failures.append("FULL fingerprint for {} of {}".format(full, tested))
    result = _result("galois", "Frobenius statistics agree with the deduced "
                     "FULL", tested, failures,
                     "{} of {} FULL".format(full, tested))
    result.seconds = time.perf_counter() - start
    out.append(result)
    return out


# ----------------------------------------------------------
# census
# ----------------------------------------------------------

XYZ_HEIGHTS = (64, 128, 256, 512, 1024)

#: (label, monic, heights, a, b): quadratic censuses whose g1 tally is fit
#: against H^a log^b H.
G1_SERIES = (
    ("non-monic", False, (8, 16, 32, 64), 2, 1),
    ("monic", True, (32, 64, 128, 256), 1, 1),
)

#: Largest max/min ratio of the normalized g1 tally.
G1_RATIO = 2.5


def census_suite(config, samples=500, series=G1_SERIES):
    """Counting checks and the quadratic censuses.

    ``series`` holds the census boxes; the default ones take tens of
    minutes even on several workers.
    """
    out = []
    failures = [str(H) for H in range(1, samples + 1)
                if count_xyz_square(H) != count_xyz_square_brute(H)]
    out.append(_result("census", "xy = z^2 count matches brute force",
                       samples, failures))

    fit = fit_asymptotic([(H, count_xyz_square(H)) for H in XYZ_HEIGHTS], 1, 1)
    out.append(_result("census", "xy = z^2 count is Theta(H log H)",
                       len(XYZ_HEIGHTS),
                       [] if fit.ratio <= 1.8 else ["ratio {:.3f}".format(fit.ratio)],
                       "ratio {:.3f}".format(fit.ratio)))

    record = run_census(1, 2, config=Config(workers=1, seed=config.seed,
                                            prime_budget=config.prime_budget))
    expected = dict(total=25, inseparable=9, g1=0, g2=0, reducible_f=0)
    failures = ["{} = {}".format(k, getattr(record, k))
                for k, v in expected.items() if getattr(record, k) != v]
    out.append(_result("census", "linear census at H = 2", 1, failures))

    for label, monic, Hs, a, b in series:
        start = time.perf_counter()
        table = census_series(2, Hs, monic, config)
        fit = table.fit("g1", a, b)
        if fit.ratio is None:
            failures, detail = ["no G1 instances"], ""
        else:
            detail = "ratio {:.3f}".format(fit.ratio)
            failures = [] if fit.ratio <= G1_RATIO else [detail]
        result = _result("census", "{} G1 census is Theta(H^{} log^{} H)".format(
            label, a, b), len(Hs), failures, detail)
        result.seconds = time.perf_counter() - start
        out.append(result)

        trend = g2_suppression(table)
        failures = ["g2 / g1 grew at H = {}".format(H) for H in trend.reversals]
        detail = ", ".join("H={}: {:.4f}".format(H, r)
                           for H, r in zip(trend.H, trend.ratios))
        out.append(_result("census", "{} g2 / g1 does not grow with H".format(
            label), len(trend.H), failures, detail))
    return out


SUITES = OrderedDict([
    ("poly", poly_suite),
    ("disc", disc_suite),
    ("groups", groups_suite),
    ("fourier", fourier_suite),
    ("galois", galois_suite),
    ("census", census_suite),
])


def run_suites(names=("all",), config=None, samples=None):
    """Run the named suites ("all" expands to every suite), in order.

    Parameters
    ----------
    names : iterable of str
    config : Config, optional
    samples : int, optional
        Random instances per check; each suite has its own default.

    Returns
    -------
    results : list of CheckResult
    """
    if config is None:
        config = Config()
    if isinstance(names, str):
        names = [names]
    selected = []
    for name in names:
        if name == "all":
            selected.extend(SUITES)
        elif name in SUITES:
            selected.append(name)
        else:
            raise ShapeError("Unknown suite {!r}; choose from {}".format(
                name, ["all"] + list(SUITES)))
    results = []
    for name in OrderedDict.fromkeys(selected):
        logger.info("running suite %s", name)
        suite = SUITES[name]
        kwargs = {} if samples is None else {"samples": samples}
        for result in suite(config, **kwargs):
            logger.info("%s: %s (%s)", result.name,
                        "pass" if result.passed else "FAIL", result.detail)
            results.append(result)
    return results


def verify(names=("all",), config=None, samples=None):
    """Run suites and raise if any check failed.

    Raises
    ------
    VerificationError
        Names the failed checks.
    """
    results = run_suites(names, config, samples)
    failed = [r.name for r in results if not r.passed]
    if failed:
        raise VerificationError("Failed checks: " + ", ".join(failed))
    return results
