__doc__ = """Command line entry point ``recipgalois``.

Every verb writes machine readable records: JSON lines by default, or CSV
with ``--format csv``. Exit codes are 0 on success, 1 when a verification
or resource budget fails and 2 on bad input.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import sys
import json
import logging
import argparse

import pandas as pd

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from .__version__ import __version__, SCHEMA_VERSION
from .config import Config
from .utils import (RecipError, ResourceError, VerificationError, jsonable)
from .galois import classify_many
from .census import (run_census, count_xyz_square, CensusTable)
from .fourier import fourier_full, lambda_delta_split
from .groups import census_rows, named_subgroup, cycle_type_distribution
from .discriminants import SplittingType
from .stats import fit_asymptotic
from .validate import SUITES, run_suites

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_PLUS_MINUS = {"+2": "@2", "2": "@2", "-2": "@-2"}


def _record(obj):
    data = jsonable(obj)
    data["schema"] = SCHEMA_VERSION
    return data


def _emit(records, config, columns=None):
    """Write records as JSON lines or CSV to ``config.out_path`` (stdout
    when None)."""
    records = [_record(r) for r in records]
    if config.out_format == "csv":
        text = pd.DataFrame(records, columns=columns).to_csv(index=False)
    else:
        text = "".join(json.dumps(r) + "\n" for r in records)
    if config.out_path is None:
        sys.stdout.write(text)
    else:
        with open(config.out_path, "w") as f:
            f.write(text)


# ----------------------------------------------------------
# Verbs
# ----------------------------------------------------------

def cmd_classify(args, config):
    flags = classify_many([args.poly], config,
                          fingerprint=not args.no_fingerprint)
    _emit(flags, config)


def cmd_census(args, config):
    records = []
    for H in args.H:
        records.append(run_census(args.n, H, args.monic, config,
                                  checkpoint=args.checkpoint))
    if config.out_format == "csv":
        text = CensusTable.from_records(records).to_csv()
        if config.out_path is None:
            sys.stdout.write(text)
        else:
            with open(config.out_path, "w") as f:
                f.write(text)
    else:
        _emit(records, config)


def cmd_xyz(args, config):
    samples = [(H, count_xyz_square(H)) for H in args.H]
    if len(samples) == 1:
        print(samples[0][1])
        return
    for H, count in samples:
        print(H, count)
    if len(samples) >= 3:
        fit = fit_asymptotic(samples, 1, 1)
        print("fit C H log H: C in [{:.4f}, {:.4f}], ratio {:.4f}".format(
            fit.fitted_constant_range[0], fit.fitted_constant_range[1],
            fit.ratio))


def cmd_fourier(args, config):
    text = args.sigma
    if args.pointed is not None:
        if "*" not in text:
            text = "*" + text
        text += _PLUS_MINUS[args.pointed]
    sigma = SplittingType.parse(text)
    pointed = sigma.marked is not None
    # the transform itself always marks y (or u); the annotation only moves
    # the marked root for the lattice split
    plain = SplittingType(sigma.factors, marked=sigma.marked)
    transform = fourier_full(args.p, plain, args.n, pointed, args.monic,
                             config.transform_budget)
    report = transform.report()
    columns = ["p", "n", "sigma", "pointed", "monic", "zero_value",
               "max_off_support", "envelope_constant"]
    row = dict((key, getattr(report, key)) for key in columns)
    if sigma.annotation is not None:
        split = lambda_delta_split(args.p, sigma, args.n,
                                   config.transform_budget)
        row.update(sigma=str(sigma), a_p=split.a_p, index=split.lattice.index,
                   delta_max=split.delta_max)
        columns += ["a_p", "index", "delta_max"]
    _emit([dict((key, row[key]) for key in columns)], config, columns)


def cmd_groups(args, config):
    rows = []
    for row in census_rows(args.n):
        data = row.to_dict()
        if args.all_overgroups:
            dist = cycle_type_distribution(named_subgroup(row.tag, args.n))
            data["cycle_types"] = [[list(ct), freq] for ct, freq in dist.items()]
        rows.append(data)
    _emit([{"n": args.n, "subgroups": rows}], config)


def cmd_verify(args, config):
    results = run_suites(args.suite or ["all"], config, args.samples)
    _emit(results, config)
    failed = [r.name for r in results if not r.passed]
    if failed:
        raise VerificationError("Failed checks: " + ", ".join(failed))


# ----------------------------------------------------------
# Parser
# ----------------------------------------------------------

def _common():
    # SUPPRESS keeps subcommand defaults from hiding flags given before the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes; 1 runs serially")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for every random choice")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="primes scanned by certificates")
    common.add_argument("--format", choices=["json", "csv"],
                        default=argparse.SUPPRESS, help="output format")
    common.add_argument("--out", default=argparse.SUPPRESS,
                        help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="count",
                        default=argparse.SUPPRESS,
                        help="-v for progress, -vv for debugging")
    return common


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="recipgalois", parents=[common],
        description="Galois groups of reciprocal polynomials: square "
                    "conditions, subgroup census, mod p transforms and "
                    "exhaustive counts.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    verbs = parser.add_subparsers(dest="verb", metavar="verb")
    verbs.required = True

    p = verbs.add_parser("classify", parents=[common],
                         help="flags of one reciprocal polynomial")
    p.add_argument("--poly", required=True,
                   help='ascending coefficients, e.g. "1,0,-3,0,1"')
    p.add_argument("--no-fingerprint", action="store_true",
                   help="skip the Frobenius fingerprint")
    p.set_defaults(func=cmd_classify)

    p = verbs.add_parser("census", parents=[common],
                         help="exhaustive census over coefficient boxes")
    p.add_argument("--n", type=int, required=True, help="degree of g")
    p.add_argument("--H", type=int, nargs="+", required=True,
                   help="coefficient bounds")
    p.add_argument("--monic", action="store_true")
    p.add_argument("--checkpoint", default=None,
                   help="JSON checkpoint to resume from and update")
    p.set_defaults(func=cmd_census)

    p = verbs.add_parser("xyz", parents=[common],
                         help="count solutions of xy = z^2")
    p.add_argument("--H", type=int, nargs="+", required=True)
    p.set_defaults(func=cmd_xyz)

    p = verbs.add_parser("fourier", parents=[common],
                         help="exhaustive mod p transform of w or w'")
    p.add_argument("--p", type=int, required=True, help="odd prime")
    p.add_argument("--n", type=int, default=None,
                   help="form degree (default: degree of sigma)")
    p.add_argument("--sigma", required=True, help='splitting type, e.g. "1^2,1"')
    p.add_argument("--pointed", choices=sorted(_PLUS_MINUS), default=None,
                   help="mark a linear factor with root at u = +2 or -2")
    p.add_argument("--monic", action="store_true")
    p.set_defaults(func=cmd_fourier)

    p = verbs.add_parser("groups", parents=[common],
                         help="subgroups of S_2 wr S_n surjecting onto S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all-overgroups", action="store_true",
                   help="include the cycle type distribution of each")
    p.set_defaults(func=cmd_groups)

    p = verbs.add_parser("verify", parents=[common],
                         help="run the invariant suites")
    p.add_argument("--suite", action="append",
                   choices=["all"] + list(SUITES))
    p.add_argument("--samples", type=int, default=None,
                   help="random instances per check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    verbose = getattr(args, "verbose", 0)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]
    logging.basicConfig(level=level,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        config = Config.from_environ(
            workers=getattr(args, "workers", None),
            seed=getattr(args, "seed", None),
            prime_budget=getattr(args, "budget", None),
            out_format=getattr(args, "format", None),
            out_path=getattr(args, "out", None))
    except ValueError as e:
        parser.error(str(e))

    try:
        args.func(args, config)
    except VerificationError as e:
        logger.error("%s", e)
        return EXIT_FAILED
    except ResourceError as e:
        if e.checkpoint:
            logger.error("%s; resume with --checkpoint %s", e, e.checkpoint)
        else:
            logger.error("%s", e)
        return EXIT_FAILED
    except RecipError as e:
        logger.error("%s", e)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
