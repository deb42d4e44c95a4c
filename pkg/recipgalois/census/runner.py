__doc__ = """Exhaustive censuses over boxes of symmetrized polynomials.

Items are the coefficient vectors (b_n, ..., b_0) with |b_i| <= H (b_n = 1
in the monic box), in lexicographic order. The box is cut into shards of
``config.shard_size`` consecutive items; shards are tallied independently
and folded in shard order.
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import os
import json
import time
import logging
from collections import Counter
from functools import partial
from multiprocessing import Pool

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..config import Config
from ..utils import Bunch, ResourceError, SeparabilityError, ShapeError
from ..polynomials import SymPair
from ..galois.flags import separability_data, is_square_int
from ..galois.certificate import sn_certificate, CERTIFIED, REFUTED
from ..galois.numberfield import g3_flag, reducibility_flag
from .mapping import CensusRecord, CensusTable, TALLIES

logger = logging.getLogger(__name__)


def box_size(n, H, monic=False):
    return (2 * H + 1) ** (n if monic else n + 1)


def item_coefficients(index, n, H, monic=False):
    """Ascending coefficients (b_0, ..., b_n) of the index-th item."""
    base = 2 * H + 1
    free = n if monic else n + 1
    digits = []
    for _ in range(free):
        index, d = divmod(index, base)
        digits.append(d - H)
    if monic:
        digits.append(1)
    return digits


def tally_item(b, n, prime_budget=1000, seed=0):
    """Flags of one g as a Counter of tally names."""
    out = Counter(total=1)
    pair = SymPair.from_g(b, n)
    try:
        g22, disc_g = separability_data(pair)
    except SeparabilityError:
        out["inseparable"] += 1
        return out
    if reducibility_flag(pair.f):
        out["reducible_f"] += 1
    certificate = sn_certificate(pair.g, prime_budget, seed)
    if certificate == REFUTED:
        out["gg_not_sn"] += 1
    elif certificate != CERTIFIED:
        out["gg_undetermined"] += 1
    else:
        out["g1"] += is_square_int(g22)
        out["g2"] += is_square_int(g22 * disc_g)
        out["g3"] += g3_flag(pair, prime_budget, seed,
                             certificate=certificate) == "yes"
    return out


def _tally_shard(bounds, n, H, monic, prime_budget, seed):
    start, stop = bounds
    counts = Counter()
    for index in range(start, stop):
        counts.update(tally_item(item_coefficients(index, n, H, monic), n,
                                 prime_budget, seed))
    return dict(counts)


class Checkpoint(Bunch):
    """Progress of a census: the next shard to run and the partial tallies."""
    _fields = ("n", "H", "monic", "seed", "shard_size", "next_shard",
               "tallies", "elapsed")
    _defaults = {"next_shard": 0, "elapsed": 0.0}

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls(**json.load(f))

    def save(self, path):
        tmp = path + ".tmp"
        with open(tmp, "w") as f:
            f.write(self.to_json())
        os.replace(tmp, path)

    def matches(self, other):
        keys = ("n", "H", "monic", "seed", "shard_size")
        return all(getattr(self, k) == getattr(other, k) for k in keys)


def run_census(n, H, monic=False, config=None, checkpoint=None):
    """Enumerate every g in the box and tally its flags.

    Parameters
    ----------
    n : int
        Degree of g (f has degree 2n).
    H : int
        Coefficient bound.
    monic : bool
        Fix b_n = 1.
    config : Config, optional
        ``workers``, ``seed``, ``prime_budget``, ``shard_size`` and
        ``enumeration_budget`` are used.
    checkpoint : str, optional
        JSON file updated after every shard. An existing file for the same
        box is resumed.

    Returns
    -------
    record : CensusRecord

    Raises
    ------
    ResourceError
        If the box exceeds ``config.enumeration_budget``. With a
        checkpoint, one budget's worth of shards is run first and the error
        carries the checkpoint path; calling again continues from there.
    """
    if config is None:
        config = Config()
    if n < 1 or H < 0:
        raise ShapeError("Need n >= 1 and H >= 0.")
    total = box_size(n, H, monic)
    size = config.shard_size
    shards = [(s, min(s + size, total)) for s in range(0, total, size)]

    state = Checkpoint(n=n, H=H, monic=monic, seed=config.seed,
                       shard_size=size, tallies={})
    if checkpoint is not None and os.path.exists(checkpoint):
        saved = Checkpoint.load(checkpoint)
        if saved.matches(state):
            state = saved
            logger.info("resuming census at shard %d of %d",
                        state.next_shard, len(shards))
        else:
            logger.warning("ignoring checkpoint %s for another box", checkpoint)

    if total > config.enumeration_budget:
        if checkpoint is None:
            raise ResourceError("Box of {} items exceeds the enumeration budget "
                                "{}".format(total, config.enumeration_budget))
        # one budget's worth of shards per invocation
        limit = state.next_shard + config.enumeration_budget // size
        todo = shards[state.next_shard:limit]
    else:
        todo = shards[state.next_shard:]

    worker = partial(_tally_shard, n=n, H=H, monic=monic,
                     prime_budget=config.prime_budget, seed=config.seed)
    tallies = Counter(state.tallies)
    start = time.perf_counter()
    pool = Pool(config.workers) if config.workers > 1 and len(todo) > 1 else None
    try:
        results = pool.imap(worker, todo) if pool else map(worker, todo)
        for counts in results:
            tallies.update(counts)
            state.next_shard += 1
            if checkpoint is not None:
                state.tallies = dict(tallies)
                state.elapsed += time.perf_counter() - start
                start = time.perf_counter()
                state.save(checkpoint)
            logger.debug("shard %d of %d done", state.next_shard, len(shards))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    state.elapsed += time.perf_counter() - start

    if state.next_shard < len(shards):
        raise ResourceError("Census stopped at shard {} of {}: enumeration "
                            "budget {}".format(state.next_shard, len(shards),
                                               config.enumeration_budget),
                            checkpoint=checkpoint)
    record = CensusRecord(n=n, H=H, monic=monic, wall_time=state.elapsed,
                          workers=config.workers, seed=config.seed)
    for key in TALLIES:
        setattr(record, key, int(tallies.get(key, 0)))
    return record


def census_series(n, Hs, monic=False, config=None):
    """Records for each H, as a :class:`CensusTable`."""
    records = []
    for H in Hs:
        logger.info("census n = %d, H = %d, monic = %s", n, H, monic)
        records.append(run_census(n, H, monic, config))
    return CensusTable.from_records(records)


class Suppression(Bunch):
    """Trend of g2 / g1 with H; ``reversals`` lists the H at which the ratio
    grew by more than the tolerance."""
    _fields = ("H", "ratios", "reversals", "tolerance", "passed")


def g2_suppression(records, tolerance=0.2):
    """Check that g2 / g1 does not grow as H increases.

    Rows with g1 = 0 have no ratio and are skipped.
    """
    if isinstance(records, CensusTable):
        records = records.records()
    rows = sorted((r for r in records if r.g1 > 0), key=lambda r: r.H)
    Hs = [r.H for r in rows]
    ratios = [r.g2 / r.g1 for r in rows]
    reversals = [H for H, r0, r1 in zip(Hs[1:], ratios, ratios[1:])
                 if r1 > r0 * (1 + tolerance)]
    return Suppression(H=Hs, ratios=ratios, reversals=reversals,
                       tolerance=tolerance, passed=not reversals)
