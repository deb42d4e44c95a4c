# Container objects for census tallies.
#
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import json

import pandas as pd

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..__version__ import SCHEMA_VERSION
from ..utils import Bunch, ShapeError, jsonable
from ..stats import fit_asymptotic

#: Fixed CSV column order.
CSV_COLUMNS = ["n", "H", "monic", "total", "inseparable", "reducible_f",
               "g1", "g2", "g3", "gg_not_sn", "wall_time"]

#: Tallies summed over shards.
TALLIES = ["total", "inseparable", "reducible_f", "g1", "g2", "g3",
           "gg_not_sn", "gg_undetermined"]


class CensusRecord(Bunch):
    """Tallies over one coefficient box.

    ``g1``, ``g2`` and ``g3`` count separable g with a certified S_n group
    and the corresponding flag set. Items whose certificate is refuted or
    undetermined go to ``gg_not_sn`` and ``gg_undetermined``.
    """
    _fields = ("n", "H", "monic", "total", "inseparable", "reducible_f",
               "g1", "g2", "g3", "gg_not_sn", "gg_undetermined",
               "wall_time", "workers", "seed")
    _defaults = dict([(key, 0) for key in TALLIES])
    _defaults.update(monic=False, wall_time=0.0, workers=1, seed=0)

    @property
    def separable(self):
        return self.total - self.inseparable

    def to_json(self, **kwargs):
        data = jsonable(self.to_dict())
        data["schema"] = SCHEMA_VERSION
        return json.dumps(data, **kwargs)


class CensusTable(object):
    """Container object (DataFrame) of census records, one row per box."""

    def __init__(self, df=None):
        if df is None:
            df = pd.DataFrame(columns=list(CensusRecord._fields))
        if not isinstance(df, pd.DataFrame):
            raise ShapeError("df must be a DataFrame.")
        missing = set(CSV_COLUMNS) - set(df.columns)
        if missing:
            raise ShapeError("Missing census columns: {}".format(sorted(missing)))
        self.data = df.reset_index(drop=True)

    @classmethod
    def from_records(cls, records):
        rows = [r.to_dict() for r in records]
        return cls(pd.DataFrame(rows, columns=list(CensusRecord._fields)))

    @classmethod
    def read_csv(cls, filename):
        return cls(pd.read_csv(filename))

    def __len__(self):
        return len(self.data)

    def records(self):
        out = []
        for row in self.data.to_dict("records"):
            kwargs = dict((k, v) for k, v in row.items()
                          if k in CensusRecord._fields and not pd.isna(v))
            for key in TALLIES + ["n", "H", "workers", "seed"]:
                if key in kwargs:
                    kwargs[key] = int(kwargs[key])
            if "monic" in kwargs:
                kwargs["monic"] = bool(kwargs["monic"])
            out.append(CensusRecord(**kwargs))
        return out

    def to_csv(self, filename=None):
        """Write the fixed CSV columns; returns the text when no filename
        is given."""
        return self.data[CSV_COLUMNS].to_csv(filename, index=False)

    def to_jsonl(self, filename=None):
        """One JSON record per line."""
        text = "".join(r.to_json() + "\n" for r in self.records())
        if filename is None:
            return text
        with open(filename, "w") as f:
            f.write(text)

    def fit(self, column, a, b=0):
        """Fit a tally against C H^a log^b H over the rows, sorted by H."""
        data = self.data.sort_values("H")
        return fit_asymptotic(zip(data["H"], data[column]), a, b)
