"""
Exhaustive censuses over coefficient boxes, the xy = z^2 counter and the
census tables behind the asymptotic fits.
"""
from .mapping import CensusRecord, CensusTable, CSV_COLUMNS
from .counting import count_xyz_square, count_xyz_square_brute
from .runner import (run_census, census_series, g2_suppression, tally_item,
                     item_coefficients, box_size, Checkpoint)
