"""Exact classical limits of symmetric-quiver generating series with higher-level generators."""

from .bps import bps_numbers, bps_table, log_series, mobius, specialize
from .catalog import bottom_row_946, get_entry
from .closedform import coeff_A, coeff_b, enumerate_admissible, log_coeff_closed
from .exact import LaurentPoly, RationalFunction, gen_binomial, limit_at_one, pochhammer_qq
from .lattice import (
    convolution_check,
    count_paths,
    fuss_catalan,
    level_count,
    quantum_coeff,
    raney_number,
    weighted_count,
)
from .series import (
    MultiSeries,
    QuiverSpec,
    classical_limit_oracle,
    expand_pc,
    partial_limit,
    ratio_series,
    shift_q,
)

__version__ = "0.1.0"
