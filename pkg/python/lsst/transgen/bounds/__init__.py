"""Named generator-count bounds: induced-module bounds, chief series bounds
for wreath products, and the Pyber and Holt bounds for primitive groups.
"""

from ._induced import (
    LOG_FORM_SWITCH,
    OrbitPart,
    e_bound,
    e_sol_bound,
    induced_bound,
    log_form_bound,
    log_form_expr,
    orbit_bound,
    soluble_orbit_bound,
)
from ._primitive import (
    HoltBound,
    composition_cap_expr,
    holt_bound,
    large_block_ratio,
    pyber_ab_bound,
    pyber_composition_bound,
    pyber_nonab_bound,
)
from ._profiles import ChiefFactorProfile
from ._values import BoundScalar, BoundValue, SolubilityContext, TraceStep, maximum, minimum
from ._wreath import (
    SplitPart,
    chief_series_bound,
    log_form_series_bound,
    mersenne_series_bound,
    orbit_count_bound,
    s4_block_bound,
    split_exponent_bound,
    split_exponent_expr,
)

__all__ = (
    "LOG_FORM_SWITCH",
    "BoundScalar",
    "BoundValue",
    "ChiefFactorProfile",
    "HoltBound",
    "OrbitPart",
    "SolubilityContext",
    "SplitPart",
    "TraceStep",
    "chief_series_bound",
    "composition_cap_expr",
    "e_bound",
    "e_sol_bound",
    "holt_bound",
    "induced_bound",
    "large_block_ratio",
    "log_form_bound",
    "log_form_expr",
    "log_form_series_bound",
    "maximum",
    "mersenne_series_bound",
    "minimum",
    "orbit_bound",
    "orbit_count_bound",
    "pyber_ab_bound",
    "pyber_composition_bound",
    "pyber_nonab_bound",
    "s4_block_bound",
    "soluble_orbit_bound",
    "split_exponent_bound",
    "split_exponent_expr",
)
