"""Exact arithmetic for the cumulated deficient binary digit sum.

The library computes the sequence by four independent exact algorithms,
evaluates the Takagi function exactly at dyadic and rational points, and
machine-verifies a catalog of identities relating the two.
"""

__version__ = "0.1.0"

from .sequence import (
    INDEX_LIMIT,
    METHODS,
    compute,
    compute_all,
    cumulative_closed_form,
    cumulative_naive,
    cumulative_naive_range,
    cumulative_recurrence,
    cumulative_takagi,
    deficient_digit_sum,
    floor_log2,
    naive_range,
    recurrence_applications,
    set_cardinality,
    set_membership,
)
from .takagi import (
    Dyadic,
    Interval,
    check_functional_equations,
    dist_to_nearest_int,
    takagi_dyadic,
    takagi_enclosure,
    takagi_rational,
    tau_upper_bound_check,
)
from .identities import (
    CATALOG,
    Identity,
    IdentityReport,
    IntervalMinimum,
    a026644_recurrence,
    active_profile,
    corrupted,
    half_value_indices,
    interval_minimum,
    lichtenberg,
    power4_fixed_points,
    verify,
    verify_all,
)

__all__ = [
    "__version__",
    "INDEX_LIMIT",
    "METHODS",
    "compute",
    "compute_all",
    "cumulative_closed_form",
    "cumulative_naive",
    "cumulative_naive_range",
    "cumulative_recurrence",
    "cumulative_takagi",
    "deficient_digit_sum",
    "floor_log2",
    "naive_range",
    "recurrence_applications",
    "set_cardinality",
    "set_membership",
    "Dyadic",
    "Interval",
    "check_functional_equations",
    "dist_to_nearest_int",
    "takagi_dyadic",
    "takagi_enclosure",
    "takagi_rational",
    "tau_upper_bound_check",
    "CATALOG",
    "Identity",
    "IdentityReport",
    "IntervalMinimum",
    "a026644_recurrence",
    "active_profile",
    "corrupted",
    "half_value_indices",
    "interval_minimum",
    "lichtenberg",
    "power4_fixed_points",
    "verify",
    "verify_all",
]
