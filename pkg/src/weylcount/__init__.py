"""Exact counts of Weyl-chamber walks, oscillating tableaux and matchings
from determinant generating functions, checked against brute force."""

from .identities import (
    VerificationReport,
    bsm_closed_form,
    bsm_egf,
    check_bsm3_recurrence,
    generalized_gessel_gf,
    gessel_gf,
    gm_walk_gf,
    involution_egf,
    total_walk_gf,
    verify_identity,
)
from .series import TruncatedSeries, bessel_I, bessel_J, egf_coefficient, series_determinant, series_exp
from .walks import Partition, WeylPoint

__version__ = "0.1.0"
