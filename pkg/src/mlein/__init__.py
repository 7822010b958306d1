"""Mittag-Leffler exponential, sine and cosine integrals.

Convergent series (double and extended precision) and large-argument
asymptotic expansions for Ein, Sin and Cin, with a harness that compares the
two.
"""
from .asymptotic import (
    AsymptoticResult,
    cin_asymptotic,
    classify_sector,
    ein_asymptotic,
    f_chi_asymptotic,
    optimal_truncate,
    sin_asymptotic,
    stokes_corrected_ein1,
)
from .errors import (
    ConvergenceError,
    DomainError,
    MleinError,
    PrecisionError,
    SectorError,
)
from .gamma import digamma, log_gamma, pochhammer, recip_gamma
from .series import (
    ExpansionParams,
    cin_series,
    ein_series,
    mittag_leffler,
    oracle_eval,
    sin_series,
)

__version__ = "0.1.0"
