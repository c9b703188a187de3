"""Optimal binary locally repairable codes with d >= 6 and locality 2^b.

Codes are built from pairwise trivially intersecting subspaces (spreads and
partial spreads) and a small "desired" matrix; every construction can be
certified for distance, locality, dimension and k-optimality.
"""

__version__ = "0.1.0"

from .bounds import ell_range, rate_bound, rate_bound_k, singleton_like
from .desired import DesiredMatrix, cyclic_seed, fixture, search_desired, verify_desired
from .lrc import LrcCode, LrcParams, construct, expected_params, shorten_columns, shorten_groups
from .subspaces import full_spread, partial_spread, verify_family
from .verify import check_lemma6, exact_min_distance, optimality_report, verify_locality

__all__ = [
    "DesiredMatrix",
    "LrcCode",
    "LrcParams",
    "check_lemma6",
    "construct",
    "cyclic_seed",
    "ell_range",
    "exact_min_distance",
    "expected_params",
    "fixture",
    "full_spread",
    "optimality_report",
    "partial_spread",
    "rate_bound",
    "rate_bound_k",
    "search_desired",
    "shorten_columns",
    "shorten_groups",
    "singleton_like",
    "verify_desired",
    "verify_family",
    "verify_locality",
]
