"""Thue-Morse words, overlap avoidance, factor complexity and sequence analysis."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    builtin_sequence,
    circular_counts,
    count_overlap_free,
    detect_eventual_period,
    factor_count,
    find_overlap,
    find_squares,
    generalized_thue_morse,
    is_circular_overlap_free,
    is_overlap_free,
    kernel,
    paperfolding,
    paperfolding_factor_count,
    pf_formula,
    pt_formula,
    ptk_formula,
    run,
    thue_morse,
)

__version__ = "1.0.0"


def guess_linear_recurrence(values, max_order, offset=0):
    """Coefficients c with s(n) = c[0] s(n-1) + ... as Fractions, or None."""
    coeffs = _core.guess_linear_recurrence(list(values), max_order, offset)
    return None if coeffs is None else [Fraction(c) for c in coeffs]


def interchange_report(k, c="1", all_splits=False):
    """The interchange report for witness size k, as a dict."""
    return json.loads(_core.interchange_report_json(k, str(c), all_splits))


__all__ = [
    "builtin_sequence",
    "circular_counts",
    "count_overlap_free",
    "detect_eventual_period",
    "factor_count",
    "find_overlap",
    "find_squares",
    "generalized_thue_morse",
    "guess_linear_recurrence",
    "interchange_report",
    "is_circular_overlap_free",
    "is_overlap_free",
    "kernel",
    "paperfolding",
    "paperfolding_factor_count",
    "pf_formula",
    "pt_formula",
    "ptk_formula",
    "run",
    "thue_morse",
]
