"""Exact toolkit for Gm- and Ga-actions on affine toric varieties.

Vectors are lists of Python ints, rationals are fractions.Fraction, and ray
indices are 0-based. Errors raise toricflow.Error with args (kind, message).
"""

from ._toricflow import (
    Error,
    classify,
    contains,
    dual_rays,
    facet_normals,
    hilbert_basis,
    is_saturated,
    roots_in_box,
    run_cli,
    straightening_subtori,
    verify_compatible,
)

__all__ = [
    "Error",
    "classify",
    "contains",
    "dual_rays",
    "facet_normals",
    "hilbert_basis",
    "is_saturated",
    "roots_in_box",
    "run_cli",
    "straightening_subtori",
    "verify_compatible",
]
