"""Elliptic curves over Q: models, division polynomials, reduction data."""

from .divpoly import (
    DIVPOLY_MAX_N,
    DivisionPoly,
    division_poly,
    primitive_division_poly,
    two_torsion_cubic,
)
from .local import (
    AP_MAX_P,
    LocalData,
    ap,
    good_primes,
    has_good_reduction,
    order_ext,
)
from .torsion import has_point_of_order, torsion_over_Q
from .weierstrass import CurveInvariants, WeierstrassCurve, curve_from_j, invariants

__all__ = [
    "AP_MAX_P",
    "DIVPOLY_MAX_N",
    "CurveInvariants",
    "DivisionPoly",
    "LocalData",
    "WeierstrassCurve",
    "ap",
    "curve_from_j",
    "division_poly",
    "good_primes",
    "has_good_reduction",
    "has_point_of_order",
    "invariants",
    "order_ext",
    "primitive_division_poly",
    "torsion_over_Q",
    "two_torsion_cubic",
]
