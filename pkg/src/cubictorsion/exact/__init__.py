"""Exact arithmetic: rationals, polynomials over Q and F_p, factorization."""

from .factor import ddf_degrees, factor_over_Q
from .polyq import PolyQ, X
from .rational import (
    BigRational,
    factorint,
    fourth_power_free,
    is_probable_prime,
    next_prime,
    rat_from_wire,
    rat_to_wire,
    squarefree_part,
)
from .roots import might_have_rational_roots, rational_roots

__all__ = [
    "BigRational",
    "PolyQ",
    "X",
    "ddf_degrees",
    "factor_over_Q",
    "factorint",
    "fourth_power_free",
    "is_probable_prime",
    "might_have_rational_roots",
    "next_prime",
    "rat_from_wire",
    "rat_to_wire",
    "rational_roots",
    "squarefree_part",
]
