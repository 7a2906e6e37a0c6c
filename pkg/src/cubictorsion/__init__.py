"""Torsion growth of rational elliptic curves over the compositum of all
cubic number fields, with the finite group theory and modular-curve genus
computations needed to certify the classification.

The subpackages are importable on their own; the names most callers want
are re-exported here.
"""

from cubictorsion.classify import classify_curve, classify_j
from cubictorsion.curves import WeierstrassCurve, curve_from_j
from cubictorsion.shapes import TorsionShape

__version__ = "0.1.0"

__all__ = [
    "TorsionShape",
    "WeierstrassCurve",
    "classify_curve",
    "classify_j",
    "curve_from_j",
    "__version__",
]
