"""Shared independent oracles used by the classifier and acceptance tests.

The quartic-twist oracle decides whether y^2 = x^3 + dx acquires full
4-torsion over the compositum of all cubic fields, without using the
square-class rule it validates.  These curves always have a rational point
of order 2, so 2-primary growth can only come from multiquadratic
extensions; the oracle therefore demands that every primitive 4-torsion
point generate a multiquadratic field, factoring the 4-division polynomial
and inspecting both coordinates:

  - an irreducible x-factor of degree 3 or 6 is fatal (odd degree);
  - an irreducible x-factor of degree 4 must have Galois group V4,
    detected by its resolvent cubic splitting completely;
  - for an irreducible x-factor of degree <= 2, the y-coordinate satisfies
    y^2 = alpha with alpha = x0^3 + d*x0 in Q(x0); its quartic
    y^4 - Tr(alpha) y^2 + N(alpha), when irreducible, must pass the same
    resolvent test (reducible means y already lives in a quadratic field).
"""
from fractions import Fraction

from cubictorsion.exact.polyq import PolyQ
from cubictorsion.exact.factor import factor_over_Q
from cubictorsion.curves import WeierstrassCurve, primitive_division_poly


def resolvent_cubic(q: PolyQ) -> PolyQ:
    e, d, c, b = q.monic().coeffs[:4]
    return PolyQ([-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c,
                  Fraction(1)])


def _splits_completely(p: PolyQ) -> bool:
    return all(f.degree == 1 for f in factor_over_Q(p))


def _y_quartic(b, c, d):
    # x0^2 = -b x0 - c, so alpha = x0^3 + d x0 = u x0 + v
    u = b * b - c + d
    v = b * c
    tr = -u * b + 2 * v
    nm = u * u * c - u * v * b + v * v
    return PolyQ([nm, 0, -tr, 0, 1])


def full_four_torsion_oracle(d: int) -> bool:
    """True iff y^2 = x^3 + dx has all of E[4] rational over the big field."""
    E = WeierstrassCurve(0, 0, 0, d, 0)
    h4 = primitive_division_poly(E, 4).poly
    for f in factor_over_Q(h4):
        if f.degree in (3, 6):
            return False
        if f.degree == 4:
            if not _splits_completely(resolvent_cubic(f)):
                return False
            continue
        if f.degree == 1:
            continue
        fm = f.monic()
        q = _y_quartic(fm.coeffs[1], fm.coeffs[0], Fraction(d))
        facs = factor_over_Q(q)
        if len(facs) == 1 and facs[0].degree == 4:
            if not _splits_completely(resolvent_cubic(q)):
                return False
    return True
