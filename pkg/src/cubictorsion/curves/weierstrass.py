"""Weierstrass models over Q and their standard invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cubictorsion.exact import rat_from_wire, rat_to_wire


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 with rational a_i."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __init__(self, a1, a2, a3, a4, a6):
        for name, v in zip(("a1", "a2", "a3", "a4", "a6"),
                           (a1, a2, a3, a4, a6)):
            object.__setattr__(self, name, Fraction(v))

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = (b2 * b6 - b4 * b4) / 4
        return b2, b4, b6, b8

    def rhs(self, x) -> Fraction:
        """x^3 + a2 x^2 + a4 x + a6."""
        x = Fraction(x)
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def two_torsion_value(self, x) -> Fraction:
        """(2y + a1 x + a3)^2 evaluated via the curve: 4x^3+b2 x^2+2b4 x+b6."""
        b2, b4, b6, _ = self.b_invariants()
        x = Fraction(x)
        return ((4 * x + b2) * x + 2 * b4) * x + b6

    def to_wire(self) -> list:
        return [rat_to_wire(a) for a in
                (self.a1, self.a2, self.a3, self.a4, self.a6)]

    @classmethod
    def from_wire(cls, items) -> "WeierstrassCurve":
        if len(items) != 5:
            raise ValueError("expected 5 coefficients")
        return cls(*(rat_from_wire(str(s)) for s in items))


@dataclass(frozen=True)
class CurveInvariants:
    c4: Fraction
    c6: Fraction
    disc: Fraction
    j: Fraction


def invariants(E: WeierstrassCurve) -> CurveInvariants:
    """c4, c6, discriminant, and j; raises on a singular model."""
    b2, b4, b6, b8 = E.b_invariants()
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise ValueError("singular curve")
    assert c4 ** 3 - c6 ** 2 == 1728 * disc
    return CurveInvariants(c4, c6, disc, c4 ** 3 / disc)


def curve_from_j(j) -> WeierstrassCurve:
    """A designated curve with the given j-invariant.

    For j outside {0, 1728} this is y^2 = x^3 + Ax + B with
    A = 3j(1728-j) and B = 2j(1728-j)^2; the two special values get the
    fixed representatives y^2 = x^3 + 1 and y^2 = x^3 + x.
    """
    j = Fraction(j)
    if j == 0:
        return WeierstrassCurve(0, 0, 0, 0, 1)
    if j == 1728:
        return WeierstrassCurve(0, 0, 0, 1, 0)
    k = 1728 - j
    return WeierstrassCurve(0, 0, 0, 3 * j * k, 2 * j * k * k)
