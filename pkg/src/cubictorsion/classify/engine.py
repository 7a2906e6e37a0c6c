"""Classification of the torsion structure over the cubic compositum,
driven by the embedded parameterization table.

A j-invariant matches a family when it equals a listed finite value or
lies in the image of one of the family's rational functions at a
rational argument (with nonzero denominator, which excludes cusps).
Among all matched shapes there is always a unique maximal one under
componentwise divisibility; that shape is the answer.  Non-uniqueness
would mean corrupted table data or a root-finding defect, so it aborts
loudly instead of guessing.

j = 1728 is the one curve-dependent point: the result is decided by the
quartic twist parameter d (E is isomorphic to y^2 = x^3 + dx), giving
(4,4) when d or -d is a square and (2,2) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from cubictorsion.exact import (
    PolyQ,
    fourth_power_free,
    rat_from_wire,
    rat_to_wire,
    rational_roots,
)
from cubictorsion.curves import WeierstrassCurve, invariants
from cubictorsion.shapes import TorsionShape, shape_contains

from .table1 import table1_data


class CurveRequired(ValueError):
    """j = 1728 does not determine the torsion; a curve is required."""


class ClassificationError(RuntimeError):
    """The matched set had no unique maximal shape; data corruption."""


@dataclass(frozen=True)
class Match:
    shape: TorsionShape
    witnesses: tuple
    finite_hit: bool

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_wire(),
            "witnesses": [rat_to_wire(w) for w in self.witnesses],
            "finite": self.finite_hit,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Match":
        return cls(
            TorsionShape(*data["shape"]),
            tuple(Fraction(rat_from_wire(w)) for w in data["witnesses"]),
            bool(data["finite"]),
        )


@dataclass(frozen=True)
class ClassificationResult:
    input_j: Fraction
    shape: TorsionShape
    matched: tuple
    method: str

    def to_json(self) -> dict:
        return {
            "input_j": rat_to_wire(self.input_j),
            "torsion": self.shape.to_wire(),
            "matched": [m.to_json() for m in self.matched],
            "method": self.method,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClassificationResult":
        return cls(
            Fraction(rat_from_wire(data["input_j"])),
            TorsionShape(*data["torsion"]),
            tuple(Match.from_json(m) for m in data["matched"]),
            str(data["method"]),
        )


def family_membership(j0) -> list:
    """Every family matching j0, with verified witnesses."""
    j0 = Fraction(j0)
    out = []
    for rec in table1_data():
        witnesses = []
        finite_hit = False
        if j0 in rec.finite_js:
            finite_hit = True
            witnesses.append(j0)
        for num, den in rec.functions:
            for t in _preimages(num, den, j0):
                witnesses.append(t)
        if witnesses:
            out.append(Match(rec.shape, tuple(witnesses), finite_hit))
    return out


def _preimages(num: PolyQ, den: PolyQ, j0: Fraction) -> list:
    poly = num - PolyQ([j0]) * den
    if poly.is_zero():
        raise ArithmeticError("internal error: constant family function")
    found = []
    for root in rational_roots(poly):
        t = Fraction(root)
        d = den(t)
        if d == 0:
            continue
        if num(t) != j0 * d:
            raise ArithmeticError("internal error: unverified witness")
        found.append(t)
    return found


def classify_j(j0) -> ClassificationResult:
    """The torsion shape for a curve with this j-invariant, j0 != 1728."""
    j0 = Fraction(j0)
    if j0 == 1728:
        raise CurveRequired("curve required: j = 1728 is curve-dependent")
    matched = family_membership(j0)
    maximal = [m for m in matched
               if not any(m is not o and shape_contains(m.shape, o.shape)
                          and m.shape != o.shape for o in matched)]
    shapes = {m.shape for m in maximal}
    if len(shapes) != 1:
        raise ClassificationError(
            f"no unique maximal shape for j = {j0}: "
            f"{sorted((s.m1, s.m2) for s in shapes)}")
    return ClassificationResult(j0, maximal[0].shape, tuple(matched), "table")


def quartic_twist_parameter(E: WeierstrassCurve) -> int:
    """Fourth-power-free integer d with E isomorphic to y^2 = x^3 + dx."""
    inv = invariants(E)
    if inv.j != 1728:
        raise ValueError("j is not 1728")
    # y^2 = x^3 + Ax has c4 = -48A, so -27 c4 = 1296 A = 6^4 A
    return fourth_power_free(-27 * inv.c4)


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def classify_curve(E: WeierstrassCurve) -> ClassificationResult:
    """Torsion shape for the curve; handles j = 1728 via the twist rule."""
    inv = invariants(E)
    if inv.j != 1728:
        return classify_j(inv.j)
    d = quartic_twist_parameter(E)
    shape = TorsionShape(4, 4) if _is_square(d) or _is_square(-d) \
        else TorsionShape(2, 2)
    match = Match(shape, (Fraction(d),), False)
    return ClassificationResult(Fraction(1728), shape, (match,), "j1728-rule")
