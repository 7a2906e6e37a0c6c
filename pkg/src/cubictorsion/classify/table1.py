"""The embedded classification dataset: for each of the 20 possible
torsion structures over the cubic compositum, either rational functions
j(t) whose images fill out the corresponding j-invariants, or the finite
list of j-invariants when only finitely many curves realize it.

Functions are stored factored and expanded at import through the exact
polynomial layer, so the entries stay auditable; coefficients ascend by
degree (index = power of t).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from cubictorsion.exact import PolyQ, rat_from_wire, rat_to_wire
from cubictorsion.shapes import TorsionShape


@dataclass(frozen=True)
class FamilyRecord:
    shape: TorsionShape
    functions: tuple = ()
    finite_js: tuple = ()

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_wire(),
            "functions": [
                {"numerator": num.to_wire(), "denominator": den.to_wire()}
                for num, den in self.functions
            ],
            "finite_js": [rat_to_wire(j) for j in self.finite_js],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FamilyRecord":
        return cls(
            TorsionShape(*data["shape"]),
            tuple(
                (PolyQ.from_wire(f["numerator"]), PolyQ.from_wire(f["denominator"]))
                for f in data["functions"]
            ),
            tuple(Fraction(rat_from_wire(j)) for j in data["finite_js"]),
        )


def _p(*cs) -> PolyQ:
    return PolyQ(cs)


_T = _p(0, 1)
_ONE = _p(1)


def _shape(m1, m2):
    return TorsionShape(m1, m2)


def _fam(m1, m2, functions=(), finite=()):
    return FamilyRecord(
        _shape(m1, m2),
        tuple((num, den) for num, den in functions),
        tuple(Fraction(a, b) for a, b in finite),
    )


_TABLE1 = (
    _fam(2, 2, functions=[(_T, _ONE)]),
    _fam(2, 4, functions=[(_p(16, 16, 1) ** 3, _T * _p(16, 1))]),
    _fam(2, 8, functions=[(_p(16, 0, -16, 0, 1) ** 3,
                           _T ** 2 * _p(-16, 0, 1))]),
    _fam(2, 10, functions=[(_p(1, 12, 14, -12, 1) ** 3,
                            _T ** 5 * _p(-1, -11, 1))]),
    _fam(2, 14, functions=[(_p(49, 13, 1) * _p(1, 5, 1) ** 3, _T)]),
    _fam(2, 16, functions=[
        (_p(1, 0, -8, 0, 12, 0, 8, 0, -10, 0, 8, 0, 12, 0, -8, 0, 1) ** 3,
         _T ** 16 * _p(1, 0, -6, 0, 1) * _p(1, 0, 1) ** 2 * _p(-1, 0, 1) ** 4),
    ]),
    _fam(2, 26, functions=[
        (_p(1, 1, 5, -1, 1) * _p(1, 5, 7, 5, 0, -5, 7, -5, 1) ** 3,
         _T ** 13 * _p(-1, -3, 1)),
    ]),
    _fam(4, 4, functions=[
        (_p(192, 0, 1) ** 3, _p(-64, 0, 1) ** 2),
        (-16 * _p(1, 0, -14, 0, 1) ** 3, _T ** 2 * _p(1, 0, 1) ** 4),
        (-4 * _p(-2, 2, 1) ** 3 * _p(-2, 10, 1), _T ** 4),
    ]),
    _fam(4, 8, functions=[
        (16 * _p(16, 32, 20, 4, 1) ** 3,
         _T ** 4 * _p(1, 1) ** 2 * _p(2, 1) ** 4),
        (-4 * _p(1, 0, -60, 0, 134, 0, -60, 0, 1) ** 3,
         _T ** 2 * _p(-1, 0, 1) ** 2 * _p(1, 0, 1) ** 8),
    ]),
    _fam(4, 16, functions=[
        (_p(1, 0, -8, 0, 12, 0, 8, 0, 230, 0, 8, 0, 12, 0, -8, 0, 1) ** 3,
         _T ** 8 * _p(-1, 0, 1) ** 8 * _p(1, 0, 1) ** 4
         * _p(1, 0, -6, 0, 1) ** 2),
    ]),
    _fam(4, 28, finite=[(351, 4), (-38575685889, 16384)]),
    _fam(6, 6, functions=[(_p(27, 1) * _p(3, 1) ** 3, _T)]),
    _fam(6, 12, functions=[
        (_p(-3, 0, 1) ** 3 * _p(-3, 0, 3, 0, -9, 0, 1) ** 3,
         _T ** 4 * _p(-9, 0, 1) * _p(-1, 0, 1) ** 3),
    ]),
    _fam(6, 18, functions=[
        (_p(3, 1) ** 3 * _p(3, 27, 9, 1) ** 3, _T * _p(27, 9, 1)),
        (_p(3, 1) * _p(9, -3, 1) * _p(3, 0, 0, 1) ** 3, _T ** 3),
    ]),
    _fam(6, 30, finite=[(-121945, 32), (46969655, 32768)]),
    _fam(6, 42, finite=[(3375, 2), (-140625, 8),
                        (-1159088625, 2097152), (-189613868625, 128)]),
    _fam(8, 8, functions=[
        (_p(256, 0, 0, 0, 224, 0, 0, 0, 1) ** 3,
         _T ** 4 * _p(-16, 0, 0, 0, 1) ** 4),
    ]),
    _fam(12, 12,
         functions=[
             (_p(3, 0, 1) ** 3 * _p(3, 0, 75, 0, -15, 0, 1) ** 3,
              _T ** 2 * _p(-9, 0, 1) ** 2 * _p(-1, 0, 1) ** 6),
         ],
         finite=[(-35937, 4), (109503, 64)]),
    _fam(14, 14, finite=[(2268945, 128)]),
    _fam(18, 18, functions=[
        (27 * _T ** 3 * _p(8, 0, 0, -1) ** 3, _p(1, 0, 0, 1) ** 3),
        (432 * _T * _p(-9, 0, 1) * _p(3, 0, 1) ** 3 * _p(12, -9, 0, 1) ** 3
         * _p(3, 27, 9, 1) ** 3 * _p(-3, -9, -9, 5) ** 3,
         _p(3, -9, -3, 1) ** 9 * _p(-3, -9, 3, 1) ** 3),
    ]),
)


def table1_data() -> tuple:
    """All 20 family records, ordered by shape."""
    return _TABLE1


def table1_to_json() -> list:
    return [rec.to_json() for rec in _TABLE1]


def table1_from_json(items) -> tuple:
    return tuple(FamilyRecord.from_json(d) for d in items)


def class20() -> tuple:
    """The 20 admissible torsion shapes, in table order."""
    return tuple(rec.shape for rec in _TABLE1)
