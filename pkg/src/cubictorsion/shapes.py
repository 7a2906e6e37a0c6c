"""Torsion shapes (m1, m2) for the groups Z/m1 x Z/m2 with m1 | m2."""

from __future__ import annotations

from typing import NamedTuple


class TorsionShape(NamedTuple):
    m1: int
    m2: int

    def __str__(self):
        return f"({self.m1},{self.m2})"

    @property
    def order(self) -> int:
        return self.m1 * self.m2

    @property
    def exponent(self) -> int:
        return self.m2

    def to_wire(self):
        return [self.m1, self.m2]

    @classmethod
    def from_wire(cls, pair):
        t = cls(int(pair[0]), int(pair[1]))
        if t.m1 <= 0 or t.m2 % t.m1 != 0:
            raise ValueError(f"not a torsion shape: {pair}")
        return t


def shape_contains(t1: TorsionShape, t2: TorsionShape) -> bool:
    """True iff Z/t1.m1 x Z/t1.m2 embeds in Z/t2.m1 x Z/t2.m2 (divisibility
    in both coordinates)."""
    return t2.m1 % t1.m1 == 0 and t2.m2 % t1.m2 == 0
