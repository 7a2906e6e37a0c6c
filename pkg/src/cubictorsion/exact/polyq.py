"""Polynomials over Q, lowest degree first.

PolyQ is the public exchange type: immutable, normalized (no trailing zero
coefficients), wire format a list of "num/den" strings with index = degree.
Heavy algorithms clear denominators and run on the integer primitive part
(see zx.py); PolyQ only carries coefficients around.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .rational import BigRational
from .zx import zx_primitive, zx_trim


class PolyQ:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "PolyQ(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "PolyQ(" + " + ".join(terms) + ")"

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return PolyQ(out)

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, e: int):
        out = PolyQ([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "PolyQ":
        return PolyQ([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def monic(self) -> "PolyQ":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return PolyQ([c / lead for c in self.coeffs])

    def integer_coeffs(self):
        """Clear denominators: returns (scale, list[int]) with scale * self integral."""
        if not self.coeffs:
            return 1, []
        m = lcm(*(c.denominator for c in self.coeffs))
        return m, zx_trim([int(c * m) for c in self.coeffs])

    def primitive_integer(self):
        """Primitive integer form with positive lc; returns (content, list[int]).

        content is the Fraction with self = content * primitive.
        """
        if not self.coeffs:
            return Fraction(0), []
        m, zs = self.integer_coeffs()
        cont, prim = zx_primitive(zs)
        return Fraction(cont, m), prim

    @classmethod
    def from_int_coeffs(cls, zs):
        return cls(zs)

    def to_wire(self):
        return [BigRational(c).to_wire() for c in self.coeffs]

    @classmethod
    def from_wire(cls, items):
        return cls([BigRational.from_wire(s) for s in items])


def _coerce(x) -> PolyQ:
    if isinstance(x, PolyQ):
        return x
    return PolyQ([x])


X = PolyQ([0, 1])
