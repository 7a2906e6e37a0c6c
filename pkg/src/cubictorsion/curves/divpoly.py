"""Division polynomials of a Weierstrass curve.

The n-division polynomial psi_n vanishes on the nonzero n-torsion.  For
odd n it is a polynomial in x alone; for even n it carries one factor of
psi_2 = 2y + a1 x + a3, whose square is the x-polynomial
B(x) = 4x^3 + b2 x^2 + 2 b4 x + b6.  We store the x-part f_n throughout
(psi_n = f_n for odd n, psi_n = psi_2 * f_n for even n) and replace
psi_2^2 by B(x) wherever it appears in the recurrences, so everything
stays in Q[x].

The exception is n = 2, where the x-part would be the constant 1; the
2-division polynomial returned is instead the monic cubic B(x)/4 whose
roots are the 2-torsion x-coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cubictorsion.exact import PolyQ

from .weierstrass import WeierstrassCurve

DIVPOLY_MAX_N = 64


@dataclass(frozen=True)
class DivisionPoly:
    curve: WeierstrassCurve
    n: int
    poly: PolyQ
    primitive: bool


def _mobius(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


class _Psi:
    """Memoized x-parts f_n of the division polynomials of one curve."""

    def __init__(self, E: WeierstrassCurve):
        b2, b4, b6, b8 = E.b_invariants()
        self.B = PolyQ([b6, 2 * b4, b2, 4])
        self._f = {
            0: PolyQ(),
            1: PolyQ([1]),
            2: PolyQ([1]),
            3: PolyQ([b8, 3 * b6, 3 * b4, b2, 3]),
            4: PolyQ([b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8,
                      10 * b6, 5 * b4, b2, 2]),
        }

    def f(self, n: int) -> PolyQ:
        got = self._f.get(n)
        if got is not None:
            return got
        m, r = divmod(n, 2)
        if r:
            # psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            a = self.f(m + 2) * self.f(m) ** 3
            b = self.f(m - 1) * self.f(m + 1) ** 3
            out = (self.B ** 2 * a - b) if m % 2 == 0 else (a - self.B ** 2 * b)
        else:
            # psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / psi_2
            out = self.f(m) * (self.f(m + 2) * self.f(m - 1) ** 2
                               - self.f(m - 2) * self.f(m + 1) ** 2)
        self._f[n] = out
        return out


def _psi_cache(E: WeierstrassCurve, cache={}) -> _Psi:
    got = cache.get(E)
    if got is None:
        if len(cache) > 64:
            cache.clear()
        got = cache[E] = _Psi(E)
    return got


def _check_n(n: int):
    if not 2 <= n <= DIVPOLY_MAX_N:
        raise ValueError(f"n must be between 2 and {DIVPOLY_MAX_N}")


def two_torsion_cubic(E: WeierstrassCurve) -> PolyQ:
    """Monic cubic with the 2-torsion x-coordinates as roots."""
    b2, b4, b6, _ = E.b_invariants()
    return PolyQ([b6 / 4, b4 / 2, b2 / 4, 1])


def division_poly(E: WeierstrassCurve, n: int) -> DivisionPoly:
    """The x-part of psi_n (the monic 2-torsion cubic when n = 2).

    Roots: x-coordinates of affine n-torsion points outside E[2] for even
    n > 2, of all nonzero n-torsion for odd n, of E[2] for n = 2.
    """
    _check_n(n)
    if n == 2:
        return DivisionPoly(E, 2, two_torsion_cubic(E), False)
    return DivisionPoly(E, n, _psi_cache(E).f(n), False)


def _full_torsion_poly(E: WeierstrassCurve, n: int) -> PolyQ:
    """Polynomial whose simple roots are all x-coordinates of E[n] - O."""
    if n == 1:
        return PolyQ([1])
    f = _psi_cache(E).f(n)
    if n % 2 == 0:
        f = two_torsion_cubic(E) * f
    return f


def primitive_division_poly(E: WeierstrassCurve, n: int) -> DivisionPoly:
    """h_n: roots are exactly the x-coordinates of points of exact order n.

    Obtained by Mobius inversion over the divisor lattice; the division
    must be exact, anything else signals a recurrence bug.
    """
    _check_n(n)
    num = PolyQ([1])
    den = PolyQ([1])
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(n // d)
        if mu == 1:
            num = num * _full_torsion_poly(E, d)
        elif mu == -1:
            den = den * _full_torsion_poly(E, d)
    q, r = _polydivmod(num, den)
    if not r.is_zero():
        raise ArithmeticError("internal error: inexact primitive part")
    return DivisionPoly(E, n, q, True)


def _polydivmod(a: PolyQ, b: PolyQ):
    if b.is_zero():
        raise ZeroDivisionError("division polynomial denominator is zero")
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    lead = bc[-1]
    q = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c:
            q[i - db] = c
            for k in range(db + 1):
                rem[i - db + k] -= c * bc[k]
        rem[i] = Fraction(0)
    return PolyQ(q), PolyQ(rem)
