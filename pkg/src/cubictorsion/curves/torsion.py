"""Torsion of E(Q): reduction bound, then division-polynomial search.

The group order divides #E(F_p) for every odd prime p of good reduction
(the model is smooth over Z_p there, and reduction is injective on
torsion for p >= 3).  A gcd over several primes bounds the order; each
surviving prime-power order is then confirmed or refuted by looking for
a rational point of that exact order via the primitive division
polynomial.  Orders beyond the rational-torsion maxima are not searched:
no rational point can have them, whatever the gcd bound suggests.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from cubictorsion.exact import rational_roots
from cubictorsion.shapes import TorsionShape

from .divpoly import primitive_division_poly, two_torsion_cubic
from .local import ap, good_primes, order_ext
from .weierstrass import WeierstrassCurve

REDUCTION_PRIMES = 5

# largest prime powers that can divide the order of a rational point
_PRIME_POWER_LADDER = {2: (2, 4, 8), 3: (3, 9), 5: (5,), 7: (7,)}

_MAZUR = frozenset(
    [(1, m) for m in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)]
    + [(2, m) for m in (2, 4, 6, 8)]
)


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def has_point_of_order(E: WeierstrassCurve, n: int) -> bool:
    """Whether E(Q) contains a point of exact order n, for 2 <= n <= 12."""
    h = primitive_division_poly(E, n).poly
    for x in rational_roots(h):
        xq = Fraction(x)
        # y is rational iff the completed square B(x) is a rational square
        if _is_rational_square(E.two_torsion_value(xq)):
            return True
    return False


def torsion_over_Q(E: WeierstrassCurve) -> TorsionShape:
    """The torsion subgroup of E(Q) as a shape (m1, m2) with m1 | m2."""
    bound = 0
    for p in good_primes(E, REDUCTION_PRIMES, start=3):
        local = ap(E, p)
        bound = gcd(bound, order_ext(local.ap, p, 1))
        if bound == 1:
            break

    m2 = 1
    for ell, ladder in _PRIME_POWER_LADDER.items():
        if bound % ell:
            continue
        best = 1
        for q in ladder:
            if bound % q or not has_point_of_order(E, q):
                break
            best = q
        m2 *= best

    # m1 can only be 1 or 2 (roots of unity in Q); it is 2 exactly when
    # all three 2-torsion x-coordinates are rational
    m1 = 1
    if m2 % 2 == 0 and len(rational_roots(two_torsion_cubic(E))) == 3:
        m1 = 2

    if (m1, m2) not in _MAZUR:
        raise ArithmeticError(f"internal error: ({m1}, {m2}) is not a "
                              "rational torsion group")
    return TorsionShape(m1, m2)
