"""Reduction data at small primes: traces by naive counting.

Good reduction is judged on the given model: every coefficient must be
p-integral and the discriminant nonzero mod p.  No minimalization is
attempted, so a non-minimal model can be flagged bad at a prime where
the curve itself has good reduction; callers sample primes and skip.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .weierstrass import WeierstrassCurve, invariants

AP_MAX_P = 10 ** 4
ORDER_EXT_MAX_K = 12


@dataclass(frozen=True)
class LocalData:
    p: int
    ap: int | None
    good_reduction: bool


def has_good_reduction(E: WeierstrassCurve, p: int) -> bool:
    for a in (E.a1, E.a2, E.a3, E.a4, E.a6):
        if a.denominator % p == 0:
            return False
    disc = invariants(E).disc
    if disc.denominator % p == 0:
        return False
    return disc.numerator % p != 0


def _coeffs_mod(E: WeierstrassCurve, p: int):
    out = []
    for a in (E.a1, E.a2, E.a3, E.a4, E.a6):
        out.append(a.numerator * pow(a.denominator, -1, p) % p)
    return out


def ap(E: WeierstrassCurve, p: int) -> LocalData:
    """Frobenius trace at p by direct point counting, p <= 10^4."""
    if p > AP_MAX_P:
        raise ValueError(f"p exceeds {AP_MAX_P}")
    if not has_good_reduction(E, p):
        return LocalData(p, None, False)
    a1, a2, a3, a4, a6 = _coeffs_mod(E, p)
    if p == 2:
        count = 1
        for x in (0, 1):
            for y in (0, 1):
                lhs = (y * y + a1 * x * y + a3 * y) % 2
                rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2
                if lhs == rhs:
                    count += 1
        trace = p + 1 - count
    else:
        # complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2b4 x + b6,
        # so each x contributes 1 + legendre(B(x)) points
        b2 = (a1 * a1 + 4 * a2) % p
        b4 = (2 * a4 + a1 * a3) % p
        b6 = (a3 * a3 + 4 * a6) % p
        is_square = bytearray(p)
        for r in range((p + 1) // 2):
            is_square[r * r % p] = 1
        total = 0
        for x in range(p):
            v = (((4 * x + b2) * x + 2 * b4) * x + b6) % p
            if v == 0:
                continue
            total += 1 if is_square[v] else -1
        trace = -total
    assert trace * trace <= 4 * p
    return LocalData(p, trace, True)


def order_ext(a_p: int, p: int, k: int) -> int:
    """#E(F_{p^k}) from the trace at p, via s_k = a_p s_{k-1} - p s_{k-2}."""
    if not 1 <= k <= ORDER_EXT_MAX_K:
        raise ValueError(f"k must be between 1 and {ORDER_EXT_MAX_K}")
    if a_p * a_p > 4 * p:
        raise ValueError("trace out of Hasse range")
    s_prev, s = 2, a_p
    for _ in range(k - 1):
        s_prev, s = s, a_p * s - p * s_prev
    return p ** k + 1 - s


def good_primes(E: WeierstrassCurve, count: int, start: int = 3):
    """The first `count` primes >= start where the model reduces well."""
    out = []
    p = max(start, 2)
    while len(out) < count:
        if _is_prime_small(p) and has_good_reduction(E, p):
            out.append(p)
        p += 1
        if p > AP_MAX_P:
            raise ValueError("ran out of small good primes")
    return out


def _is_prime_small(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True
