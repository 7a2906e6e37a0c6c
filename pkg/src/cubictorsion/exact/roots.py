"""Complete rational root finding for integer/rational polynomials.

Strategy: reduce to a primitive squarefree integer polynomial, find its
roots modulo one large prime (around 2^61), Hensel-lift each simple root
past 2*N*D where N, D bound root numerators/denominators via the rational
root theorem, then recover candidates by rational reconstruction and keep
only the ones that verify exactly. Every returned root is certified by an
exact homogeneous evaluation; completeness comes from the lifting bound.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

from .polyfp import fp_from_zx, fp_gcd, fp_roots_squarefree
from .polyq import PolyQ
from .rational import BigRational, next_prime
from .zx import zx_derivative, zx_divexact, zx_eval_hom, zx_gcd, zx_primitive

_SCREEN_PRIMES = (211, 223, 227)


def might_have_rational_roots(zs, primes=_SCREEN_PRIMES) -> bool:
    """Cheap one-way screen on a primitive integer poly with c0 != 0.

    False is a proof that no rational roots exist; True says nothing. Uses
    that a/b in lowest terms has b | lc, so for p not dividing lc the root
    reduces to a root of f mod p.
    """
    if not zs:
        return True
    if len(zs) == 1:
        return False
    for p in primes:
        if zs[-1] % p == 0:
            continue
        cs = [c % p for c in zs]
        found = False
        for x in range(p):
            acc = 0
            for c in reversed(cs):
                acc = (acc * x + c) % p
            if acc == 0:
                found = True
                break
        if not found:
            return False
    return True


def _squarefree_integer(zs):
    """Squarefree part of a primitive integer poly, cheap checks first."""
    if len(zs) <= 2:
        return zs
    dzs = zx_derivative(zs)
    for p in (1000003, 1000033, 1000037):
        if zs[-1] % p == 0:
            continue
        g = fp_gcd(fp_from_zx(zs, p), fp_from_zx(dzs, p), p)
        if len(g) == 1:
            return zs
        break
    g = zx_gcd(zs, dzs)
    if len(g) == 1:
        return zs
    return zx_primitive(zx_divexact(zs, g))[1]


def _pick_prime(zs):
    """A prime ~2^61 not dividing lc with zs squarefree mod p."""
    dzs = zx_derivative(zs)
    base = 2**61
    for k in range(40):
        p = next_prime(base + k * 1000003)
        if zs[-1] % p == 0:
            continue
        g = fp_gcd(fp_from_zx(zs, p), fp_from_zx(dzs, p), p)
        if len(g) == 1:
            return p
    raise RuntimeError("could not find a good prime for root finding")


def _lift_root(zs, r, p, target):
    """Newton-lift a simple root r of zs mod p to a root mod p^k >= target."""
    q = p
    while q < target:
        q2 = q * q
        fr = 0
        for c in reversed(zs):
            fr = (fr * r + c) % q2
        dr = 0
        dzs = zx_derivative(zs)
        for c in reversed(dzs):
            dr = (dr * r + c) % q2
        r = (r - fr * pow(dr, -1, q2)) % q2
        q = q2
    return r, q


def _rational_reconstruct(r, m, num_bound, den_bound):
    """The unique a/b = r mod m with |a| <= N, 0 < b <= D, if any."""
    r0, t0 = m, 0
    r1, t1 = r % m, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    a, b = r1, t1
    if b < 0:
        a, b = -a, -b
    if b == 0 or b > den_bound or gcd(a, b) != 1:
        return None
    return a, b


def _quadratic_roots(zs):
    c0, c1, c2 = zs[0], zs[1], zs[2]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    s = isqrt(disc)
    if s * s != disc:
        return []
    roots = set()
    for sgn in (1, -1):
        roots.add(Fraction(-c1 + sgn * s, 2 * c2))
    return sorted(roots)


def rational_roots(poly):
    """All distinct rational roots of poly, sorted ascending.

    Raises ValueError on the zero polynomial.
    """
    if not isinstance(poly, PolyQ):
        poly = PolyQ(poly)
    if poly.is_zero():
        raise ValueError("identically zero")
    _, zs = poly.primitive_integer()
    roots: list[Fraction] = []
    v = 0
    while zs and zs[0] == 0:
        zs = zs[1:]
        v += 1
    if v:
        roots.append(Fraction(0))
    if len(zs) <= 1:
        return [BigRational(r) for r in sorted(roots)]
    if len(zs) == 2:
        roots.append(Fraction(-zs[0], zs[1]))
        return [BigRational(r) for r in sorted(roots)]
    if len(zs) == 3:
        roots.extend(_quadratic_roots(zs))
        return [BigRational(r) for r in sorted(roots)]

    zs = _squarefree_integer(zs)
    if not might_have_rational_roots(zs):
        return [BigRational(r) for r in sorted(roots)]

    num_bound = abs(zs[0])
    den_bound = abs(zs[-1])
    p = _pick_prime(zs)
    fbar = fp_from_zx(zs, p)
    rng = random.Random(0x5EED ^ (len(zs) * 1000003) ^ (zs[0] % 997))
    modular = fp_roots_squarefree(fbar, p, rng)
    if modular:
        target = 2 * num_bound * den_bound + 1
        for r in modular:
            lifted, m = _lift_root(zs, r, p, target)
            cand = _rational_reconstruct(lifted, m, num_bound, den_bound)
            if cand is None:
                continue
            a, b = cand
            if zx_eval_hom(zs, a, b) == 0:
                roots.append(Fraction(a, b))
    return [BigRational(r) for r in sorted(set(roots))]
