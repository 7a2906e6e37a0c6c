"""Factorization of polynomials over Q (Zassenhaus) and mod-p degree data.

factor_over_Q: Yun squarefree split, then per squarefree part a classic
Zassenhaus round: factor mod a good small prime, quadratic Hensel lift past
the Mignotte bound, recombine modular factors by bounded subset search with
exact division checks. Degree is capped at 64 by contract, which keeps the
subset search harmless for the inputs this library meets.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import isqrt

from .polyfp import (
    fp_ddf,
    fp_derivative,
    fp_divmod,
    fp_factor_squarefree,
    fp_from_zx,
    fp_gcd,
    fp_monic,
    fp_mul,
    fp_scale,
    fp_sqf_list,
    fp_sub,
    fp_trim,
)
from .polyq import PolyQ
from .rational import next_prime
from .zx import (
    zx_derivative,
    zx_divexact,
    zx_mul,
    zx_primitive,
    zx_trim,
    zx_yun,
)

DEGREE_LIMIT = 64


def ddf_degrees(poly, p):
    """Multiset [(degree, count)] of irreducible factors of the squarefree
    part of poly mod p (p prime), sorted by degree."""
    if not isinstance(poly, PolyQ):
        poly = PolyQ(poly)
    if poly.is_zero():
        raise ValueError("identically zero")
    _, zs = poly.primitive_integer()
    fbar = fp_from_zx(zs, p)
    if not fbar:
        raise ValueError("polynomial vanishes mod p")
    if len(fbar) == 1:
        return []
    sf = [1]
    for g, _ in fp_sqf_list(fbar, p):
        sf = fp_mul(sf, g, p)
    return sorted((d, (len(g) - 1) // d) for d, g in fp_ddf(sf, p))


# ---------------------------------------------------------------------------
# Hensel machinery


def _zipl(a, b):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)


def _zipl3(a, b, c):
    n = max(len(a), len(b), len(c))
    for i in range(n):
        yield (
            a[i] if i < len(a) else 0,
            b[i] if i < len(b) else 0,
            c[i] if i < len(c) else 0,
        )


def _trunc(c, m):
    return zx_trim([x % m for x in c])


def _symmetric(c, m):
    out = []
    for x in c:
        x %= m
        if 2 * x > m:
            x -= m
        out.append(x)
    return zx_trim(out)


def _divmod_monic(a, b, m):
    """divmod of integer polys mod m, b monic."""
    a = [x % m for x in a]
    if len(a) < len(b):
        return [], zx_trim(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        t = a[k + len(b) - 1] % m
        q[k] = t
        if t:
            for j, y in enumerate(b):
                a[k + j] = (a[k + j] - t * y) % m
    return zx_trim(q), zx_trim(a)


def _mul_m(a, b, m):
    return _trunc(zx_mul(a, b), m)


def _fp_gcdex(a, b, p):
    """(s, t, g) with s*a + t*b = g = monic gcd(a, b) over F_p."""
    r0, r1 = fp_trim([x % p for x in a]), fp_trim([x % p for x in b])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, fp_sub(s0, fp_mul(q, s1, p), p)
        t0, t1 = t1, fp_sub(t0, fp_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return fp_scale(s0, inv, p), fp_scale(t0, inv, p), fp_scale(r0, inv, p)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift step: valid mod m in, valid mod m*m out.

    Preconditions (von zur Gathen-Gerhard 15.10): f = g*h (mod m),
    s*g + t*h = 1 (mod m), h monic, deg f = deg g + deg h,
    deg s < deg h, deg t < deg g.
    """
    mm = m * m
    e = _trunc([x - y for x, y in _zipl(f, zx_mul(g, h))], mm)
    q, r = _divmod_monic(_mul_m(s, e, mm), h, mm)
    g1 = _trunc([x + y + z for x, y, z in _zipl3(g, zx_mul(t, e), zx_mul(q, g))], mm)
    h1 = _trunc([x + y for x, y in _zipl(h, r)], mm)
    b = _trunc([x + y - z for x, y, z in _zipl3(zx_mul(s, g1), zx_mul(t, h1), [1])], mm)
    c, d = _divmod_monic(_mul_m(s, b, mm), h1, mm)
    s1 = _trunc([x - y for x, y in _zipl(s, d)], mm)
    t1 = _trunc([x - y - z for x, y, z in _zipl3(t, zx_mul(t, b), zx_mul(c, g1))], mm)
    return g1, h1, s1, t1


def _hensel_lift_list(f, facs, p, l):
    """Lift monic mod-p factors of f (f = lc * prod facs mod p) to mod p^l."""
    pl = p**l
    if len(facs) == 1:
        inv = pow(f[-1] % pl, -1, pl)
        return [_trunc([x * inv for x in f], pl)]
    k = len(facs) // 2
    b = f[-1]
    g0 = [b % p]
    for fac in facs[:k]:
        g0 = fp_mul(g0, fac, p)
    h0 = [1]
    for fac in facs[k:]:
        h0 = fp_mul(h0, fac, p)
    s, t, one = _fp_gcdex(g0, h0, p)
    assert one == [1], "modular factors are not coprime"
    if len(s) >= len(h0):
        q, s = fp_divmod(s, h0, p)
        t = fp_trim(fp_sub(t, fp_mul(q, g0, p), p))
    g, h = list(g0), list(h0)
    m = p
    while m < pl:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    return _hensel_lift_list(_trunc(g, pl), facs[:k], p, l) + _hensel_lift_list(
        _trunc(h, pl), facs[k:], p, l
    )


# ---------------------------------------------------------------------------
# Zassenhaus


def _mignotte_bound(zs):
    n = len(zs) - 1
    a = max(abs(x) for x in zs)
    return (isqrt(n + 1) + 1) * (1 << n) * a * abs(zs[-1])


def _pick_factor_prime(zs, rng):
    """Factor mod a few usable primes, keep the one with fewest factors."""
    dzs = zx_derivative(zs)
    best = None
    found = 0
    p = 101
    while found < 3:
        p = next_prime(p)
        if zs[-1] % p == 0:
            continue
        fbar = fp_monic(fp_from_zx(zs, p), p)
        if len(fp_gcd(fbar, fp_derivative(fbar, p), p)) != 1:
            continue
        facs = fp_factor_squarefree(fbar, p, rng)
        found += 1
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        if len(facs) == 1:
            break
    return best


def _zassenhaus(zs, rng):
    """Irreducible primitive factors of a primitive squarefree poly, lc > 0."""
    if len(zs) == 2:
        return [zs]
    p, facs = _pick_factor_prime(zs, rng)
    if len(facs) == 1:
        return [zs]
    bound = _mignotte_bound(zs)
    l = 1
    pl = p
    while pl <= 2 * bound:
        pl *= p
        l += 1
    lifted = _hensel_lift_list(zs, facs, p, l)

    result = []
    rest = list(range(len(lifted)))
    f = list(zs)
    s = 1
    while 2 * s <= len(rest):
        extracted = False
        b = f[-1]
        for sub in combinations(rest, s):
            # cheap prefilter: the candidate's constant term must divide b*f(0)
            tc = b % pl
            for i in sub:
                tc = tc * lifted[i][0] % pl
            if 2 * tc > pl:
                tc -= pl
            if f[0] != 0 and tc != 0 and (b * f[0]) % tc != 0:
                continue
            g = [b]
            for i in sub:
                g = _mul_m(g, lifted[i], pl)
            g = _symmetric(g, pl)
            _, g = zx_primitive(g)
            if len(g) <= 1:
                continue
            try:
                q = zx_divexact(f, g)
            except ArithmeticError:
                continue
            result.append(g)
            f = q
            rest = [i for i in rest if i not in sub]
            extracted = True
            break
        if not extracted:
            s += 1
    if len(f) > 1:
        result.append(zx_primitive(f)[1])
    return result


def factor_over_Q(poly):
    """Irreducible factors over Q as primitive integer PolyQ with lc > 0,
    repeated per multiplicity, content dropped. Degree capped at 64."""
    if not isinstance(poly, PolyQ):
        poly = PolyQ(poly)
    if poly.is_zero():
        raise ValueError("identically zero")
    if poly.degree > DEGREE_LIMIT:
        raise ValueError("degree limit")
    if poly.degree == 0:
        return []
    _, zs = poly.primitive_integer()
    rng = random.Random(0xFAC70B)
    out = []
    for part, mult in zx_yun(zs):
        for irr in _zassenhaus(part, rng):
            out.extend([irr] * mult)
    out.sort(key=lambda c: (len(c), list(reversed(c))))
    return [PolyQ(c) for c in out]
