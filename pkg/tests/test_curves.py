"""Tests for curve invariants, division polynomials, point counting,
and rational torsion."""

import random
from fractions import Fraction
from math import gcd, isqrt

import pytest

from cubictorsion.curves import (
    WeierstrassCurve,
    ap,
    curve_from_j,
    division_poly,
    good_primes,
    has_good_reduction,
    invariants,
    order_ext,
    primitive_division_poly,
    torsion_over_Q,
    two_torsion_cubic,
)
from cubictorsion.exact import squarefree_part
from cubictorsion.shapes import TorsionShape


# --- independent group-law oracle over F_p -------------------------------
# affine general-Weierstrass addition; points are (x, y) tuples, None = O

def _neg(P, a, p):
    a1, _, a3, _, _ = a
    x, y = P
    return (x, (-y - a1 * x - a3) % p)


def _add(P, Q, a, p):
    if P is None:
        return Q
    if Q is None:
        return P
    a1, a2, a3, a4, a6 = a
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and (y1 + y2 + a1 * x2 + a3) % p == 0:
        return None
    if P == Q:
        num = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) % p
        den = (2 * y1 + a1 * x1 + a3) % p
    else:
        num = (y2 - y1) % p
        den = (x2 - x1) % p
    lam = num * pow(den, -1, p) % p
    nu = (y1 - lam * x1) % p
    x3 = (lam * lam + a1 * lam - a2 - x1 - x2) % p
    y3 = (-(lam + a1) * x3 - nu - a3) % p
    return (x3, y3)


def _curve_points(a, p):
    a1, a2, a3, a4, a6 = a
    pts = [None]
    for x in range(p):
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y) % p == (
                    (x * x * x + a2 * x * x + a4 * x + a6) % p):
                pts.append((x, y))
    return pts


def _point_order(P, a, p, group_order):
    for d in sorted(_divisors(group_order)):
        Q = None
        for _ in range(d):
            Q = _add(Q, P, a, p)
        if Q is None:
            return d
    raise AssertionError("order not found")


def _divisors(n):
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
    return out


# --- invariants -----------------------------------------------------------

def test_invariant_examples():
    assert invariants(WeierstrassCurve(0, 0, 0, 1, 0)).disc == -64
    assert invariants(WeierstrassCurve(0, 0, 0, 1, 0)).j == 1728
    assert invariants(WeierstrassCurve(0, 0, 0, 0, 1)).disc == -432
    assert invariants(WeierstrassCurve(0, 0, 0, 0, 1)).j == 0
    assert invariants(WeierstrassCurve(0, 0, 1, 0, 0)).disc == -27
    assert invariants(WeierstrassCurve(0, 0, 1, 0, 0)).j == 0


def test_singular_rejected():
    with pytest.raises(ValueError, match="singular"):
        invariants(WeierstrassCurve(0, 0, 0, 0, 0))
    with pytest.raises(ValueError, match="singular"):
        invariants(WeierstrassCurve(0, 0, 0, -3, 2))


def test_c_invariant_identity_random():
    rng = random.Random(0xAB12)
    for _ in range(100):
        E = WeierstrassCurve(*(Fraction(rng.randint(-9, 9),
                                        rng.randint(1, 4))
                               for _ in range(5)))
        try:
            inv = invariants(E)
        except ValueError:
            continue
        assert inv.c4 ** 3 - inv.c6 ** 2 == 1728 * inv.disc


def test_curve_from_j():
    C = curve_from_j(1)
    assert (C.a4, C.a6) == (5181, 5965058)
    assert curve_from_j(0) == WeierstrassCurve(0, 0, 0, 0, 1)
    assert curve_from_j(1728) == WeierstrassCurve(0, 0, 0, 1, 0)
    rng = random.Random(0xAB34)
    for _ in range(100):
        j = Fraction(rng.randint(-10 ** 9, 10 ** 9), rng.randint(1, 10 ** 4))
        assert invariants(curve_from_j(j)).j == j


def test_square_class_law():
    # disc and j - 1728 agree up to squares for curves with c6 != 0
    rng = random.Random(0xAB56)
    seen = 0
    while seen < 50:
        j = Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 100))
        if j in (0, 1728):
            continue
        seen += 1
        inv = invariants(curve_from_j(j))
        assert squarefree_part(inv.disc) == squarefree_part(j - 1728)


def test_wire_roundtrip():
    E = WeierstrassCurve(1, Fraction(-1, 2), 0, 4, Fraction(7, 3))
    assert WeierstrassCurve.from_wire(E.to_wire()) == E
    with pytest.raises(ValueError):
        WeierstrassCurve.from_wire(["1", "2", "3"])


# --- division polynomials --------------------------------------------------

def test_division_poly_examples():
    E = WeierstrassCurve(0, 0, 0, 1, 0)
    assert division_poly(E, 3).poly.coeffs == (-1, 0, 6, 0, 3)
    E0 = WeierstrassCurve(0, 0, 0, 0, 1)
    assert division_poly(E0, 2).poly.coeffs == (1, 0, 0, 1)
    assert primitive_division_poly(E, 4).poly.degree == 6
    assert primitive_division_poly(E0, 4).poly.degree == 6


def test_division_poly_degrees():
    E = WeierstrassCurve(1, 2, 3, 4, 5)
    for n in range(3, 16):
        f = division_poly(E, n).poly
        assert f.degree == ((n * n - 1) // 2 if n % 2 else (n * n - 4) // 2)
    # primitive degree = half the number of points of exact order n
    for n in range(3, 13):
        h = primitive_division_poly(E, n).poly
        assert h.degree == _exact_order_points(n, n) // 2


def _exact_order_points(n, d):
    # points of exact order d in Z/n x Z/n for d | n
    total = sum(1 for i in range(d * d) if
                gcd(d, gcd(i % d, i // d)) == 1)
    return total


def test_division_poly_bounds():
    E = WeierstrassCurve(0, 0, 0, 1, 0)
    with pytest.raises(ValueError):
        division_poly(E, 1)
    with pytest.raises(ValueError):
        division_poly(E, 65)


def test_division_point_agreement():
    # roots of h_n mod p are exactly the x-coordinates of order-n points
    rng = random.Random(0xD1B5)
    tested = 0
    while tested < 20:
        p = rng.choice([5, 7, 11, 13, 17, 19, 23])
        coeffs = tuple(rng.randrange(p) for _ in range(5))
        E = WeierstrassCurve(*coeffs)
        if not has_good_reduction(E, p):
            continue
        tested += 1
        pts = _curve_points(coeffs, p)
        N = len(pts)
        orders = {P: _point_order(P, coeffs, p, N) for P in pts if P}
        for n in range(2, 13):
            if (2 * n) % p == 0:
                continue
            h = primitive_division_poly(E, n).poly
            _, zs = h.primitive_integer()
            root_set = {x % p for x in range(p)
                        if _eval_mod(zs, x, p) == 0}
            # x(P) is a root of h_n mod p exactly when P has exact order
            # n: roots correspond to geometric order-n points, and x(P)
            # matching one of them forces P = +-that point
            for P, o in orders.items():
                assert (P[0] in root_set) == (o == n), (coeffs, p, n, P)


def _eval_mod(zs, x, p):
    acc = 0
    for c in reversed(zs):
        acc = (acc * x + c) % p
    return acc


# --- point counting --------------------------------------------------------

def test_ap_examples():
    E0 = WeierstrassCurve(0, 0, 0, 0, 1)
    d = ap(E0, 5)
    assert d.good_reduction and d.ap == 0
    bad = ap(E0, 3)
    assert not bad.good_reduction and bad.ap is None
    with pytest.raises(ValueError):
        ap(E0, 10007)


def test_ap_against_enumeration():
    rng = random.Random(0xD1B6)
    for _ in range(25):
        p = rng.choice([3, 5, 7, 11, 13])
        coeffs = tuple(rng.randrange(p) for _ in range(5))
        E = WeierstrassCurve(*coeffs)
        if not has_good_reduction(E, p):
            continue
        count = len(_curve_points(coeffs, p))
        got = ap(E, p)
        assert got.ap == p + 1 - count
        assert got.ap * got.ap <= 4 * p


def test_ap_p2():
    E = WeierstrassCurve(0, 0, 1, 0, 0)
    d = ap(E, 2)
    assert d.good_reduction
    assert d.ap == 2 + 1 - len(_curve_points((0, 0, 1, 0, 0), 2))


def test_order_ext():
    assert order_ext(0, 5, 2) == 36
    assert order_ext(3, 7, 1) == 5
    for a in range(-4, 5):
        assert order_ext(a, 5, 1) == 6 - a
    # #E(F_{p^2}) = (p + 1 - a)(p + 1 + a) when s2 = a^2 - 2p
    for a in range(-4, 5):
        assert order_ext(a, 7, 2) == (8 - a) * (8 + a)
    with pytest.raises(ValueError):
        order_ext(0, 5, 13)
    with pytest.raises(ValueError):
        order_ext(9, 5, 2)


def test_order_ext_multiplicativity():
    # E(F_{p^k}) is a subgroup of E(F_{p^km})
    for a, p in ((1, 7), (-2, 11), (5, 13)):
        for k in (1, 2, 3):
            for m in (2, 3):
                if k * m <= 12:
                    assert order_ext(a, p, k * m) % order_ext(a, p, k) == 0


def test_good_primes():
    E0 = WeierstrassCurve(0, 0, 0, 0, 1)  # disc -432 = -2^4 3^3
    assert good_primes(E0, 4) == [5, 7, 11, 13]
    Eh = WeierstrassCurve(0, 0, 0, Fraction(1, 5), 0)
    assert 5 not in good_primes(Eh, 10)


# --- rational torsion ------------------------------------------------------

def test_torsion_auxiliary_curves():
    assert torsion_over_Q(WeierstrassCurve(0, -6, 0, 13, 0)) == TorsionShape(1, 2)
    assert torsion_over_Q(WeierstrassCurve(0, -22, 0, 125, 0)) == TorsionShape(1, 2)
    # (x+3)(x^2-3x+9) = x^3+27
    assert torsion_over_Q(WeierstrassCurve(0, 0, 0, 0, 27)) == TorsionShape(1, 2)
    assert torsion_over_Q(WeierstrassCurve(0, 0, 0, 0, 1)) == TorsionShape(1, 6)


def test_torsion_known_structures():
    cases = [
        ((0, -1, 1, -10, -20), (1, 5)),     # conductor 11 classic
        ((0, 0, 1, 0, 0), (1, 3)),          # y^2+y=x^3
        ((0, 0, 0, 4, 0), (1, 4)),          # y^2=x^3+4x
        ((0, 0, 0, -1, 0), (2, 2)),         # y^2=x(x-1)(x+1)
        ((0, 1, 0, -9, -9), (2, 2)),        # x^3+x^2-9x-9=(x+1)(x-3)(x+3)
        ((0, 0, 0, 0, 16), (1, 3)),         # sextic twist of x^3+1
        ((0, 0, 0, -43, 166), (1, 7)),      # y^2 = x^3-43x+166, (3,8) order 7
        ((3, 6, 6, 0, 0), (1, 9)),          # Tate normal form, (0,0) order 9
        ((0, 0, 0, 0, 2), (1, 1)),          # x^3+2: no rational torsion
    ]
    for coeffs, shape in cases:
        assert torsion_over_Q(WeierstrassCurve(*coeffs)) == TorsionShape(*shape), coeffs


def test_torsion_on_mazur_list():
    rng = random.Random(0xD1B7)
    mazur = {(1, m) for m in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)}
    mazur |= {(2, m) for m in (2, 4, 6, 8)}
    for _ in range(30):
        E = WeierstrassCurve(0, rng.randint(-6, 6), 0,
                             rng.randint(-8, 8), rng.randint(-8, 8))
        try:
            invariants(E)
        except ValueError:
            continue
        t = torsion_over_Q(E)
        assert (t.m1, t.m2) in mazur


def test_torsion_matches_oracle_over_Fp():
    # the rational torsion injects into E(F_p) for odd good p
    rng = random.Random(0xD1B8)
    for _ in range(15):
        E = WeierstrassCurve(0, rng.randint(-4, 4), 0,
                             rng.randint(-6, 6), rng.randint(-6, 6))
        try:
            invariants(E)
        except ValueError:
            continue
        t = torsion_over_Q(E)
        for p in good_primes(E, 3, start=5):
            assert order_ext(ap(E, p).ap, p, 1) % t.order == 0
