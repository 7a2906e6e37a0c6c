"""Exact rationals plus the integer square-class helpers built on them.

BigRational is a Fraction that knows the "num/den" wire format used by the
JSON layer. Fractions already hold gcd(num, den) = 1 with den > 0, which is
exactly the normal form the wire format requires.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt


class BigRational(Fraction):
    __slots__ = ()

    @classmethod
    def from_wire(cls, s):
        """Parse "num/den" (a bare "num" is accepted and means den = 1)."""
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return cls(int(num), int(den))
        return cls(int(s))

    def to_wire(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def rat_to_wire(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rat_from_wire(s) -> BigRational:
    return BigRational.from_wire(s)


_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 via the fixed base set."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    n += 1
    if n <= 2:
        return 2
    if n % 2 == 0:
        n += 1
    while not is_probable_prime(n):
        n += 2
    return n


def _pollard_brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {p: e}; n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    rng = random.Random(n & 0xFFFFFFFFFFFFFFFF)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        s = isqrt(m)
        if s * s == m:
            stack.extend([s, s])
            continue
        d = _pollard_brent(m, rng)
        stack.extend([d, m // d])
    return out


def squarefree_part(q) -> int:
    """The unique squarefree integer d with q = d * r^2 for rational r."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("squarefree part of zero is undefined")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    d = 1
    for p, e in factorint(n).items():
        if e % 2:
            d *= p
    return sign * d


def fourth_power_free(q) -> int:
    """The unique fourth-power-free integer d0 with q = d0 * r^4, rational r.

    Exists only for q whose class mod fourth powers contains an integer;
    q * den^4 = num * den^3 always works, so every rational has one.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("fourth-power-free part of zero is undefined")
    n = q.numerator * q.denominator**3
    sign = -1 if n < 0 else 1
    d = 1
    for p, e in factorint(n).items():
        d *= p ** (e % 4)
    return sign * d
