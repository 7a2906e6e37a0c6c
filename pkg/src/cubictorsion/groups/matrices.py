"""2x2 matrices over Z/nZ as plain tuples (a, b, c, d) = [[a, b], [c, d]].

Tuple entries are always normalized to 0..n-1.  The flat-tuple form keeps
group elements hashable and cheap; everything here is modulus-explicit.
"""

from __future__ import annotations

from math import gcd

Mat = tuple[int, int, int, int]

IDENTITY: Mat = (1, 0, 0, 1)


def mat(a, b, c, d, n) -> Mat:
    return (a % n, b % n, c % n, d % n)


def neg_identity(n) -> Mat:
    return ((-1) % n, 0, 0, (-1) % n)


def mmul(x: Mat, y: Mat, n: int) -> Mat:
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (
        (a1 * a2 + b1 * c2) % n,
        (a1 * b2 + b1 * d2) % n,
        (c1 * a2 + d1 * c2) % n,
        (c1 * b2 + d1 * d2) % n,
    )


def mdet(x: Mat, n: int) -> int:
    return (x[0] * x[3] - x[1] * x[2]) % n


def mtrace(x: Mat, n: int) -> int:
    return (x[0] + x[3]) % n


def is_invertible(x: Mat, n: int) -> bool:
    return gcd(mdet(x, n), n) == 1


def minv(x: Mat, n: int) -> Mat:
    d = mdet(x, n)
    if gcd(d, n) != 1:
        raise ValueError("not a unit determinant")
    di = pow(d, -1, n)
    return ((x[3] * di) % n, (-x[1] * di) % n, (-x[2] * di) % n, (x[0] * di) % n)


def mpow(x: Mat, k: int, n: int) -> Mat:
    if k < 0:
        x, k = minv(x, n), -k
    out = IDENTITY
    while k:
        if k & 1:
            out = mmul(out, x, n)
        x = mmul(x, x, n)
        k >>= 1
    return out


def morder(x: Mat, n: int) -> int:
    cur = x
    k = 1
    while cur != IDENTITY:
        cur = mmul(cur, x, n)
        k += 1
        if k > n * n * n * n:
            raise ValueError("not a unit determinant")
    return k


def mreduce(x: Mat, m: int) -> Mat:
    return (x[0] % m, x[1] % m, x[2] % m, x[3] % m)


def mconj(g: Mat, x: Mat, n: int) -> Mat:
    """g x g^{-1}."""
    return mmul(mmul(g, x, n), minv(g, n), n)


def parse_mat(text: str, n: int) -> Mat:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected 4 comma-separated entries, got {text!r}")
    return mat(*(int(p) for p in parts), n)


def parse_gens(text: str, n: int) -> list[Mat]:
    """Parse the wire form "a,b,c,d;a,b,c,d;..." into matrix tuples."""
    chunks = [c for c in text.split(";") if c.strip()]
    if not chunks:
        raise ValueError("empty generator list")
    return [parse_mat(c, n) for c in chunks]


def gens_to_wire(gens) -> str:
    return ";".join(",".join(str(e) for e in g) for g in gens)
