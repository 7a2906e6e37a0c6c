"""Dense integer polynomial helpers.

A polynomial is a list of ints, lowest degree first, with no trailing zeros
(the zero polynomial is the empty list). Everything here is exact; any
division that is supposed to be exact is checked and raises ArithmeticError
if it is not.
"""

from __future__ import annotations

from math import gcd


def zx_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def zx_deg(c):
    return len(c) - 1


def zx_add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] += x
    return zx_trim(out)


def zx_neg(a):
    return [-x for x in a]


def zx_sub(a, b):
    return zx_add(a, zx_neg(b))


def zx_scale(a, k):
    if k == 0:
        return []
    return [k * x for x in a]


def zx_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return zx_trim(out)


def zx_eval(c, x):
    acc = 0
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def zx_eval_hom(c, a, b):
    """sum_i c_i a^i b^(d-i) for d = deg(c); zero iff a/b is a root (b != 0)."""
    d = len(c) - 1
    acc = 0
    pa = 1
    pows_b = [1] * (d + 1)
    for i in range(1, d + 1):
        pows_b[i] = pows_b[i - 1] * b
    for i, coef in enumerate(c):
        if coef:
            acc += coef * pa * pows_b[d - i]
        pa *= a
    return acc


def zx_derivative(c):
    return zx_trim([i * c[i] for i in range(1, len(c))])


def zx_content(c):
    g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def zx_primitive(c):
    """Return (content, primitive) with positive leading coefficient.

    The content carries the sign, so content * primitive == c.
    """
    c = zx_trim(c)
    if not c:
        return 0, []
    g = zx_content(c)
    if c[-1] < 0:
        g = -g
    return g, [x // g for x in c]


def zx_divexact(a, b):
    """Exact division in Z[x]; raises ArithmeticError when not exact."""
    a = zx_trim(a)
    b = zx_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    if len(a) < len(b):
        raise ArithmeticError("inexact polynomial division")
    rem = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        num = rem[k + len(b) - 1]
        if num % lead != 0:
            raise ArithmeticError("inexact polynomial division")
        t = num // lead
        q[k] = t
        if t:
            for j, y in enumerate(b):
                rem[k + j] -= t * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return zx_trim(q)


def zx_pseudo_rem(a, b):
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a  reduced mod b."""
    a = zx_trim(a)
    b = zx_trim(b)
    if not b:
        raise ZeroDivisionError("pseudo remainder by zero")
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a
    lb = b[-1]
    e = da - db + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - len(b)
        r = [lb * x for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= lr * y
        r = zx_trim(r)
        e -= 1
    if e > 0 and r:
        s = lb**e
        r = [s * x for x in r]
    return r


def zx_gcd(a, b):
    """Primitive gcd in Z[x] via the subresultant PRS (Cohen, Alg. 3.3.1)."""
    a = zx_trim(a)
    b = zx_trim(b)
    if not a:
        return zx_primitive(b)[1]
    if not b:
        return zx_primitive(a)[1]
    if len(a) < len(b):
        a, b = b, a
    _, a = zx_primitive(a)
    _, b = zx_primitive(b)
    g, h = 1, 1
    while True:
        delta = len(a) - len(b)
        r = zx_pseudo_rem(a, b)
        if not r:
            return zx_primitive(b)[1]
        if len(r) == 1:
            return [1]
        denom = g * h**delta
        a, b = b, [x // denom for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)


def zx_squarefree_part(c):
    """Product of the distinct irreducible factors, primitive, lc > 0."""
    _, c = zx_primitive(c)
    if len(c) <= 1:
        return c
    g = zx_gcd(c, zx_derivative(c))
    if len(g) == 1:
        return c
    return zx_primitive(zx_divexact(c, g))[1]


def zx_yun(c):
    """Yun's squarefree decomposition of a primitive polynomial.

    Returns [(g, m)] with c = sign * prod g^m, each g primitive, squarefree,
    pairwise coprime, deg g > 0.
    """
    _, f = zx_primitive(c)
    if len(f) <= 1:
        return []
    df = zx_derivative(f)
    u = zx_gcd(f, df)
    v = zx_divexact(f, u)
    w = zx_divexact(df, u)
    out = []
    i = 1
    while len(v) > 1:
        z = zx_sub(w, zx_derivative(v))
        if not z:
            out.append((zx_primitive(v)[1], i))
            break
        g = zx_gcd(v, z)
        if len(g) > 1:
            out.append((zx_primitive(g)[1], i))
        v = zx_divexact(v, g)
        w = zx_divexact(z, g)
        i += 1
    return out
