"""Dense polynomial arithmetic over F_p.

Same storage convention as zx.py: list of ints in [0, p), lowest degree
first, no trailing zeros, zero polynomial = []. p is always passed
explicitly; callers are expected to hand in a prime.
"""

from __future__ import annotations


def fp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def fp_from_zx(c, p):
    return fp_trim([x % p for x in c])


def fp_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return fp_trim(out)


def fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return fp_trim(out)


def fp_scale(a, k, p):
    k %= p
    if k == 0:
        return []
    return [x * k % p for x in a]


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return fp_trim([x % p for x in out])


def fp_monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def fp_divmod(a, b, p):
    a = fp_trim(a)
    b = fp_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if len(a) < len(b):
        return [], a
    inv = pow(b[-1], -1, p)
    rem = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        t = rem[k + len(b) - 1] * inv % p
        q[k] = t
        if t:
            for j, y in enumerate(b):
                rem[k + j] = (rem[k + j] - t * y) % p
    return fp_trim(q), fp_trim(rem)


def fp_rem(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_gcd(a, b, p):
    a, b = fp_trim(a), fp_trim(b)
    while b:
        a, b = b, fp_rem(a, b, p)
    return fp_monic(a, p)


def fp_powmod(base, e, mod, p):
    result = [1]
    base = fp_rem(base, mod, p)
    while e:
        if e & 1:
            result = fp_rem(fp_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = fp_rem(fp_mul(base, base, p), mod, p)
    return result


def fp_derivative(c, p):
    return fp_trim([i * c[i] % p for i in range(1, len(c))])


def fp_eval(c, x, p):
    acc = 0
    for coef in reversed(c):
        acc = (acc * x + coef) % p
    return acc


def _fp_pth_root(f, p):
    # f is a p-th power, i.e. f = u(x^p); Frobenius fixes F_p so u has the
    # coefficients of f at indices divisible by p.
    return fp_trim([f[i] for i in range(0, len(f), p)])


def fp_sqf_list(f, p):
    """Squarefree factorization of monic f: [(g, mult)], pairwise coprime."""
    f = fp_monic(f, p)
    factors = []
    n = 1
    while len(f) > 1:
        d = fp_derivative(f, p)
        if not d:
            # all multiplicities divisible by p, so f = u(x)^p
            f = _fp_pth_root(f, p)
            n *= p
            continue
        g = fp_gcd(f, d, p)
        h = fp_divmod(f, g, p)[0]
        i = 1
        while len(h) > 1:
            gh = fp_gcd(g, h, p)
            z = fp_divmod(h, gh, p)[0]
            if len(z) > 1:
                factors.append((z, i * n))
            i += 1
            g = fp_divmod(g, gh, p)[0]
            h = gh
        # whatever is left of g has every multiplicity divisible by p and
        # is picked up by the p-th root branch on the next pass
        f = g
    return factors


def fp_squarefree_part(f, p):
    """Product of the distinct monic irreducible factors of f."""
    out = [1]
    for g, _ in fp_sqf_list(f, p):
        out = fp_mul(out, g, p)
    return out


def fp_ddf(f, p):
    """Distinct-degree factorization of monic squarefree f.

    Returns [(d, g_d)] with g_d the product of all irreducible factors of
    degree d, in increasing d, empty entries omitted.
    """
    f = fp_monic(f, p)
    out = []
    w = fp_rem([0, 1], f, p)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        w = fp_powmod(w, p, f, p)
        g = fp_gcd(fp_sub(w, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((d, g))
            f = fp_divmod(f, g, p)[0]
            w = fp_rem(w, f, p)
    if len(f) > 1:
        out.append((len(f) - 1, f))
    return out


def fp_edf(f, d, p, rng):
    """Split monic f = product of irreducibles all of degree d (p odd)."""
    if p == 2:
        raise ValueError("equal-degree splitting requires odd p")
    n = len(f) - 1
    if n == d:
        return [f]
    half = (p**d - 1) // 2
    while True:
        t = [rng.randrange(p) for _ in range(n)]
        t = fp_trim(t)
        if len(t) - 1 < 1:
            continue
        h = fp_powmod(t, half, f, p)
        g = fp_gcd(fp_sub(h, [1], p), f, p)
        if 0 < len(g) - 1 < n:
            rest = fp_divmod(f, g, p)[0]
            return fp_edf(g, d, p, rng) + fp_edf(rest, d, p, rng)


def fp_roots_squarefree(f, p, rng):
    """Roots in F_p of a squarefree polynomial."""
    f = fp_monic(f, p)
    if p <= 4096:
        return [x for x in range(p) if fp_eval(f, x, p) == 0]
    xp = fp_powmod([0, 1], p, f, p)
    lin = fp_gcd(fp_sub(xp, [0, 1], p), f, p)
    if len(lin) <= 1:
        return []
    roots = []
    for fac in fp_edf(lin, 1, p, rng):
        roots.append((-fac[0]) % p)
    return sorted(roots)


def fp_factor_squarefree(f, p, rng):
    """Monic irreducible factors of monic squarefree f (p odd)."""
    out = []
    for d, g in fp_ddf(f, p):
        if len(g) - 1 == d:
            out.append(g)
        else:
            out.extend(fp_edf(g, d, p, rng))
    out.sort(key=lambda c: (len(c), list(reversed(c))))
    return out
