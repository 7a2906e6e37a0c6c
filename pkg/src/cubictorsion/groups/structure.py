"""Structural predicates on subgroups of GL_2(Z/nZ): fixed submodules,
determinant surjectivity, complex-conjugation elements, level, and
conjugacy into the standard Borel and split Cartan subgroups.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from cubictorsion.groups.group import MatrixGroup
from cubictorsion.groups.matrices import Mat, mdet, mtrace
from cubictorsion.shapes import TorsionShape

CONJUGACY_MAX_N = 12


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def fixed_submodule(N: MatrixGroup, n: int) -> TorsionShape:
    """Shape of the submodule of (Z/nZ)^2 fixed pointwise by N.

    The fixed set of a matrix group acting on (Z/n)^2 is a submodule on at
    most two generators, hence isomorphic to Z/m1 x Z/m2 with m1 | m2.
    """
    if N.n != n:
        raise ValueError("modulus mismatch")
    gens = N.generators
    count = 0
    exponent = 1
    for x in range(n):
        for y in range(n):
            if all((g[0] * x + g[1] * y) % n == x
                   and (g[2] * x + g[3] * y) % n == y for g in gens):
                count += 1
                ordv = n // gcd(n, gcd(x, y))
                if ordv > exponent:
                    exponent = ordv
    m2 = exponent
    m1 = count // m2
    assert m1 * m2 == count and m2 % m1 == 0
    return TorsionShape(m1, m2)


def det_surjective(G: MatrixGroup) -> bool:
    """True iff det: G -> (Z/nZ)^* is onto."""
    n = G.n
    units = {k for k in range(1, n) if gcd(k, n) == 1} or {0}
    if n == 1:
        return True
    return {mdet(g, n) for g in G.elements} == units


def has_cc_element(G: MatrixGroup) -> bool:
    """True iff G contains a matrix with trace 0 and determinant -1 fixing
    a vector of order n in (Z/nZ)^2 (the shape of complex conjugation on
    the n-torsion of an elliptic curve over the reals)."""
    n = G.n
    target_det = (-1) % n
    for g in G.elements:
        if mtrace(g, n) != 0 or mdet(g, n) != target_det:
            continue
        for x in range(n):
            for y in range(n):
                if gcd(gcd(x, y), n) != 1:
                    continue
                if (g[0] * x + g[1] * y) % n == x and \
                        (g[2] * x + g[3] * y) % n == y:
                    return True
    return False


def level_of(G: MatrixGroup) -> int:
    """Smallest m | n such that G is the full preimage of its reduction
    mod m under GL_2(Z/n) -> GL_2(Z/m)."""
    from cubictorsion.groups.ambient import gl2_order
    n = G.n
    full_n = gl2_order(n)
    for m in _divisors(n):
        if m == 1:
            if G.order == full_n:
                return 1
            continue
        if m == n:
            return n
        kernel_size = full_n // gl2_order(m)
        if G.order == G.reduce_mod(m).order * kernel_size:
            return m
    return n


def _conjugator_into_mask(G: MatrixGroup, target_mask: np.ndarray) -> Mat | None:
    """Smallest-index c in GL_2(Z/n) with c G c^{-1} inside the subgroup
    given by `target_mask`, or None.  Conjugating a generating set into a
    subgroup conjugates the whole group into it."""
    from cubictorsion.groups.ambient import ambient
    n = G.n
    if not 2 <= n <= CONJUGACY_MAX_N:
        raise ValueError(f"conjugacy search supports 2 <= n <= {CONJUGACY_MAX_N}")
    amb = ambient(n)
    table = amb.table
    inv = amb.inv
    cand = np.arange(amb.size, dtype=np.int64)
    ok = np.ones(amb.size, dtype=bool)
    for g in G.generators:
        gi = amb.index_of(g)
        conj = table[table[cand, gi], inv[cand]]
        ok &= target_mask[conj]
        if not ok.any():
            return None
    c = int(np.argmax(ok))
    return amb.tuple_of(c)


def is_borel_conjugate(G: MatrixGroup) -> Mat | None:
    """A conjugator c with c G c^{-1} upper triangular, or None.

    Truthy exactly when G is conjugate to a subgroup of the Borel."""
    from cubictorsion.groups.ambient import ambient
    return _conjugator_into_mask(G, ambient(G.n).upper_triangular)


def is_split_cartan_conjugate(G: MatrixGroup) -> Mat | None:
    """A conjugator c with c G c^{-1} diagonal, or None."""
    from cubictorsion.groups.ambient import ambient
    return _conjugator_into_mask(G, ambient(G.n).diagonal)


def conjugate_into(G: MatrixGroup, H: MatrixGroup) -> Mat | None:
    """A conjugator c with c G c^{-1} a subgroup of H, or None."""
    if G.n != H.n:
        raise ValueError("modulus mismatch")
    from cubictorsion.groups.ambient import ambient
    amb = ambient(G.n)
    mask = np.zeros(amb.size, dtype=bool)
    for h in H.elements:
        mask[amb.index_of(h)] = True
    return _conjugator_into_mask(G, mask)
