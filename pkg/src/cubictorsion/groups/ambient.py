"""Dense multiplication tables for GL_2(Z/nZ), n <= 12.

For the moduli this package cares about the full group has at most 4608
elements (n = 12), so a dense K x K index table fits comfortably in memory
and turns every group-theoretic question into numpy indexing.  Elements are
kept in lexicographic order of the tuple (a, b, c, d).
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from cubictorsion import kernels
from cubictorsion.exact.rational import factorint

AMBIENT_MAX_N = 12


def gl2_order(n: int) -> int:
    """|GL_2(Z/nZ)| = n^4 * prod_{p | n} (1 - 1/p)(1 - 1/p^2)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    out = 1
    for p, e in factorint(n).items():
        out *= p ** (4 * e - 3) * (p - 1) * (p * p - 1)
    return out


def unit_group_generators(n: int) -> list[int]:
    """A small generating set of (Z/nZ)^*, greedy."""
    if n == 1:
        return []
    units = {k for k in range(1, n) if gcd(k, n) == 1}
    have = {1 % n}
    gens: list[int] = []
    for u in sorted(units):
        if u in have:
            continue
        gens.append(u)
        # (Z/n)^* is abelian, so the enlarged subgroup is the union of the
        # cosets have * u^k until u^k falls back into the old subgroup
        new = set(have)
        pw = u
        while pw not in have:
            new.update((pw * h) % n for h in have)
            pw = (pw * u) % n
        have = new
        if have == units:
            break
    return gens


class Ambient:
    """Precomputed tables for GL_2(Z/nZ).  Build through ambient(n)."""

    def __init__(self, n: int):
        if not 2 <= n <= AMBIENT_MAX_N:
            raise ValueError(f"ambient tables support 2 <= n <= {AMBIENT_MAX_N}")
        self.n = n
        rng = np.arange(n, dtype=np.int64)
        grid = np.stack(np.meshgrid(rng, rng, rng, rng, indexing="ij"), axis=-1)
        all_mats = grid.reshape(-1, 4)
        det_all = (all_mats[:, 0] * all_mats[:, 3] - all_mats[:, 1] * all_mats[:, 2]) % n
        unit = np.array([gcd(int(k), n) == 1 for k in range(n)])
        elems = all_mats[unit[det_all]]
        self.size = elems.shape[0]
        assert self.size == gl2_order(n)
        self.elems = elems.astype(np.int32)

        enc = ((elems[:, 0] * n + elems[:, 1]) * n + elems[:, 2]) * n + elems[:, 3]
        lookup = np.full(n ** 4, -1, dtype=np.int32)
        lookup[enc] = np.arange(self.size, dtype=np.int32)
        self._lookup = lookup

        self.table = self._build_table(elems, lookup)
        self.identity = int(lookup[self._encode(1, 0, 0, 1)])
        self.neg_identity = int(lookup[self._encode((-1) % n, 0, 0, (-1) % n)])

        self.inv = self._build_inverses(elems, lookup)
        self.orders = kernels.element_orders(self.table, self.identity)
        self.det = ((elems[:, 0].astype(np.int64) * elems[:, 3]
                     - elems[:, 1].astype(np.int64) * elems[:, 2]) % n).astype(np.int32)
        self.trace = ((elems[:, 0].astype(np.int64) + elems[:, 3]) % n).astype(np.int32)
        self.upper_triangular = elems[:, 2] == 0
        self.diagonal = (elems[:, 1] == 0) & (elems[:, 2] == 0)

        self.generators = self._standard_generators()
        gen_closure = kernels.closure(self.table, self.generators, self.identity)
        assert gen_closure.shape[0] == self.size
        self.conj_perms = [self.table[self.table[g], self.inv[g]]
                           for g in self.generators]

    def _encode(self, a, b, c, d) -> int:
        n = self.n
        return ((a * n + b) * n + c) * n + d

    def _build_table(self, elems: np.ndarray, lookup: np.ndarray) -> np.ndarray:
        n = self.n
        K = self.size
        a2 = elems[:, 0].astype(np.int64)
        b2 = elems[:, 1].astype(np.int64)
        c2 = elems[:, 2].astype(np.int64)
        d2 = elems[:, 3].astype(np.int64)
        table = np.empty((K, K), dtype=np.int32)
        block = max(1, (1 << 22) // max(K, 1))
        for lo in range(0, K, block):
            hi = min(lo + block, K)
            a1 = elems[lo:hi, 0, None].astype(np.int64)
            b1 = elems[lo:hi, 1, None].astype(np.int64)
            c1 = elems[lo:hi, 2, None].astype(np.int64)
            d1 = elems[lo:hi, 3, None].astype(np.int64)
            ra = (a1 * a2 + b1 * c2) % n
            rb = (a1 * b2 + b1 * d2) % n
            rc = (c1 * a2 + d1 * c2) % n
            rd = (c1 * b2 + d1 * d2) % n
            table[lo:hi] = lookup[((ra * n + rb) * n + rc) * n + rd]
        return table

    def _build_inverses(self, elems: np.ndarray, lookup: np.ndarray) -> np.ndarray:
        n = self.n
        dets = ((elems[:, 0].astype(np.int64) * elems[:, 3]
                 - elems[:, 1].astype(np.int64) * elems[:, 2]) % n)
        dinv_by_residue = np.full(n, -1, dtype=np.int64)
        for k in range(n):
            if gcd(k, n) == 1:
                dinv_by_residue[k] = pow(k, -1, n)
        di = dinv_by_residue[dets]
        ia = (elems[:, 3] * di) % n
        ib = (-elems[:, 1] * di) % n
        ic = (-elems[:, 2] * di) % n
        id_ = (elems[:, 0] * di) % n
        return lookup[((ia * n + ib) * n + ic) * n + id_].astype(np.int32)

    def _standard_generators(self) -> list[int]:
        n = self.n
        gens = [self.index_of((1, 1, 0, 1)), self.index_of((0, (-1) % n, 1, 0))]
        for u in unit_group_generators(n):
            gens.append(self.index_of((u, 0, 0, 1)))
        return gens

    def index_of(self, m) -> int:
        a, b, c, d = (int(x) % self.n for x in m)
        idx = int(self._lookup[self._encode(a, b, c, d)])
        if idx < 0:
            raise ValueError("not a unit determinant")
        return idx

    def tuple_of(self, idx: int) -> tuple[int, int, int, int]:
        a, b, c, d = self.elems[idx]
        return (int(a), int(b), int(c), int(d))

    def indices_of(self, mats) -> np.ndarray:
        return np.array([self.index_of(m) for m in mats], dtype=np.int32)

    def tuples_of(self, indices) -> list[tuple[int, int, int, int]]:
        return [self.tuple_of(int(i)) for i in indices]

    def reduction_to(self, m: int) -> np.ndarray:
        """Index array mapping each element to its reduction in ambient(m),
        for m | n."""
        if self.n % m != 0 or m < 1:
            raise ValueError("target modulus must divide n")
        if m == 1:
            return np.zeros(self.size, dtype=np.int32)
        tgt = ambient(m)
        e = self.elems.astype(np.int64) % m
        enc = ((e[:, 0] * m + e[:, 1]) * m + e[:, 2]) * m + e[:, 3]
        return tgt._lookup[enc].astype(np.int32)

    def units(self) -> list[int]:
        return [k for k in range(1, self.n) if gcd(k, self.n) == 1]


@lru_cache(maxsize=None)
def ambient(n: int) -> Ambient:
    return Ambient(n)
