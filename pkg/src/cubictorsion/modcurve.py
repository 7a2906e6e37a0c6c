"""Congruence-subgroup invariants of modular curves.

For a subgroup H of GL_2(Z/nZ), the modular curve X_H has the same
invariants as the congruence subgroup of SL_2(Z) given by the preimage of
<H n SL_2, -I>.  Working inside PSL_2(Z/nZ), the index, elliptic point
counts, cusp count, and genus all fall out of the action on right cosets:

    mu    = number of cosets,
    e2    = cosets fixed by the order-2 element S = [[0,-1],[1,0]],
    e3    = cosets fixed by the order-3 element [[0,-1],[1,-1]],
    eps   = orbits of the translation T = [[1,1],[0,1]],
    12g   = 12 + mu - 3 e2 - 4 e3 - 6 eps.

No external tables are involved; the coset action is built by flood fill
from the identity coset.
"""

from __future__ import annotations

from dataclasses import dataclass

from cubictorsion.exact.rational import factorint
from cubictorsion.groups.group import MatrixGroup
from cubictorsion.groups.matrices import Mat, mdet, mmul

PSL2_MAX_N = 32


def sl2_order(n: int) -> int:
    """|SL_2(Z/nZ)| = n^3 * prod_{p | n} (1 - 1/p^2)."""
    out = 1
    for p, e in factorint(n).items():
        out *= p ** (3 * e - 2) * (p * p - 1)
    return out


def psl2_order(n: int) -> int:
    order = sl2_order(n)
    return order if n <= 2 else order // 2


@dataclass(frozen=True)
class CongruenceInvariants:
    index: int
    e2: int
    e3: int
    cusps: int
    genus: int

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "e2": self.e2,
            "e3": self.e3,
            "cusps": self.cusps,
            "genus": self.genus,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CongruenceInvariants":
        return cls(int(data["index"]), int(data["e2"]), int(data["e3"]),
                   int(data["cusps"]), int(data["genus"]))


def _pcanon(m: Mat, n: int) -> Mat:
    """Canonical representative of {m, -m}, making matrices PSL_2 elements."""
    neg = ((-m[0]) % n, (-m[1]) % n, (-m[2]) % n, (-m[3]) % n)
    return m if m <= neg else neg


def psl2_invariants(H: MatrixGroup) -> CongruenceInvariants:
    """Congruence invariants of the modular curve attached to H.

    Computes the action of PSL_2(Z/nZ) on the right cosets of the image of
    <H n SL_2, -I> and reads off index, elliptic points, cusps, and genus.
    """
    n = H.n
    if n > PSL2_MAX_N:
        raise ValueError(f"modulus exceeds {PSL2_MAX_N}")
    if n < 2:
        raise ValueError("modulus must be at least 2")

    hbar = {_pcanon(h, n) for h in H.elements if mdet(h, n) == 1}

    S = (0, (-1) % n, 1, 0)
    R = (0, (-1) % n, 1, (-1) % n)
    T = (1, 1, 0, 1)
    gens = (S, R, T)

    # flood fill: assign every element of PSL_2(Z/n) to its coset of hbar
    identity = (1, 0, 0, 1)
    coset_of: dict[Mat, int] = {}
    reps = [identity]
    for h in hbar:
        coset_of[h] = 0
    transitions: list[list[int]] = []
    i = 0
    while i < len(reps):
        x = reps[i]
        row = []
        for g in gens:
            y = _pcanon(mmul(x, g, n), n)
            c = coset_of.get(y)
            if c is None:
                c = len(reps)
                reps.append(y)
                for h in hbar:
                    coset_of[_pcanon(mmul(h, y, n), n)] = c
            row.append(c)
        transitions.append(row)
        i += 1

    mu = len(reps)
    if mu * len(hbar) != psl2_order(n):
        raise ArithmeticError("internal error: coset fill does not partition")
    e2 = sum(1 for c in range(mu) if transitions[c][0] == c)
    e3 = sum(1 for c in range(mu) if transitions[c][1] == c)

    seen = [False] * mu
    cusps = 0
    for c in range(mu):
        if seen[c]:
            continue
        cusps += 1
        while not seen[c]:
            seen[c] = True
            c = transitions[c][2]

    num = 12 + mu - 3 * e2 - 4 * e3 - 6 * cusps
    if num % 12 != 0:
        raise ArithmeticError("internal error: genus formula not integral")
    g = num // 12
    if g < 0:
        raise ArithmeticError("internal error: negative genus")
    return CongruenceInvariants(mu, e2, e3, cusps, g)


def genus(H: MatrixGroup) -> int:
    """The genus of the modular curve attached to H."""
    return psl2_invariants(H).genus
