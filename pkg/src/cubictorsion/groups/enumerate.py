"""Subgroup enumeration by layered cyclic extensions.

Every subgroup of a solvable group sits at the top of a chain
1 = S_0 < S_1 < ... < S_m = S where each S_i is normal in S_{i+1} of prime
index (a composition series).  Walking chains bottom-up therefore finds
every subgroup: extend each already-found subgroup K by the normalizing
elements whose image in N(K)/K has prime order.  All groups handled by this
package have order 2^a 3^b, hence are solvable.

The walk runs over a dense index table (a Carrier); the inner loops live in
the kernels module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from cubictorsion import kernels
from cubictorsion.groups.group import FiniteGroup, MatrixGroup

ENUMERATION_MAX_ORDER = 4000


@dataclass
class Carrier:
    """A finite group flattened to index arrays over a fixed element order."""

    group: object
    labels: tuple
    table: np.ndarray
    identity: int
    inv: np.ndarray = field(init=False)
    orders: np.ndarray = field(init=False)
    gen_idx: list = field(init=False)
    conj_perms: list = field(init=False)

    def __post_init__(self):
        self.inv = np.argmax(self.table == self.identity, axis=1).astype(np.int32)
        self.orders = kernels.element_orders(self.table, self.identity)
        self.gen_idx = self._greedy_gens()
        self.conj_perms = [self.table[self.table[g], self.inv[g]]
                           for g in self.gen_idx]

    def _greedy_gens(self) -> list:
        K = self.table.shape[0]
        if K == 1:
            return []
        by_order = np.argsort(-self.orders, kind="stable")
        gens: list = []
        have = {self.identity}
        for i in by_order:
            i = int(i)
            if i in have:
                continue
            gens.append(i)
            have = set(kernels.closure(self.table, gens, self.identity).tolist())
            if len(have) == K:
                break
        return gens


def build_carrier(group) -> Carrier:
    """Flatten a MatrixGroup or FiniteGroup into a Carrier.

    Matrix groups with modulus at most 12 reuse the precomputed ambient
    table (sliced down when the group is proper); everything else gets a
    dict-built table.
    """
    if isinstance(group, MatrixGroup) and 2 <= group.n <= 12:
        from cubictorsion.groups.ambient import ambient
        amb = ambient(group.n)
        if group.order == amb.size:
            labels = tuple(amb.tuples_of(range(amb.size)))
            return Carrier(group, labels, amb.table, amb.identity)
        sub_idx = np.array([amb.index_of(e) for e in group.elements],
                           dtype=np.int64)
        # elements and ambient rows share lexicographic order, so sub_idx is
        # already sorted and searchsorted gives the local index remap
        local = np.searchsorted(
            sub_idx, amb.table[np.ix_(sub_idx, sub_idx)]).astype(np.int32)
        ident = int(np.searchsorted(sub_idx, amb.identity))
        return Carrier(group, tuple(group.elements), local, ident)

    labels = tuple(group.elements)
    index = {e: i for i, e in enumerate(labels)}
    K = len(labels)
    table = np.empty((K, K), dtype=np.int32)
    for i, x in enumerate(labels):
        row = table[i]
        for j, y in enumerate(labels):
            row[j] = index[group.mul(x, y)]
    return Carrier(group, labels, table, index[group.identity])


class SubgroupView:
    """Light handle on a subgroup during enumeration.

    chain_filter callables receive one of these; use `element_orders` or
    `exponent_divides` for cheap structural tests, or `as_group()` when the
    full object is really needed.
    """

    __slots__ = ("carrier", "members")

    def __init__(self, carrier: Carrier, members: np.ndarray):
        self.carrier = carrier
        self.members = members

    @property
    def size(self) -> int:
        return int(self.members.shape[0])

    @property
    def element_orders(self) -> np.ndarray:
        return self.carrier.orders[self.members]

    def exponent_divides(self, k: int) -> bool:
        return bool((k % self.element_orders.astype(np.int64) == 0).all())

    def as_group(self):
        return _materialize(self.carrier, self.members, None)


def exponent_divides_filter(k: int) -> Callable[[SubgroupView], bool]:
    """Hereditary, conjugation-invariant chain filter: exponent divides k."""
    def check(view: SubgroupView) -> bool:
        return view.exponent_divides(k)
    return check


def _materialize(car: Carrier, members: np.ndarray, gens_idx):
    labels = [car.labels[int(i)] for i in members]
    gen_labels = ([car.labels[int(i)] for i in gens_idx]
                  if gens_idx else None)
    group = car.group
    if isinstance(group, MatrixGroup):
        return MatrixGroup.from_elements(group.n, labels, gen_labels)
    sub = group.subgroup(labels)
    return sub


def enumerate_subgroups(group, predicate=None, up_to_conjugacy: bool = True,
                        chain_filter=None,
                        max_order: int = ENUMERATION_MAX_ORDER) -> list:
    """All subgroups of `group` (conjugacy-class representatives by
    default), optionally filtered.

    predicate: applied to each materialized result; does not prune the walk.
    chain_filter: hereditary conjugation-invariant predicate on
        SubgroupView; prunes the walk itself, so every reported subgroup and
        all of its subgroups satisfy it.
    max_order: guard on the input group's order.
    """
    order = len(group.elements)
    if order > max_order:
        raise ValueError("enumeration bound")
    car = build_carrier(group)
    K = car.table.shape[0]

    trivial = np.array([car.identity], dtype=np.int32)
    if chain_filter is not None and not chain_filter(SubgroupView(car, trivial)):
        return []

    # canonical key = smallest member-tuple over the conjugation orbit; every
    # member set visited while walking an orbit shares the key, so cache them
    # all and skip the walk next time any of them shows up
    orbit_cache: dict[bytes, bytes] = {}

    def canon(members: np.ndarray) -> bytes:
        members = np.ascontiguousarray(members, dtype=np.int32)
        key0 = members.tobytes()
        if not up_to_conjugacy:
            return key0
        hit = orbit_cache.get(key0)
        if hit is not None:
            return hit
        best = key0
        local = {key0}
        queue = [members]
        while queue:
            cur = queue.pop()
            for perm in car.conj_perms:
                img = kernels.conj_members(perm, cur)
                kb = img.tobytes()
                if kb not in local:
                    local.add(kb)
                    queue.append(img)
                    if kb < best:
                        best = kb
        for kb in local:
            orbit_cache[kb] = best
        return best

    seen = {canon(trivial)}
    records = [(trivial, [])]
    frontier = [(trivial, [])]
    while frontier:
        next_frontier = []
        for members, gens in frontier:
            mask = np.zeros(K, dtype=bool)
            mask[members] = True
            norm = kernels.normalizer(car.table, car.inv, mask, gens)
            cand = norm[~mask[norm]]
            for sub in kernels.prime_extensions(car.table, members, mask, cand):
                if chain_filter is not None and not chain_filter(
                        SubgroupView(car, sub)):
                    continue
                key = canon(sub)
                if key in seen:
                    continue
                seen.add(key)
                extender = int(np.setdiff1d(sub, members)[0])
                new_gens = gens + [extender]
                records.append((sub, new_gens))
                next_frontier.append((sub, new_gens))
        frontier = next_frontier

    records.sort(key=lambda r: (r[0].shape[0], r[0].tobytes()))
    out = []
    for members, gens in records:
        sub = _materialize(car, members, gens)
        if predicate is None or predicate(sub):
            out.append(sub)
    return out
