"""Pure-Python (numpy) implementations of the table kernels.

All kernels operate on a dense multiplication table `table` of shape (K, K)
with int32 entries, where table[i, j] is the index of element i * j.  Member
sets are passed both as sorted index arrays and as boolean masks so callers
can reuse whichever form they already have.

The compiled extension (_kernels_c) provides the same functions with the
same signatures; kernels.py picks one at import time.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def closure(table: np.ndarray, gens, identity: int) -> np.ndarray:
    """Indices of the subgroup generated by `gens`, sorted ascending.

    BFS under right multiplication by the generators; a nonempty subset of a
    finite group closed under multiplication is a subgroup, so inverses come
    for free.
    """
    K = table.shape[0]
    gen_arr = np.unique(np.asarray(list(gens), dtype=np.int64))
    member = np.zeros(K, dtype=bool)
    member[identity] = True
    frontier = np.array([identity], dtype=np.int64)
    while frontier.size:
        prods = table[np.ix_(frontier, gen_arr)].ravel()
        prods = prods[~member[prods]]
        if prods.size == 0:
            break
        frontier = np.unique(prods)
        member[frontier] = True
    return np.nonzero(member)[0].astype(np.int32)


def element_orders(table: np.ndarray, identity: int) -> np.ndarray:
    """Order of every element, as an int32 array of length K."""
    K = table.shape[0]
    idx = np.arange(K, dtype=np.int64)
    orders = np.zeros(K, dtype=np.int32)
    orders[identity] = 1
    cur = idx.copy()
    k = 1
    while (orders == 0).any():
        cur = table[cur, idx]
        k += 1
        newly = (cur == idx[identity]) & (orders == 0)
        orders[newly] = k
        if k > K:
            raise RuntimeError("order computation did not terminate")
    return orders


def normalizer(table: np.ndarray, inv: np.ndarray, mask: np.ndarray,
               sub_gens, candidates=None) -> np.ndarray:
    """Indices g among `candidates` (default: all) with g K g^-1 = K.

    K is given by its membership `mask` and a generating set `sub_gens`;
    conjugating a generating set into K conjugates the whole subgroup into
    K, and equal cardinality upgrades that to equality.
    """
    if candidates is None:
        cand = np.arange(table.shape[0], dtype=np.int64)
    else:
        cand = np.asarray(candidates, dtype=np.int64)
    ok = np.ones(cand.shape[0], dtype=bool)
    cinv = inv[cand]
    for k in sub_gens:
        conj = table[table[cand, int(k)], cinv]
        ok &= mask[conj]
        if not ok.any():
            break
    return cand[ok].astype(np.int32)


def image_orders(table: np.ndarray, mask: np.ndarray, candidates) -> np.ndarray:
    """For each candidate g, the least c >= 1 with g^c in the subgroup K
    given by `mask`.  This is the order of the image of g in N(K)/K when g
    normalizes K."""
    cand = np.asarray(candidates, dtype=np.int64)
    out = np.zeros(cand.shape[0], dtype=np.int32)
    cur = cand.copy()
    alive = ~mask[cur]
    out[~alive] = 1
    k = 1
    limit = table.shape[0] + 1
    while alive.any():
        cur[alive] = table[cur[alive], cand[alive]]
        k += 1
        done = alive & mask[cur]
        out[done] = k
        alive &= ~done
        if k > limit:
            raise RuntimeError("image order computation did not terminate")
    return out


def prime_extensions(table: np.ndarray, members: np.ndarray, mask: np.ndarray,
                     candidates) -> list[np.ndarray]:
    """All subgroups K' = <K, g> with [K':K] prime, for g in `candidates`.

    Candidates must normalize K (the caller filters by `normalizer`).  For a
    normalizing g of prime image-order p, the union of cosets
    K u Kg u ... u Kg^{p-1} is already a subgroup.  Returns deduplicated
    sorted index arrays.
    """
    cand = np.asarray(candidates, dtype=np.int64)
    cand = cand[~mask[cand]]
    if cand.size == 0:
        return []
    iords = image_orders(table, mask, cand)
    keep = np.isin(iords, _SMALL_PRIMES)
    out = []
    seen = set()
    for g, p in zip(cand[keep], iords[keep]):
        parts = [members]
        gi = int(g)
        for _ in range(int(p) - 1):
            parts.append(table[members, gi])
            gi = int(table[gi, g])
        sub = np.sort(np.concatenate(parts)).astype(np.int32)
        key = sub.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(sub)
    return out


def conj_members(perm: np.ndarray, members: np.ndarray) -> np.ndarray:
    """Image of a member set under a conjugation permutation, sorted."""
    return np.sort(perm[members]).astype(np.int32)


def orbit_canonical(perms, members: np.ndarray) -> bytes:
    """Canonical key of the conjugation orbit of a subgroup: the smallest
    member-tuple byte string reachable by the permutations in `perms`
    (which must generate the acting group's conjugation action)."""
    start = np.ascontiguousarray(members, dtype=np.int32)
    best = start.tobytes()
    seen = {best}
    queue = [start]
    while queue:
        cur = queue.pop()
        for perm in perms:
            img = np.sort(perm[cur]).astype(np.int32)
            key = img.tobytes()
            if key not in seen:
                seen.add(key)
                queue.append(img)
                if key < best:
                    best = key
    return best
