# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the table kernels.

Same functions and signatures as _kernels_py; kernels.py picks whichever
imports.  The BFS and candidate loops run as tight C loops instead of numpy
whole-array passes, which mostly pays off for the many small closures and
coset unions done during subgroup enumeration.
"""

import numpy as np

cimport numpy as cnp

BACKEND = "compiled"

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def closure(table, gens, int identity):
    cdef cnp.int32_t[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef Py_ssize_t K = T.shape[0]
    gen_list = sorted({int(g) for g in gens})
    cdef cnp.int32_t[::1] G = np.asarray(gen_list, dtype=np.int32)
    cdef cnp.uint8_t[::1] member = np.zeros(K, dtype=np.uint8)
    cdef cnp.int32_t[::1] queue = np.empty(K, dtype=np.int32)
    cdef Py_ssize_t head = 0, tail = 0, j
    cdef cnp.int32_t x, y
    member[identity] = 1
    queue[tail] = identity
    tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        for j in range(G.shape[0]):
            y = T[x, G[j]]
            if member[y] == 0:
                member[y] = 1
                queue[tail] = y
                tail += 1
    return np.nonzero(np.asarray(member))[0].astype(np.int32)


def element_orders(table, int identity):
    cdef cnp.int32_t[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef Py_ssize_t K = T.shape[0]
    out_arr = np.empty(K, dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef Py_ssize_t i
    cdef cnp.int32_t cur
    cdef int k
    for i in range(K):
        cur = T[identity, i]
        k = 1
        while cur != identity:
            cur = T[cur, i]
            k += 1
            if k > K:
                raise RuntimeError("order computation did not terminate")
        out[i] = k
    return out_arr


def normalizer(table, inv, mask, sub_gens, candidates=None):
    cdef cnp.int32_t[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef cnp.int32_t[::1] I = np.ascontiguousarray(inv, dtype=np.int32)
    cdef cnp.uint8_t[::1] M = np.ascontiguousarray(mask, dtype=np.uint8)
    if candidates is None:
        cand_arr = np.arange(T.shape[0], dtype=np.int32)
    else:
        cand_arr = np.ascontiguousarray(candidates, dtype=np.int32)
    cdef cnp.int32_t[::1] C = cand_arr
    cdef cnp.int32_t[::1] G = np.asarray([int(g) for g in sub_gens],
                                         dtype=np.int32)
    out_arr = np.empty(C.shape[0], dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef Py_ssize_t i, j, m = 0
    cdef cnp.int32_t c, ci
    cdef bint ok
    for i in range(C.shape[0]):
        c = C[i]
        ci = I[c]
        ok = True
        for j in range(G.shape[0]):
            if M[T[T[c, G[j]], ci]] == 0:
                ok = False
                break
        if ok:
            out[m] = c
            m += 1
    return out_arr[:m].copy()


def image_orders(table, mask, candidates):
    cdef cnp.int32_t[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef cnp.uint8_t[::1] M = np.ascontiguousarray(mask, dtype=np.uint8)
    cand_arr = np.ascontiguousarray(candidates, dtype=np.int32)
    cdef cnp.int32_t[::1] C = cand_arr
    out_arr = np.empty(C.shape[0], dtype=np.int32)
    cdef cnp.int32_t[::1] out = out_arr
    cdef Py_ssize_t i
    cdef cnp.int32_t g, cur
    cdef int k
    cdef Py_ssize_t limit = T.shape[0] + 1
    for i in range(C.shape[0]):
        g = C[i]
        cur = g
        k = 1
        while M[cur] == 0:
            cur = T[cur, g]
            k += 1
            if k > limit:
                raise RuntimeError("image order computation did not terminate")
        out[i] = k
    return out_arr


def prime_extensions(table, members, mask, candidates):
    cdef cnp.int32_t[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    mem_arr = np.ascontiguousarray(members, dtype=np.int32)
    cdef cnp.int32_t[::1] mem = mem_arr
    cdef cnp.uint8_t[::1] M = np.ascontiguousarray(mask, dtype=np.uint8)
    cand_arr = np.ascontiguousarray(candidates, dtype=np.int32)
    cand_arr = cand_arr[~np.asarray(mask, dtype=bool)[cand_arr]]
    if cand_arr.shape[0] == 0:
        return []
    iords = image_orders(table, mask, cand_arr)
    keep = np.isin(iords, _SMALL_PRIMES)
    cdef cnp.int32_t[::1] good = np.ascontiguousarray(cand_arr[keep])
    cdef cnp.int32_t[::1] ords = np.ascontiguousarray(iords[keep])
    cdef Py_ssize_t ksize = mem.shape[0]
    out = []
    seen = set()
    cdef Py_ssize_t i, j, t, pos
    cdef cnp.int32_t g, gi
    cdef cnp.int32_t[::1] subv
    for i in range(good.shape[0]):
        g = good[i]
        p = int(ords[i])
        sub_arr = np.empty(ksize * p, dtype=np.int32)
        subv = sub_arr
        for j in range(ksize):
            subv[j] = mem[j]
        gi = g
        pos = ksize
        for t in range(p - 1):
            for j in range(ksize):
                subv[pos] = T[mem[j], gi]
                pos += 1
            gi = T[gi, g]
        sub_arr.sort()
        key = sub_arr.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(sub_arr)
    return out


def conj_members(perm, members):
    return np.sort(np.asarray(perm)[members]).astype(np.int32)


def orbit_canonical(perms, members):
    start = np.ascontiguousarray(members, dtype=np.int32)
    best = start.tobytes()
    seen = {best}
    queue = [start]
    while queue:
        cur = queue.pop()
        for perm in perms:
            img = np.sort(np.asarray(perm)[cur]).astype(np.int32)
            key = img.tobytes()
            if key not in seen:
                seen.add(key)
                queue.append(img)
                if key < best:
                    best = key
    return best
