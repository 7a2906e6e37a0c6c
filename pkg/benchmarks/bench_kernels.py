"""Benchmark the compiled table kernels against the pure-numpy fallback.

Runs every kernel on identical inputs drawn from the GL_2(Z/n) ambient
tables that subgroup enumeration actually uses, and prints a per-kernel
timing table with the speedup.  Results from the two backends are compared
for equality as they are produced, so a wrong answer shows up here too.

Usage:
    python3 benchmarks/bench_kernels.py [--modulus 9] [--repeats 5]
"""

from __future__ import annotations

import argparse
import random
import sys
import time

import numpy as np

from cubictorsion import _kernels_py
from cubictorsion.groups.ambient import ambient

try:
    from cubictorsion import _kernels_c
except ImportError:
    _kernels_c = None


def _time(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _workloads(n, seed):
    """One named closure per kernel, parametrized by the backend module."""
    amb = ambient(n)
    rng = random.Random(seed)
    table, inv, ident = amb.table, amb.inv, amb.identity

    # a mid-sized subgroup so normalizer and extension work is non-trivial
    gens = [rng.randrange(amb.size) for _ in range(2)]
    members = _kernels_py.closure(table, gens, ident)
    while not 4 <= members.shape[0] <= amb.size // 4:
        gens = [rng.randrange(amb.size) for _ in range(2)]
        members = _kernels_py.closure(table, gens, ident)
    mask = np.zeros(amb.size, dtype=bool)
    mask[members] = True
    norm = _kernels_py.normalizer(table, inv, mask, gens)
    gen_pairs = [(rng.randrange(amb.size), rng.randrange(amb.size))
                 for _ in range(20)]

    def w_closure(mod):
        return [mod.closure(table, pair, ident) for pair in gen_pairs]

    def w_element_orders(mod):
        return mod.element_orders(table, ident)

    def w_normalizer(mod):
        return mod.normalizer(table, inv, mask, gens)

    def w_image_orders(mod):
        return mod.image_orders(table, mask, norm)

    def w_prime_extensions(mod):
        return mod.prime_extensions(table, members, mask, norm)

    def w_conj_members(mod):
        return [mod.conj_members(perm, members) for perm in amb.conj_perms]

    def w_orbit_canonical(mod):
        return mod.orbit_canonical(amb.conj_perms, members)

    return amb, [
        ("closure x20", w_closure),
        ("element_orders", w_element_orders),
        ("normalizer", w_normalizer),
        ("image_orders", w_image_orders),
        ("prime_extensions", w_prime_extensions),
        ("conj_members", w_conj_members),
        ("orbit_canonical", w_orbit_canonical),
    ]


def _equal(a, b):
    if isinstance(a, list):
        return len(a) == len(b) and all(_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--modulus", type=int, default=9,
                        help="ambient GL_2(Z/n) to benchmark on (default 9)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="repeats per kernel; best time is reported")
    parser.add_argument("--seed", type=int, default=0xBE7C)
    args = parser.parse_args(argv)

    amb, works = _workloads(args.modulus, args.seed)
    print(f"ambient GL_2(Z/{args.modulus}): {amb.size} elements, "
          f"table {amb.size}x{amb.size}")
    if _kernels_c is None:
        print("compiled extension not built; timing the pure backend only")

    header = f"{'kernel':<18} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, work in works:
        t_py, r_py = _time(lambda: work(_kernels_py), args.repeats)
        if _kernels_c is None:
            print(f"{name:<18} {t_py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
            continue
        t_c, r_c = _time(lambda: work(_kernels_c), args.repeats)
        if not _equal(r_py, r_c):
            print(f"{name:<18} BACKENDS DISAGREE", file=sys.stderr)
            return 1
        print(f"{name:<18} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms "
              f"{t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
