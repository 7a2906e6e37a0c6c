"""Structural predicates around products of S_3.

A finite group embeds in some direct power of S_3 exactly when its exponent
divides 6, its Sylow subgroups are abelian, and its Sylow 3-subgroup is
normal.  (Exponent 6 forces the Sylow 2-subgroup to be elementary abelian,
so only the 3-part needs an explicit commutativity check; normality of the
3-part is equivalent to the count of solutions of x^3 = e matching the
3-part of the group order, since all those solutions must then lie in a
single Sylow 3-subgroup.)

Both entry points accept MatrixGroup or FiniteGroup; all they use is
`.elements`, `.mul`, `.identity`, `.subgroup`.
"""

from __future__ import annotations

GROUP_SIZE_LIMIT = 10 ** 6
RESIDUAL_SIZE_LIMIT = 10 ** 5

# S_3 as permutation tuples, matching symmetric_group_3 in group.py
_S3_ELEMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
_S3_ID = (0, 1, 2)
_S3_ORDER = {(0, 1, 2): 1, (1, 0, 2): 2, (0, 2, 1): 2, (2, 1, 0): 2,
             (1, 2, 0): 3, (2, 0, 1): 3}


def _s3_mul(p, q):
    return (p[q[0]], p[q[1]], p[q[2]])


def element_order(group, x) -> int:
    e = group.identity
    cur = x
    k = 1
    while cur != e:
        cur = group.mul(cur, x)
        k += 1
    return k


def is_generalized_s3_type(group) -> bool:
    """True iff the group embeds in S_3 x ... x S_3.

    Checks exponent | 6, the x^3 = e solution count against the 3-part of
    the order, and commutativity of those solutions.
    """
    order = len(group.elements)
    if order > GROUP_SIZE_LIMIT:
        raise ValueError(f"group order exceeds {GROUP_SIZE_LIMIT}")
    e = group.identity
    mul = group.mul
    three_part = 1
    m = order
    while m % 3 == 0:
        m //= 3
        three_part *= 3
    cube_roots = []
    for x in group.elements:
        x2 = mul(x, x)
        x3 = mul(x2, x)
        if mul(x3, x3) != e:
            return False
        if x3 == e:
            cube_roots.append(x)
    if len(cube_roots) != three_part:
        return False
    # cube_roots is now the unique (hence normal) Sylow 3-subgroup as a set;
    # the embedding exists iff it is abelian
    for i, x in enumerate(cube_roots):
        for y in cube_roots[i + 1:]:
            if mul(x, y) != mul(y, x):
                return False
    return True


def greedy_generators(group) -> list:
    """A short generating list, greedily grown from high-order elements."""
    e = group.identity
    order = len(group.elements)
    if order == 1:
        return []
    by_order = sorted(group.elements,
                      key=lambda x: (-element_order(group, x), x))
    gens: list = []
    have = {e}
    for x in by_order:
        if x in have:
            continue
        gens.append(x)
        have = _closure_set(group, gens)
        if len(have) == order:
            break
    return gens


def _closure_set(group, gens) -> set:
    mul = group.mul
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _pair_closure(mul, pairs, identity):
    """Closure of generator pairs inside G x S_3, stored as a map g -> s.

    Returns None as soon as one group element would need two images, i.e.
    the assignment extends to no homomorphism.
    """
    graph = {identity: _S3_ID}
    frontier = [(identity, _S3_ID)]
    while frontier:
        nxt = []
        for g, s in frontier:
            for h, t in pairs:
                gh = mul(g, h)
                st = _s3_mul(s, t)
                prev = graph.get(gh)
                if prev is None:
                    graph[gh] = st
                    nxt.append((gh, st))
                elif prev != st:
                    return None
        frontier = nxt
    return graph


def s3_residual(group):
    """The intersection of the kernels of all homomorphisms G -> S_3,
    returned as a subgroup of the same kind as the input.

    Enumerates homomorphisms by depth-first assignment of generator images,
    pruning by element-order divisibility and by consistency of the partial
    graph closure in G x S_3.
    """
    order = len(group.elements)
    if order > RESIDUAL_SIZE_LIMIT:
        raise ValueError(f"group order exceeds {RESIDUAL_SIZE_LIMIT}")
    e = group.identity
    mul = group.mul
    gens = greedy_generators(group)
    if not gens:
        return group.subgroup([e])

    gen_orders = [element_order(group, g) for g in gens]
    candidates = [[s for s in _S3_ELEMS if og % _S3_ORDER[s] == 0]
                  for og in gen_orders]

    residual = set(group.elements)

    def descend(i, pairs, graph):
        nonlocal residual
        if len(residual) == 1:
            return
        if i == len(gens):
            # graph is the closure of all generator pairs, so it covers G
            residual &= {g for g, s in graph.items() if s == _S3_ID}
            return
        for s in candidates[i]:
            new_pairs = pairs + [(gens[i], s)]
            new_graph = _pair_closure(mul, new_pairs, e)
            if new_graph is None:
                continue
            descend(i + 1, new_pairs, new_graph)

    descend(0, [], {e: _S3_ID})
    return group.subgroup(sorted(residual))
