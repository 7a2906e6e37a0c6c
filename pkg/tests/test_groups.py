"""Tests for the matrix-group engine: closures, S3-type structure,
subgroup enumeration, and the admissible-image search."""

import random
from math import gcd

import numpy as np
import pytest

from cubictorsion import kernels
from cubictorsion.groups import (
    FiniteGroup,
    MatrixGroup,
    ambient,
    conjugate_into,
    det_surjective,
    direct_product,
    enumerate_subgroups,
    exponent_divides_filter,
    fixed_submodule,
    gl2_order,
    has_cc_element,
    is_borel_conjugate,
    is_generalized_s3_type,
    is_normal,
    is_split_cartan_conjugate,
    level_of,
    maximal_images_for_T,
    mconj,
    mmul,
    morder,
    neg_identity,
    quotient_group,
    s3_residual,
    symmetric_group_3,
)
from cubictorsion.shapes import TorsionShape


def conjugacy_class_key(G):
    """Canonical key of G's conjugacy class inside its full ambient group."""
    amb = ambient(G.n)
    perms = [amb.table[amb.table[g], amb.inv[g]] for g in amb.generators]
    members = np.array(sorted(amb.index_of(e) for e in G.elements),
                       dtype=np.int32)
    return kernels.orbit_canonical(perms, members)


def brute_force_gl2_count(n):
    count = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if gcd(a * d - b * c, n) == 1:
                        count += 1
    return count


def cyclic_group(m):
    return FiniteGroup(range(m), lambda a, b: (a + b) % m, 0, name=f"C{m}")


# ---------------------------------------------------------------- closures


def test_close_neg_identity_mod_5():
    assert MatrixGroup(5, [(4, 0, 0, 4)]).order == 2


def test_close_unipotent_mod_4():
    assert MatrixGroup(4, [(1, 1, 0, 1)]).order == 4


def test_close_full_gl2_mod_3():
    G = MatrixGroup(3, [(1, 1, 0, 1), (0, 2, 1, 0), (2, 0, 0, 1)])
    assert G.order == brute_force_gl2_count(3) == 48


def test_close_rejects_non_invertible():
    with pytest.raises(ValueError, match="not a unit determinant"):
        MatrixGroup(4, [(2, 0, 0, 1)])


def test_gl2_order_formula_matches_brute_force():
    for n in range(2, 13):
        assert ambient(n).size == gl2_order(n)
    for n in range(2, 7):
        assert gl2_order(n) == brute_force_gl2_count(n)


# ------------------------------------------------------------ s3-type test


def test_s3_type_of_gl2_mod_2():
    assert is_generalized_s3_type(MatrixGroup.full(2))


def test_s3_type_rejects_cyclic_4():
    G = MatrixGroup(3, [(0, 2, 1, 0)])
    assert G.order == 4
    assert not is_generalized_s3_type(G)


def test_s3_type_rejects_gl2_mod_3():
    G = MatrixGroup.full(3)
    # oracle for the failure: some element order does not divide 6
    assert any(6 % morder(g, 3) != 0 for g in G.elements)
    assert not is_generalized_s3_type(G)


def test_s3_type_on_abstract_groups():
    s3 = symmetric_group_3()
    assert is_generalized_s3_type(s3)
    assert is_generalized_s3_type(direct_product(s3, s3))
    assert not is_generalized_s3_type(cyclic_group(4))
    assert is_generalized_s3_type(cyclic_group(6))
    assert not is_generalized_s3_type(direct_product(s3, cyclic_group(4)))


# -------------------------------------------------------------- residuals


def test_residual_of_s3_is_trivial():
    assert s3_residual(symmetric_group_3()).order == 1


def test_residual_of_cyclic_4():
    G = MatrixGroup(5, [(2, 0, 0, 1)])  # diag(2,1) has order 4 mod 5
    assert G.order == 4
    N = s3_residual(G)
    assert N.order == 2
    assert (4, 0, 0, 1) in N


def test_residual_of_gl2_mod_3_is_quaternion():
    N = s3_residual(MatrixGroup.full(3))
    assert N.order == 8
    assert sorted(morder(x, 3) for x in N.elements) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_residual_properties_and_minimality():
    rng = random.Random(0xC0FFEE)
    borel9 = MatrixGroup(9, [(1, 1, 0, 1), (2, 0, 0, 1), (1, 0, 0, 2)])
    tested = [
        MatrixGroup.full(3),
        MatrixGroup.full(4),
        borel9,
        direct_product(symmetric_group_3(), symmetric_group_3()),
    ]
    for G in tested:
        N = s3_residual(G)
        assert is_normal(G, N)
        assert is_generalized_s3_type(quotient_group(G, N))
    # minimality: any normal M with s3-type quotient contains the residual
    two_cubed = FiniteGroup(
        [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)],
        lambda x, y: tuple((u + v) % 2 for u, v in zip(x, y)),
        (0, 0, 0), name="C2^3")
    pool_sources = (tested[:2] + tested[3:]
                    + [direct_product(cyclic_group(6), cyclic_group(6)),
                       two_cubed])
    pool = []
    for G in pool_sources:
        N = s3_residual(G)
        for M in enumerate_subgroups(G, up_to_conjugacy=False,
                                     max_order=4000):
            if not is_normal(G, M):
                continue
            if not is_generalized_s3_type(quotient_group(G, M)):
                continue
            pool.append((N, M))
    assert len(pool) >= 50
    for N, M in rng.sample(pool, 50):
        assert all(x in M for x in N.elements)


# -------------------------------------------------------- fixed submodules


def test_fixed_submodule_of_trivial_group():
    assert fixed_submodule(MatrixGroup(4, [(1, 0, 0, 1)]), 4) == TorsionShape(4, 4)


def test_fixed_submodule_of_neg_identity():
    assert fixed_submodule(MatrixGroup(3, [(2, 0, 0, 2)]), 3) == TorsionShape(1, 1)


def test_fixed_submodule_of_unipotent_mod_2():
    assert fixed_submodule(MatrixGroup(2, [(1, 1, 0, 1)]), 2) == TorsionShape(1, 2)


# ------------------------------------------------- determinant and cc tests


def test_det_and_cc_on_full_gl2_mod_4():
    G = MatrixGroup.full(4)
    assert det_surjective(G)
    assert has_cc_element(G)
    # the witness promised by the books: [[1,0],[0,-1]] fixes (1,0)
    g = (1, 0, 0, 3)
    assert g in G and mmul(g, g, 4) == (1, 0, 0, 1)


def test_det_not_surjective_on_sl2_mod_4():
    G = MatrixGroup(4, [(1, 1, 0, 1), (0, 3, 1, 0)])
    assert G.order == 48
    assert not det_surjective(G)


def test_no_cc_element_in_neg_identity_mod_4():
    assert not has_cc_element(MatrixGroup(4, [(3, 0, 0, 3)]))


# ------------------------------------------------------------- enumeration


def test_enumerate_s3_classes():
    classes = enumerate_subgroups(symmetric_group_3())
    assert len(classes) == 4
    assert sorted(c.order for c in classes) == [1, 2, 3, 6]


def test_enumerate_s3_all_subgroups():
    subs = enumerate_subgroups(symmetric_group_3(), up_to_conjugacy=False)
    assert len(subs) == 6


def test_enumerate_klein_four():
    elems = [(a, b) for a in (0, 1) for b in (0, 1)]
    V = FiniteGroup(elems, lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2),
                    (0, 0), name="V4")
    assert len(enumerate_subgroups(V)) == 5


def test_enumerate_s3_type_classes_are_borel_classes_mod_3():
    full = MatrixGroup.full(3)
    s3_classes = enumerate_subgroups(full, predicate=is_generalized_s3_type)
    borel_classes = enumerate_subgroups(
        full, predicate=lambda g: is_borel_conjugate(g) is not None)
    assert [c.elements for c in s3_classes] == [c.elements for c in borel_classes]
    assert len(s3_classes) == 9


def test_enumerate_bound_error():
    big = cyclic_group(4001)
    with pytest.raises(ValueError, match="enumeration bound"):
        enumerate_subgroups(big)


def test_enumerate_is_deterministic():
    full = MatrixGroup.full(4)
    a = enumerate_subgroups(full)
    b = enumerate_subgroups(full)
    assert [g.elements for g in a] == [g.elements for g in b]


def test_enumerate_counts_all_subgroups_of_gl2_mod_2():
    # GL2(Z/2) = S3: six subgroups, four classes
    full = MatrixGroup.full(2)
    assert len(enumerate_subgroups(full, up_to_conjugacy=False)) == 6
    assert len(enumerate_subgroups(full)) == 4


def test_chain_filter_restricts_walk():
    full = MatrixGroup.full(3)
    pruned = enumerate_subgroups(full, chain_filter=exponent_divides_filter(6))
    assert all(all(6 % morder(g, 3) == 0 for g in G.elements) for G in pruned)
    # the pruned walk still finds every exponent-6 class the full walk finds
    # (representatives may differ, so compare class keys)
    full_keys = {conjugacy_class_key(G) for G in enumerate_subgroups(full)
                 if all(6 % morder(g, 3) == 0 for g in G.elements)}
    assert {conjugacy_class_key(G) for G in pruned} == full_keys


# ------------------------------------------------------------------ levels


def test_level_of_full_group_is_1():
    assert level_of(MatrixGroup.full(4)) == 1


def test_level_of_borel_preimage_is_2():
    amb = ambient(4)
    pre = [amb.tuple_of(i) for i in range(amb.size)
           if amb.tuple_of(i)[2] % 2 == 0]
    assert level_of(MatrixGroup.from_elements(4, pre)) == 2


def test_level_of_borel_mod_4_is_4():
    amb = ambient(4)
    borel = [amb.tuple_of(i) for i in range(amb.size) if amb.tuple_of(i)[2] == 0]
    assert level_of(MatrixGroup.from_elements(4, borel)) == 4


# ----------------------------------------------------- borel / split cartan


def test_upper_triangular_mod_3_is_borel():
    G = MatrixGroup(3, [(1, 1, 0, 1), (2, 0, 0, 1), (1, 0, 0, 2)])
    w = is_borel_conjugate(G)
    assert w is not None
    assert all(mconj(w, g, 3)[2] == 0 for g in G.elements)


def test_diagonal_mod_5_is_split_cartan():
    G = MatrixGroup(5, [(2, 0, 0, 1), (1, 0, 0, 2)])
    w = is_split_cartan_conjugate(G)
    assert w is not None
    for g in G.elements:
        c = mconj(w, g, 5)
        assert c[1] == 0 and c[2] == 0


def test_gl2_mod_3_is_neither():
    G = MatrixGroup.full(3)
    assert is_borel_conjugate(G) is None
    assert is_split_cartan_conjugate(G) is None


def test_non_triangular_conjugate_of_borel_subgroup_is_found():
    rng = random.Random(0x5151)
    amb = ambient(3)
    base = MatrixGroup(3, [(1, 1, 0, 1), (2, 0, 0, 2)])
    for _ in range(20):
        c = amb.tuple_of(rng.randrange(amb.size))
        G = MatrixGroup(3, [mconj(c, g, 3) for g in base.generators])
        w = is_borel_conjugate(G)
        assert w is not None
        assert all(mconj(w, g, 3)[2] == 0 for g in G.elements)


# ---------------------------------------------------------- maximal images


def test_maximal_images_mod_2():
    out = maximal_images_for_T(2, (2, 2))
    assert len(out) == 1
    assert out[0].level == 1
    assert out[0].group.order == 6


def test_maximal_images_mod_4():
    out = maximal_images_for_T(4, (4, 4))
    assert sorted(m.level for m in out) == [2, 4, 4]
    for m in out:
        G = m.group
        assert neg_identity(4) in G
        assert det_surjective(G) and has_cc_element(G)
        assert fixed_submodule(s3_residual(G), 4) == TorsionShape(4, 4)


def test_maximal_images_mod_3():
    out = maximal_images_for_T(3, (3, 3))
    assert len(out) == 1
    G = out[0].group
    assert G.order == 12
    assert is_borel_conjugate(G) is not None


def test_maximal_images_unsupported_modulus():
    with pytest.raises(ValueError, match="unsupported n"):
        maximal_images_for_T(5, (5, 5))


# ------------------------------------------------------- module invariants


def test_fast_s3_test_agrees_with_residual_on_gl2_mod_6():
    classes = enumerate_subgroups(MatrixGroup.full(6))
    assert len(classes) >= 100
    for G in classes:
        assert is_generalized_s3_type(G) == (s3_residual(G).order == 1)


def test_fast_s3_test_agrees_with_residual_on_s3_x_s3():
    s3 = symmetric_group_3()
    for G in enumerate_subgroups(direct_product(s3, s3),
                                 up_to_conjugacy=False):
        assert is_generalized_s3_type(G) == (s3_residual(G).order == 1)


def test_s3_type_subgroups_mod_8_with_full_det_are_elementary_2_abelian():
    full = MatrixGroup.full(8)
    classes = enumerate_subgroups(full, chain_filter=exponent_divides_filter(6),
                                  max_order=full.order)
    checked = 0
    for G in classes:
        if not is_generalized_s3_type(G) or not det_surjective(G):
            continue
        checked += 1
        for g in G.elements:
            assert mmul(g, g, 8) == (1, 0, 0, 1)
        for a in G.generators:
            for b in G.generators:
                assert mmul(a, b, 8) == mmul(b, a, 8)
    assert checked > 100


def test_s3_type_subgroups_mod_9_split_cartan_or_special_dichotomy():
    full = MatrixGroup.full(9)
    H = MatrixGroup(9, [(1, 2, 3, 1), (1, 3, 0, 1), (1, 0, 0, 8), (2, 0, 0, 2)])
    assert H.order == 108
    classes = enumerate_subgroups(full, chain_filter=exponent_divides_filter(6),
                                  max_order=full.order)
    checked = 0
    for G in classes:
        if not is_generalized_s3_type(G):
            continue
        checked += 1
        in_cartan = is_split_cartan_conjugate(G.reduce_mod(3)) is not None
        assert in_cartan or conjugate_into(G, H) is not None
    assert checked > 100


# -------------------------------------------------------------- round trips


def test_matrix_group_json_round_trip():
    G = MatrixGroup(9, [(1, 2, 3, 1), (2, 0, 0, 2)])
    data = G.to_json()
    assert data["modulus"] == 9
    assert all(len(g) == 4 for g in data["generators"])
    G2 = MatrixGroup.from_json(data)
    assert G2 == G


def test_quotient_of_gl2_mod_3_by_quaternion_is_s3():
    G = MatrixGroup.full(3)
    N = s3_residual(G)
    Q = quotient_group(G, N)
    assert Q.order == 6
    assert is_generalized_s3_type(Q)
    assert sorted(morder(g, 3) for g in N.elements) == [1, 2] + [4] * 6


# ---------------------------------------------------------- kernel backends


def test_kernel_backends_agree():
    from cubictorsion import _kernels_py
    try:
        from cubictorsion import _kernels_c
    except ImportError:
        pytest.skip("compiled kernels not built")
    rng = random.Random(0xBEEF)
    amb = ambient(4)
    table, inv, ident = amb.table, amb.inv, amb.identity
    assert np.array_equal(_kernels_py.element_orders(table, ident),
                          _kernels_c.element_orders(table, ident))
    for _ in range(25):
        gens = [rng.randrange(amb.size) for _ in range(2)]
        sub_py = _kernels_py.closure(table, gens, ident)
        sub_c = _kernels_c.closure(table, gens, ident)
        assert np.array_equal(sub_py, sub_c)
        mask = np.zeros(amb.size, dtype=bool)
        mask[sub_py] = True
        norm_py = _kernels_py.normalizer(table, inv, mask, gens)
        norm_c = _kernels_c.normalizer(table, inv, mask, gens)
        assert np.array_equal(norm_py, norm_c)
        cand = norm_py[~mask[norm_py]]
        if cand.size:
            assert np.array_equal(_kernels_py.image_orders(table, mask, cand),
                                  _kernels_c.image_orders(table, mask, cand))
            ext_py = _kernels_py.prime_extensions(table, sub_py, mask, cand)
            ext_c = _kernels_c.prime_extensions(table, sub_c, mask, cand)
            assert len(ext_py) == len(ext_c)
            for a, b in zip(ext_py, ext_c):
                assert np.array_equal(a, b)
