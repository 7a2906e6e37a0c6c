"""Tests for the family dataset, the classification engine, the
quartic-twist rule, the Monte Carlo degree filter, and the local
reduction checks."""

import random
from fractions import Fraction

import pytest

from cubictorsion.classify import (
    ClassificationError,
    CurveRequired,
    classify_curve,
    classify_j,
    family_membership,
    local_injection_check,
    mc_s3_filter,
    quartic_twist_parameter,
    table1_data,
    table1_from_json,
    table1_to_json,
    class20,
)
from cubictorsion.classify.engine import ClassificationResult
from cubictorsion.curves import (
    WeierstrassCurve,
    curve_from_j,
    good_primes,
    invariants,
)
from cubictorsion.exact import PolyQ, fourth_power_free
from cubictorsion.exact.zx import zx_gcd
from cubictorsion.shapes import TorsionShape, shape_contains

from _oracles import full_four_torsion_oracle


# ------------------------------------------------------------ the dataset

EXPECTED_SHAPES = [
    (2, 2), (2, 4), (2, 8), (2, 10), (2, 14), (2, 16), (2, 26),
    (4, 4), (4, 8), (4, 16), (4, 28),
    (6, 6), (6, 12), (6, 18), (6, 30), (6, 42),
    (8, 8), (12, 12), (14, 14), (18, 18),
]


def test_dataset_has_twenty_records():
    data = table1_data()
    assert len(data) == 20
    assert sorted(tuple(r.shape) for r in data) == sorted(EXPECTED_SHAPES)
    assert [tuple(s) for s in class20()] == [tuple(r.shape) for r in data]


def test_dataset_function_counts():
    by_shape = {tuple(r.shape): r for r in table1_data()}
    assert len(by_shape[(4, 4)].functions) == 3
    assert len(by_shape[(4, 8)].functions) == 2
    assert len(by_shape[(6, 18)].functions) == 2
    assert len(by_shape[(18, 18)].functions) == 2
    assert len(by_shape[(12, 12)].functions) == 1
    assert len(by_shape[(12, 12)].finite_js) == 2
    assert len(by_shape[(2, 2)].functions) == 1
    # the (2,2) function is the identity map t
    num, den = by_shape[(2, 2)].functions[0]
    assert num == PolyQ([0, 1]) and den == PolyQ([1])


def test_dataset_pure_finite_lists():
    by_shape = {tuple(r.shape): r for r in table1_data()}
    assert by_shape[(4, 28)].finite_js == (
        Fraction(351, 4), Fraction(-38575685889, 16384))
    assert by_shape[(6, 30)].finite_js == (
        Fraction(-121945, 32), Fraction(46969655, 32768))
    assert by_shape[(6, 42)].finite_js == (
        Fraction(3375, 2), Fraction(-140625, 8),
        Fraction(-1159088625, 2097152), Fraction(-189613868625, 128))
    assert by_shape[(14, 14)].finite_js == (Fraction(2268945, 128),)
    for shape in ((4, 28), (6, 30), (6, 42), (14, 14)):
        assert by_shape[shape].functions == ()


def test_dataset_functions_are_reduced():
    # numerator and denominator share no factor; denominators are nonzero
    for rec in table1_data():
        for num, den in rec.functions:
            assert not den.is_zero()
            _, zn = num.primitive_integer()
            _, zd = den.primitive_integer()
            assert len(zx_gcd(zn, zd)) == 1


def test_dataset_json_round_trip():
    assert table1_from_json(table1_to_json()) == table1_data()


# ------------------------------------------------------- classification


EXACT_PINS = [
    (Fraction(351, 4), (4, 28)),
    (Fraction(-38575685889, 16384), (4, 28)),
    (Fraction(-121945, 32), (6, 30)),
    (Fraction(46969655, 32768), (6, 30)),
    (Fraction(3375, 2), (6, 42)),
    (Fraction(-140625, 8), (6, 42)),
    (Fraction(-1159088625, 2097152), (6, 42)),
    (Fraction(-189613868625, 128), (6, 42)),
    (Fraction(2268945, 128), (14, 14)),
    (Fraction(-35937, 4), (12, 12)),
    (Fraction(109503, 64), (12, 12)),
    (Fraction(0), (18, 18)),
]


def test_exact_classifications():
    for j, want in EXACT_PINS:
        res = classify_j(j)
        assert tuple(res.shape) == want, j
        assert res.method == "table"


def test_classify_needs_curve_at_1728():
    with pytest.raises(CurveRequired):
        classify_j(Fraction(1728))


def test_classify_always_contains_2_2():
    rng = random.Random(0xC1A5)
    for _ in range(25):
        j = Fraction(rng.randrange(-10**4, 10**4), rng.randrange(1, 100))
        if j == 1728:
            continue
        res = classify_j(j)
        assert shape_contains(TorsionShape(2, 2), res.shape)
        assert tuple(res.shape) in [tuple(s) for s in class20()]


def test_generic_j_is_2_2():
    res = classify_j(Fraction(5))
    assert tuple(res.shape) == (2, 2)
    assert len(res.matched) == 1 and res.matched[0].witnesses == (Fraction(5),)


def test_family_membership_reports_witnesses():
    matches = {tuple(m.shape): m for m in family_membership(Fraction(2375, 8))}
    assert Fraction(-2) in matches[(6, 18)].witnesses
    assert Fraction(-8) in matches[(6, 6)].witnesses


def test_family_containment_sampled():
    rng = random.Random(0xFA41)
    for rec in table1_data():
        for num, den in rec.functions:
            hits = 0
            while hits < 3:
                t = Fraction(rng.randrange(-50, 51), rng.randrange(1, 51))
                if den(t) == 0:
                    continue
                hits += 1
                j = num(t) / den(t)
                if j == 1728:
                    continue
                got = classify_j(j).shape
                assert shape_contains(rec.shape, got), (tuple(rec.shape), t)


def test_maximality_unique_over_random_j():
    rng = random.Random(0x51AB)
    for _ in range(500):
        j = Fraction(rng.randrange(-10**6, 10**6 + 1),
                     rng.randrange(1, 10**6 + 1))
        if j == 1728:
            continue
        classify_j(j)  # must not raise ClassificationError


def test_classification_json_round_trip():
    for j in (Fraction(2268945, 128), Fraction(5), Fraction(0)):
        res = classify_j(j)
        assert ClassificationResult.from_json(res.to_json()) == res


# ---------------------------------------------------------- j=1728 rule


def test_quartic_twist_parameter_examples():
    assert quartic_twist_parameter(WeierstrassCurve(0, 0, 0, 1, 0)) == 1
    assert quartic_twist_parameter(WeierstrassCurve(0, 0, 0, -4, 0)) == -4
    assert quartic_twist_parameter(
        WeierstrassCurve(0, 0, 0, Fraction(1, 16), 0)) == 1
    with pytest.raises(ValueError, match="1728"):
        quartic_twist_parameter(WeierstrassCurve(0, 0, 0, 0, 1))


def test_quartic_twist_parameter_is_twist_invariant():
    rng = random.Random(0x7157)
    for _ in range(20):
        d = rng.randrange(-300, 300)
        if d == 0:
            continue
        q = Fraction(rng.randrange(1, 12), rng.randrange(1, 12))
        E = WeierstrassCurve(0, 0, 0, Fraction(d) * q ** 4, 0)
        assert quartic_twist_parameter(E) == fourth_power_free(d)


def test_anchor_curves():
    assert tuple(classify_curve(WeierstrassCurve(0, 0, 0, 4, 0)).shape) == (4, 4)
    assert tuple(classify_curve(WeierstrassCurve(0, 0, 0, 2, 0)).shape) == (2, 2)


def test_classify_curve_away_from_1728_uses_j():
    E = WeierstrassCurve(1, -1, 1, -3, 3)
    res = classify_curve(E)
    assert tuple(res.shape) == (2, 14)
    assert res.method == "table"
    assert res.input_j == invariants(E).j


def test_quartic_rule_against_independent_oracle():
    # every fourth-power-free |d| <= 50, both routes must agree exactly
    for d in range(-50, 51):
        if d == 0 or fourth_power_free(d) != d:
            continue
        E = WeierstrassCurve(0, 0, 0, d, 0)
        want = (4, 4) if full_four_torsion_oracle(d) else (2, 2)
        assert tuple(classify_curve(E).shape) == want, d


def test_classify_curve_rejects_singular():
    with pytest.raises(ValueError, match="singular"):
        classify_curve(WeierstrassCurve(0, 0, 0, 0, 0))


# -------------------------------------------------------------- mc filter


def test_filter_ruled_out_degree_seven():
    res = mc_s3_filter(PolyQ([-2, 0, 0, 0, 0, 0, 0, 1]), 30, 0xF117E6)
    assert res.ruled_out
    assert res.witness_degree is not None and 6 % res.witness_degree != 0
    assert res.seed == 0xF117E6 and res.trials == 30


def test_filter_plausible_small_fields():
    for coeffs in ([-2, 0, 1], [-2, 0, 0, 1]):
        res = mc_s3_filter(PolyQ(coeffs), 30, 0xF117E6)
        assert not res.ruled_out
        assert res.witness_prime is None


def test_filter_deterministic_and_json():
    a = mc_s3_filter(PolyQ([-1, -1, 0, 0, 0, 1]), 12, 31337)
    b = mc_s3_filter(PolyQ([-1, -1, 0, 0, 0, 1]), 12, 31337)
    assert a == b
    assert a.to_json()["verdict"] in ("ruled-out", "plausible")


def test_filter_handles_repeated_factors():
    sq = PolyQ([-2, 0, 1]) * PolyQ([-2, 0, 1])
    assert not mc_s3_filter(sq, 10, 5).ruled_out


def test_filter_input_validation():
    with pytest.raises(ValueError, match="nonzero"):
        mc_s3_filter(PolyQ([]), 5, 1)
    with pytest.raises(ValueError, match="trials"):
        mc_s3_filter(PolyQ([1, 1]), 0, 1)


# -------------------------------------------------------------- localcheck


def test_localcheck_trivial_two_two():
    E = WeierstrassCurve(0, -1, 1, -10, -20)
    report = local_injection_check(E, TorsionShape(2, 2), [5, 7, 13, 17])
    assert report.all_pass
    assert all(e.status == "pass" for e in report.entries)


def test_localcheck_large_orders():
    r = local_injection_check(curve_from_j(Fraction(0)),
                              TorsionShape(18, 18), [7])
    assert r.all_pass and r.entries[0].checked_order == 324
    assert r.entries[0].group_order % 324 == 0
    r = local_injection_check(curve_from_j(Fraction(351, 4)),
                              TorsionShape(4, 28), [11])
    assert r.all_pass and r.entries[0].checked_order == 112


def test_localcheck_skips_bad_reduction():
    E = WeierstrassCurve(0, -1, 1, -10, -20)  # bad at 11
    r = local_injection_check(E, TorsionShape(2, 2), [11])
    assert r.entries[0].status == "skipped"
    assert r.all_pass  # skips are not failures


def test_localcheck_falsifies_wrong_claim():
    E = WeierstrassCurve(0, -1, 1, -10, -20)
    r = local_injection_check(E, TorsionShape(18, 18), [5, 7, 13])
    assert not r.all_pass


def test_localcheck_rejects_tiny_primes():
    E = WeierstrassCurve(0, 0, 0, 4, 0)
    with pytest.raises(ValueError, match="at least 5"):
        local_injection_check(E, TorsionShape(2, 2), [3])


def test_localcheck_passes_on_classified_fixtures():
    for j, _shape in EXACT_PINS:
        E = curve_from_j(j)
        res = classify_j(j) if j != 1728 else None
        primes = good_primes(E, 5, start=5)
        report = local_injection_check(E, res.shape, primes)
        assert report.all_pass, j
