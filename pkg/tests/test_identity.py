"""Identity checks, lemma suite, report serialization."""

import json
import math
from fractions import Fraction

import pytest

from vandiff.divdiff import divided_difference
from vandiff.exact import MultiPoly, var_family
from vandiff.funcs import Exponential, Polynomial, Sine
from vandiff.identity import (
    DEFAULT_SEED,
    LEMMA_GROUPS,
    IdentityReport,
    ZeroPropertyFunction,
    _exact_report,
    _float_verdict,
    check_chain_rule,
    check_identity_exact,
    check_identity_numeric,
    check_reduced_vertex_sum,
    check_vertex_sum,
    check_volume_symbolic,
    divided_difference_via_integral,
    exact_integral_value,
    exact_suite_points,
    floating_suite_points,
    json_value,
    random_increasing_floats,
    random_increasing_rationals,
    run_lemma_suite,
    suite_passed,
)
from vandiff.points import PointSequence
from vandiff.symfun import vandermonde_poly

import random


def tp(v):
    return MultiPoly.variable(v)


def monomial(k, scale=1):
    return Polynomial((0,) * k + (Fraction(scale),))


# -- exact pipeline ---------------------------------------------------------------


def test_exact_identity_half_square():
    x = PointSequence.exact([0, 1, 2])
    report = check_identity_exact(x, monomial(2, Fraction(1, 2)))
    assert report.passed
    assert report.lhs == report.rhs == 1
    assert report.abs_err == report.rel_err == 0.0
    assert report.config["pipeline"] == "exact"


def test_exact_identity_cube():
    x = PointSequence.exact([0, 1, 2])
    report = check_identity_exact(x, monomial(3))
    assert report.passed and report.lhs == 12


def test_exact_identity_one_dimension():
    x = PointSequence.exact([0, 1])
    report = check_identity_exact(x, monomial(5))
    assert report.passed and report.lhs == 1


def test_exact_integral_value_is_fundamental_theorem_for_n1():
    x = PointSequence.exact([0, 1])
    assert exact_integral_value(x, monomial(5)) == 1
    assert exact_integral_value(x, Polynomial((3, 2))) == 2


def test_exact_pipeline_rejects_wrong_inputs():
    with pytest.raises(TypeError):
        check_identity_exact(PointSequence.exact([0, 1]), Exponential(1.0))
    with pytest.raises(ValueError):
        check_identity_exact(PointSequence.floating([0, 1]), monomial(2))


def test_exact_identity_random_cases_multiple_dimensions():
    rng = random.Random(321)
    for n in range(1, 5):
        pts = random_increasing_rationals(rng, n + 1, max_abs=12)
        coeffs = tuple(Fraction(rng.randint(-6, 6)) for _ in range(n + 3)) + (Fraction(2),)
        report = check_identity_exact(pts, Polynomial(coeffs))
        assert report.passed, report


# -- floating pipeline --------------------------------------------------------------


def test_numeric_identity_exponential_n1():
    report = check_identity_numeric(PointSequence.floating([0, 1]), Exponential(1.0), order=16)
    assert report.passed
    assert report.rel_err < 1e-13
    assert report.lhs == pytest.approx(math.e - 1, rel=1e-13)


def test_numeric_identity_matches_volume_case():
    x = PointSequence.floating([0, 1, 2])
    report = check_identity_numeric(x, monomial(2, Fraction(1, 2)), order=10)
    assert report.passed
    assert report.lhs == pytest.approx(1.0, rel=1e-12)


def test_numeric_identity_sine_n3():
    x = PointSequence.floating([0, 1, 2, 4])
    report = check_identity_numeric(x, Sine(1.0), order=24)
    assert report.passed and report.tolerance == 1e-9


def test_numeric_identity_zero_reference_uses_absolute_fallback():
    # constant f: n-th derivative vanishes, both sides are zero
    report = check_identity_numeric(PointSequence.floating([0, 1]), Polynomial((5,)), order=8)
    assert report.passed
    assert report.rhs == 0.0
    assert report.abs_err == report.rel_err


def test_numeric_report_shape():
    report = check_identity_numeric(
        PointSequence.floating([0, 1]), Exponential(1.0), order=12, seed=77
    )
    assert report.name == "integral-vs-divided-difference"
    assert report.seed == 77
    assert report.config["order"] == 12
    assert report.config["pipeline"] == "floating"
    assert "workers" not in report.config


# -- volume identity ------------------------------------------------------------------


def test_volume_identity_first_dimensions():
    for n in range(1, 5):
        report = check_volume_symbolic(n)
        assert report.passed, report
        assert isinstance(report.lhs, MultiPoly)
        assert report.lhs == report.rhs


def test_volume_closed_form_n2():
    x1, x2, x3 = (tp(v) for v in var_family("x", 3))
    want = (x2 - x1) * (x3 - x1) * (x3 - x2) * Fraction(1, 2)
    assert check_volume_symbolic(2).lhs == want


def test_volume_rejects_bad_dimension():
    with pytest.raises(ValueError):
        check_volume_symbolic(0)


# -- divided difference via the integral route ------------------------------------------


def test_via_integral_half_square():
    y = PointSequence.floating([1, 2, 3])
    got = divided_difference_via_integral(y, monomial(2, Fraction(1, 2)), order=12)
    assert got == pytest.approx(0.5, abs=1e-12)


def test_via_integral_one_dimension_exponential():
    y = PointSequence.floating([0, 1])
    got = divided_difference_via_integral(y, Exponential(1.0), order=20)
    assert got == pytest.approx(math.e - 1, rel=1e-13)


def test_via_integral_agrees_with_table():
    y = PointSequence.floating([1, 2, 3])
    f = Exponential(1.0)
    got = divided_difference_via_integral(y, f, order=20)
    assert got == pytest.approx(divided_difference(y, f), rel=1e-10)


# -- chain rule and vertex sums ----------------------------------------------------------


def test_chain_rule_trivial_psi():
    report = check_chain_rule(1, MultiPoly.one(), monomial(2))
    assert report.passed


def test_chain_rule_difference_psi():
    t1, t2 = var_family("t", 2)
    report = check_chain_rule(2, tp(t2) - tp(t1), monomial(3))
    assert report.passed
    assert report.name == "product-chain-rule"


def test_chain_rule_with_difference_product_psi():
    report = check_chain_rule(3, vandermonde_poly(3), monomial(4))
    assert report.passed


def test_chain_rule_rejects_transcendental():
    with pytest.raises(TypeError):
        check_chain_rule(2, MultiPoly.one(), Exponential(1.0))


def test_vertex_sum_n1_is_fundamental_theorem():
    t1 = var_family("t", 1)[0]
    a, b = Fraction(-1, 2), Fraction(3)
    report = check_vertex_sum([(a, b)], tp(t1) ** 2)
    assert report.passed
    assert report.lhs == b**2 - a**2


def test_vertex_sum_n2_product():
    t1, t2 = var_family("t", 2)
    report = check_vertex_sum([(Fraction(0), Fraction(1)), (Fraction(1), Fraction(2))], tp(t1) * tp(t2))
    assert report.passed and report.lhs == 1


def test_zero_property_function():
    tvars = tuple(var_family("t", 3))
    good = ZeroPropertyFunction(vandermonde_poly(3) * (tp(tvars[0]) + 2), tvars)
    assert good.holds()
    bad = ZeroPropertyFunction(tp(tvars[0]) + tp(tvars[1]), tvars)
    assert not bad.holds()
    assert good.eval((Fraction(0), Fraction(1), Fraction(2))) == 4


def test_reduced_vertex_sum_constant_g():
    x = PointSequence.exact([0, 1, 2])
    report = check_reduced_vertex_sum(x, MultiPoly.one())
    assert report.passed
    assert report.lhs == 0 and report.rhs == 0
    assert report.config["zero_property"] is True
    assert report.config["full_sum"] == 0


def test_reduced_vertex_sum_linear_g():
    t1, t2 = var_family("t", 2)
    x = PointSequence.exact([0, 1, 2])
    report = check_reduced_vertex_sum(x, tp(t1) + tp(t2))
    assert report.passed
    # reduced and full sums agree with the box integral
    assert report.rhs == report.config["full_sum"] == report.lhs


def test_reduced_vertex_sum_needs_exact_points():
    with pytest.raises(ValueError):
        check_reduced_vertex_sum(PointSequence.floating([0, 1]), MultiPoly.one())


# -- seeded generators ---------------------------------------------------------------


def test_random_rationals_are_increasing_and_reproducible():
    a = random_increasing_rationals(random.Random(11), 6)
    b = random_increasing_rationals(random.Random(11), 6)
    assert a == b
    assert a.is_exact and len(a) == 6
    assert all(y > x for x, y in zip(a.values, a.values[1:]))


def test_random_floats_respect_range_and_gap():
    pts = random_increasing_floats(random.Random(3), 8, lo=-2.0, hi=3.0, min_gap=0.2)
    assert len(pts) == 8
    assert pts[0] >= -2.0 and pts[-1] <= 3.0
    gaps = [b - a for a, b in zip(pts.values, pts.values[1:])]
    assert min(gaps) >= 0.2 - 1e-12


def test_random_floats_reject_impossible_gap():
    with pytest.raises(ValueError):
        random_increasing_floats(random.Random(0), 30, lo=0.0, hi=1.0, min_gap=0.2)


def test_suite_points_are_deterministic_and_independent_per_n():
    first = exact_suite_points(3, count=5)
    second = exact_suite_points(3, count=5)
    assert first == second
    assert len(first) == 5 and all(p.n == 3 for p in first)
    # a different n draws from its own stream, not a shifted copy
    other = exact_suite_points(4, count=5)
    assert all(p.n == 4 for p in other)

    fa = floating_suite_points(2, count=4)
    fb = floating_suite_points(2, count=4)
    assert fa == fb
    assert all(not p.is_exact and p.n == 2 for p in fa)


def test_floating_suite_stays_in_documented_range():
    for n in range(1, 6):
        for pts in floating_suite_points(n):
            assert pts[0] >= -2.0 and pts[-1] <= 3.0
            gaps = [b - a for a, b in zip(pts.values, pts.values[1:])]
            assert min(gaps) >= 0.2 - 1e-12


# -- lemma suite -----------------------------------------------------------------


def test_lemma_suite_small_run_passes():
    reports = run_lemma_suite(3, cases=4)
    assert reports and suite_passed(reports)
    names = [r.name for r in reports]
    # one instance of every group must be present
    for group in LEMMA_GROUPS:
        assert any(name.startswith(group + "[") for name in names), group


def test_lemma_suite_group_counts():
    reports = run_lemma_suite(3, groups=["esym-derivative", "omega-derivative"], cases=2)
    esym = [r for r in reports if r.name.startswith("esym-derivative")]
    om = [r for r in reports if r.name.startswith("omega-derivative")]
    assert len(esym) == 6  # m=1..3, k=1..m
    assert len(om) == 10  # m=0..3, k=0..m


def test_lemma_suite_unknown_group():
    with pytest.raises(ValueError, match="unknown lemma group"):
        run_lemma_suite(2, groups=["nosuch"])


def test_lemma_suite_subset_reproduces_full_run_cases():
    full = run_lemma_suite(3, cases=3)
    only = run_lemma_suite(3, groups=["newton"], cases=3)
    from_full = [r for r in full if r.name.startswith("newton[")]
    assert only == from_full


def test_lemma_suite_seed_changes_cases_but_not_verdict():
    a = run_lemma_suite(2, groups=["vertex-sum"], seed=1, cases=3)
    b = run_lemma_suite(2, groups=["vertex-sum"], seed=2, cases=3)
    assert suite_passed(a) and suite_passed(b)
    assert [r.config["bounds"] for r in a] != [r.config["bounds"] for r in b]


# -- reports and serialization ----------------------------------------------------


def test_report_key_order():
    report = check_identity_exact(PointSequence.exact([0, 1]), monomial(2))
    assert list(report.to_dict().keys()) == [
        "name",
        "n",
        "passed",
        "lhs",
        "rhs",
        "abs_err",
        "rel_err",
        "tolerance",
        "seed",
        "config",
    ]


def test_json_value_conversions():
    assert json_value(Fraction(1, 3)) == "1/3"
    assert json_value(Fraction(4)) == "4"
    assert json_value(vandermonde_poly(2)) == "-t1 + t2"
    assert json_value(PointSequence.exact([0, 1])) == ["0", "1"]
    assert json_value({"a": [Fraction(1, 2), 3]}) == {"a": ["1/2", 3]}
    assert json_value(1.5) == 1.5


def test_reports_serialize_to_json():
    reports = run_lemma_suite(2, cases=2)
    reports.append(check_identity_numeric(PointSequence.floating([0, 1]), Exponential(1.0)))
    for r in reports:
        line = json.dumps(r.to_dict(), separators=(",", ":"))
        assert json.loads(line)["name"] == r.name


def test_float_verdict_zero_guard():
    abs_err, rel_err, passed = _float_verdict(5e-13, 0.0, 1e-9)
    assert abs_err == rel_err == 5e-13 and passed
    abs_err, rel_err, passed = _float_verdict(5e-12, 0.0, 1e-9)
    assert not passed
    abs_err, rel_err, passed = _float_verdict(1.0 + 1e-10, 1.0, 1e-9)
    assert passed and rel_err == pytest.approx(1e-10, rel=1e-3)


def test_exact_report_failure_carries_magnitude():
    report = _exact_report("demo", 1, Fraction(3), Fraction(5))
    assert not report.passed
    assert report.abs_err == report.rel_err == 2.0
    p = tp(var_family("t", 1)[0])
    report = _exact_report("demo", 1, 2 * p, -p)
    assert not report.passed
    assert report.abs_err == 3.0


def test_default_seed_in_suite_reports():
    reports = run_lemma_suite(1, groups=["pure-vanish"])
    assert reports[0].seed == DEFAULT_SEED
