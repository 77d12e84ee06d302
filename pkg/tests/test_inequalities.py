"""Inequality reports, positivity predicates, and the curvature bound."""

from fractions import Fraction

import pytest

from chigenus.catalog import ManifoldData, hypersurface, projective_space
from chigenus.chern import ChernPolynomial
from chigenus.inequalities import (
    a_polynomial,
    check_inequalities,
    miyaoka_yau_check,
    positivity_predicate,
    projective_chern_numbers,
)


def test_a0_is_top_class():
    for n in (1, 2, 5):
        assert a_polynomial(0, n, 1) == ChernPolynomial.monomial((n,))


def test_a1_surface():
    expected = ChernPolynomial(2, {(2,): Fraction(1, 12), (1, 1): Fraction(1, 12)})
    assert a_polynomial(1, 2, 1) == expected


def test_a1_threefold_signed():
    # (-1)^3 K_2 at n = 3: -(1/12)(6 c_3 + c_1 c_2)
    expected = ChernPolynomial(3, {(3,): Fraction(-1, 2), (2, 1): Fraction(-1, 12)})
    assert a_polynomial(1, 3, -1) == expected


def test_index_range_enforced():
    with pytest.raises(ValueError):
        a_polynomial(2, 3)
    with pytest.raises(ValueError):
        a_polynomial(-1, 3)
    with pytest.raises(ValueError):
        a_polynomial(0, 3, epsilon=2)


def test_projective_spaces_attain_every_equality():
    for n in range(1, 9):
        reports = check_inequalities(projective_space(n), 1)
        assert len(reports) == n // 2 + 1
        for r in reports:
            assert r.holds and r.equality and r.hypothesis_met
            assert r.lhs == r.rhs
            assert r.equality_witness == tuple(range(2 * r.index, n + 1))


def test_first_report_restates_euler_bound():
    for n in (2, 3, 5):
        r0 = check_inequalities(projective_space(n), 1)[0]
        assert r0.scale == 1
        assert r0.rhs == n + 1


def test_surface_cleared_form():
    r1 = check_inequalities(projective_space(2), 1)[1]
    assert (r1.lhs, r1.rhs, r1.scale) == (12, 12, 12)


def test_second_bound_is_cleared_cubic():
    for n in range(2, 9):
        r1 = check_inequalities(projective_space(n), 1)[1]
        assert r1.rhs == 2 * (n - 1) * n * (n + 1)


def test_quartic_surface_strict():
    reports = check_inequalities(hypersurface(2, 4), 1)
    r0 = reports[0]
    assert (r0.lhs, r0.rhs) == (24, 3)
    assert r0.holds and not r0.equality and r0.hypothesis_met


def test_rhs_agrees_with_catalog_integration():
    # substituting binomials must equal integrating over the catalog model
    for n in range(1, 9):
        assert projective_chern_numbers(n) == projective_space(n).chern_numbers


def test_failed_hypothesis_is_flagged_not_rejected():
    torus = hypersurface(1, 3)  # genus-one curve: chi_y vanishes identically
    reports = check_inequalities(torus, 1)
    assert not reports[0].hypothesis_met
    assert not reports[0].holds  # 0 < 2: the bound genuinely fails here


def test_positivity_examples():
    assert positivity_predicate([1, -1, 1, -1]) == (True, False)
    assert positivity_predicate([2, -20, 2]) == (True, True)
    assert positivity_predicate([1, 1]) == (False, False)


def test_equality_criterion_implies_numeric_equality():
    # chi-vector (1, -5, 1): the i=1 criterion holds (chi^2 = 1) while the
    # i=0 one fails, and lhs == rhs exactly where the criterion says so
    synthetic = ManifoldData(2, {(2,): Fraction(7), (1, 1): Fraction(5)})
    from chigenus.engine import chi_vector

    assert chi_vector(synthetic) == [Fraction(1), Fraction(-5), Fraction(1)]
    r0, r1 = check_inequalities(synthetic, 1)
    assert not r0.equality and r0.lhs > r0.rhs
    assert r1.equality and r1.lhs == r1.rhs


def test_signed_positivity_uses_global_sign():
    reports = check_inequalities(projective_space(3), -1)
    assert not reports[0].hypothesis_met  # P^3 is chi-positive, not signed


def test_curvature_bound_ball_quotient_numbers():
    ball = ManifoldData(2, {(2,): Fraction(3), (1, 1): Fraction(9)})
    report = miyaoka_yau_check(ball)
    assert report.holds and report.equality
    first, second = report.surface
    assert first.equality and first.lhs == first.rhs == 9
    assert second.equality and second.lhs == second.rhs == 12


def test_curvature_bound_quartic():
    report = miyaoka_yau_check(hypersurface(2, 4))
    assert report.holds and not report.equality
    assert report.lhs == 24 and report.rhs == 0


def test_curvature_bound_higher_dimension():
    report = miyaoka_yau_check(projective_space(3))
    # (-1)^3 c_2 c_1 [P^3] = -24*... both sides computed exactly
    assert report.n == 3
    assert report.lhs == -projective_space(3).chern_numbers[(2, 1)]
    assert report.surface == ()


def test_curvature_bound_needs_surface_dimension():
    with pytest.raises(ValueError):
        miyaoka_yau_check(projective_space(1))
