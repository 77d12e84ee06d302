"""Inertia, signature-alternating profiles, and the Betti inequalities."""

import random
from fractions import Fraction

import pytest

from chigenus.betti import (
    BettiProfile,
    InertiaTriple,
    betti_inequality_check,
    cs_classification,
    inertia,
    signature_alternating,
    tolman_unimodality_report,
)
from chigenus.catalog import projective_space


def test_inertia_of_diagonal_matrices():
    assert inertia([[1, 0], [0, -1]]) == InertiaTriple(1, 1, 0)
    assert inertia([[0]]) == InertiaTriple(0, 0, 1)
    rng = random.Random(2)
    for _ in range(30):
        diag = [rng.randint(-3, 3) for _ in range(rng.randint(1, 6))]
        matrix = [
            [Fraction(diag[i]) if i == j else Fraction(0) for j in range(len(diag))]
            for i in range(len(diag))
        ]
        expected = InertiaTriple(
            sum(1 for d in diag if d > 0),
            sum(1 for d in diag if d < 0),
            sum(1 for d in diag if d == 0),
        )
        assert inertia(matrix) == expected


def test_hyperbolic_pair():
    assert inertia([[0, 1], [1, 0]]) == InertiaTriple(1, 1, 0)
    assert inertia([[0, 0, 2], [0, 0, 0], [2, 0, 0]]) == InertiaTriple(1, 1, 1)


def test_inertia_rejects_bad_input():
    with pytest.raises(ValueError, match="symmetric"):
        inertia([[0, 1], [2, 0]])
    with pytest.raises(ValueError, match="square"):
        inertia([[0, 1]])


def random_symmetric(rng: random.Random, size: int) -> list[list[Fraction]]:
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            matrix[i][j] = matrix[j][i] = value
    return matrix


def random_invertible(rng: random.Random, size: int) -> list[list[Fraction]]:
    while True:
        candidate = [
            [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(size)]
            for _ in range(size)
        ]
        # invertibility via row reduction
        work = [row[:] for row in candidate]
        ok = True
        for c in range(size):
            pivot = next((r for r in range(c, size) if work[r][c] != 0), None)
            if pivot is None:
                ok = False
                break
            work[c], work[pivot] = work[pivot], work[c]
            for r in range(c + 1, size):
                factor = work[r][c] / work[c][c]
                work[r] = [v - factor * w for v, w in zip(work[r], work[c])]
        if ok:
            return candidate


def congruent(matrix, transform):
    size = len(matrix)
    rows = range(size)
    middle = [
        [sum(transform[k][i] * matrix[k][j] for k in rows) for j in rows] for i in rows
    ]
    return [[sum(middle[i][k] * transform[k][j] for k in rows) for j in rows] for i in rows]


def test_sylvester_invariance():
    rng = random.Random(100)
    for _ in range(100):
        size = rng.randint(1, 6)
        matrix = random_symmetric(rng, size)
        transform = random_invertible(rng, size)
        assert inertia(congruent(matrix, transform)) == inertia(matrix)


def test_signature_alternating_examples():
    assert signature_alternating(BettiProfile(4, (1, 0, 1, 0, 1), 1))
    assert not signature_alternating(BettiProfile(4, (1, 0, 22, 0, 1), -16))
    assert signature_alternating(BettiProfile(0, (1,), 1))


def test_signature_alternating_requires_sigma():
    with pytest.raises(ValueError, match="no signature"):
        signature_alternating(BettiProfile(4, (1, 0, 1, 0, 1)))


def test_profile_validation():
    with pytest.raises(ValueError, match="even"):
        BettiProfile(3, (1, 0, 0, 1))
    with pytest.raises(ValueError, match="Poincare"):
        BettiProfile(4, (1, 0, 2, 0, 3), 0)
    with pytest.raises(ValueError, match="divisible by 4"):
        BettiProfile(6, (1, 0, 1, 2, 1, 0, 1), 4)
    with pytest.raises(ValueError, match="non-negative"):
        BettiProfile(2, (1, -1, 1), 0)


def test_dimension_2_mod_4_is_automatically_alternating():
    # palindromic even Betti numbers cancel pairwise, so sigma = 0 suffices
    assert signature_alternating(BettiProfile(6, (1, 0, 5, 2, 5, 0, 1), 0))


def test_cs_classification():
    assert cs_classification(InertiaTriple(1, 5, 0)) == (True, False)
    assert cs_classification(InertiaTriple(3, 0, 0)) == (False, True)
    assert cs_classification(InertiaTriple(1, 0, 0)) == (True, True)
    with pytest.raises(ValueError, match="b_plus >= 1"):
        cs_classification(InertiaTriple(0, 2, 0))


def test_betti_inequalities_projective_four_space():
    profile = projective_space(4).betti
    report = betti_inequality_check(profile)
    assert report.alternating
    assert (report.b_plus, report.b_minus) == (1, 0)
    assert report.upper.holds and report.upper.equality
    assert report.lower.holds and report.lower.equality


def test_betti_inequalities_dimension_eight_profile():
    profile = BettiProfile(8, (1, 0, 2, 0, 4, 0, 2, 0, 1), 2)
    report = betti_inequality_check(profile)
    assert report.alternating
    assert report.b_plus == 3 and report.b_minus == 1
    assert report.upper.lhs == 2 and report.upper.rhs == 4
    assert report.upper.holds and not report.upper.equality
    assert not report.lower.equality


def test_betti_inequalities_dimension_four():
    profile = BettiProfile(4, (1, 0, 3, 0, 1), 1)
    report = betti_inequality_check(profile)
    assert report.lower.lhs == 3 and report.lower.rhs == 1  # b_2 >= b_0
    assert report.lower.holds and not report.lower.equality
    assert report.upper.k == 0 and report.upper.equality  # empty sums


def test_betti_inequalities_parity_error():
    with pytest.raises(ValueError, match="parity"):
        betti_inequality_check(BettiProfile(4, (1, 0, 2, 0, 1), 1))


def test_betti_inequalities_signature_bound():
    with pytest.raises(ValueError, match="exceeds"):
        betti_inequality_check(BettiProfile(4, (1, 0, 2, 0, 1), 4))


def test_b_plus_minus_reconstruction():
    rng = random.Random(41)
    for _ in range(50):
        b_plus = rng.randint(1, 6)
        b_minus = rng.randint(0, 6)
        middle = b_plus + b_minus
        profile = BettiProfile(4, (1, 0, middle, 0, 1), b_plus - b_minus)
        report = betti_inequality_check(profile)
        assert report.b_plus == b_plus and report.b_minus == b_minus
        assert report.b_plus + report.b_minus == middle
        assert report.b_plus - report.b_minus == profile.sigma


def test_unimodality_reports():
    assert tolman_unimodality_report(projective_space(4).betti).holds
    failing = tolman_unimodality_report(BettiProfile(8, (1, 0, 3, 0, 2, 0, 3, 0, 1), 0))
    assert not failing.holds
    assert failing.first_violation == 2
    assert failing.label == "conjecture diagnostic"
    assert tolman_unimodality_report(BettiProfile(8, (1, 0, 1, 0, 2, 0, 1, 0, 1), 2)).holds
