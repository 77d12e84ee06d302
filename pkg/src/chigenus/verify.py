"""The built-in verification battery behind ``genus verify-paper``.

Each check recomputes a published identity or bound from scratch and
compares exactly; the table is deterministic, so two runs of the command
produce byte-identical output.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable

from . import betti as betti_mod
from . import catalog, engine, inequalities, kexpansion, localization
from .ypoly import YPolynomial


def _check_k_closed_forms() -> bool:
    return all(kexpansion.verify_closed_forms(n).all_match for n in range(4, 9))


def _check_projective_genus() -> bool:
    for n in range(1, 11):
        expected = YPolynomial({p: (-1) ** p for p in range(n + 1)})
        if engine.genus_polynomial(catalog.projective_space(n)) != expected:
            return False
    return True


def _check_duality() -> bool:
    return all(
        engine.check_duality(data)
        for _, data in catalog.standard_catalog()
        if data.dimension <= 8
    )


def _check_inequality_optimality() -> bool:
    for n in range(1, 9):
        reports = inequalities.check_inequalities(catalog.projective_space(n), 1)
        if not all(r.holds and r.equality and r.lhs == r.rhs for r in reports):
            return False
    p2 = inequalities.check_inequalities(catalog.projective_space(2), 1)[1]
    return p2.lhs == 12 and p2.rhs == 12 and p2.rhs == 2 * 1 * 2 * 3


def _check_binomial_transform() -> bool:
    for _, data in catalog.standard_catalog():
        if data.dimension < 1:
            continue
        chi = engine.chi_vector(data)
        table = kexpansion.k_coefficients(data.dimension)
        evaluated = [
            poly.evaluate(data.chern_numbers).constant_value() for poly in table.k_polys
        ]
        if kexpansion.binomial_transform(chi) != evaluated:
            return False
    return True


def _check_localization() -> bool:
    for n in range(1, 7):
        action = catalog.standard_pn_action(n)
        genus_route = engine.chi_minus_y(catalog.projective_space(n))
        if localization.localized_chi_minus_y(action) != genus_route:
            return False
        expected = YPolynomial({2 * i: 1 for i in range(n + 1)})
        if localization.novikov_polynomial(action) != expected:
            return False
    return True


def _check_signature_chain() -> bool:
    for k in (1, 2, 3):
        if localization.localized_signature(catalog.standard_pn_action(2 * k)) != 1:
            return False
    for _, action in catalog.standard_actions():
        report = localization.signature_identity_check(action)
        if report.applicable and not report.holds:
            return False
        chi = localization.localized_chi_minus_y(action)
        if chi.evaluate(-1) != localization.localized_signature(action):
            return False
    return True


def _check_k3() -> bool:
    k3 = catalog.hypersurface(2, 4)
    if engine.chi_vector(k3) != [Fraction(2), Fraction(-20), Fraction(2)]:
        return False
    if engine.chi_minus_y(k3) != YPolynomial({0: 2, 1: 20, 2: 2}):
        return False
    if engine.specialize(k3, "todd") != 2:
        return False
    if engine.specialize(k3, "signature") != -16:
        return False
    if engine.specialize(k3, "euler") != 24:
        return False
    profile = k3.betti
    assert profile is not None
    if betti_mod.signature_alternating(profile):
        return False
    return True


def _brute_force_eulerian(i: int) -> YPolynomial:
    counts: dict[int, int] = {}
    for perm in permutations(range(1, i + 1)):
        descents = sum(1 for a, b in zip(perm, perm[1:]) if a > b)
        counts[descents] = counts.get(descents, 0) + 1
    return YPolynomial(counts)


def _check_eulerian() -> bool:
    if not kexpansion.eulerian_identity_check(8):
        return False
    polys = kexpansion.eulerian_polynomials(6)
    return all(polys[i - 1] == _brute_force_eulerian(i) for i in range(1, 7))


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def _random_profile(rng: random.Random) -> betti_mod.BettiProfile:
    """A random connected Poincare-dual signature-alternating profile.

    b^+ and b^- are chosen first; one free even Betti number is then
    adjusted so the alternating sum reproduces the signature. In dimension 4
    the constraints force b^+ = 1.
    """
    m = rng.randint(1, 4)
    b_plus = 1 if m == 1 else rng.randint(1, 5)
    b_minus = rng.randint(0, 5)
    sigma = b_plus - b_minus
    middle = b_plus + b_minus
    # required value of sum_{j=1}^{m-1} (-1)^j E_j, with E_j = b_{2j}
    target = (sigma - (-1) ** m * middle) // 2 - 1
    lower = [1] + [rng.randint(0, 6) for _ in range(m - 1)]
    if m == 1:
        if target != 0:
            raise AssertionError("dimension-4 alternating profiles force b_plus = 1")
    else:
        current = sum((-1) ** j * lower[j] for j in range(1, m))
        delta = target - current
        if delta > 0:
            if m >= 3:
                lower[2] += delta
            elif lower[1] >= delta:
                lower[1] -= delta
            else:
                return _random_profile(rng)
        elif delta < 0:
            lower[1] += -delta
    even = lower + [middle] + list(reversed(lower))
    betti = []
    for j, value in enumerate(even):
        betti.append(value)
        if j < len(even) - 1:
            betti.append(0)
    return betti_mod.BettiProfile(4 * m, tuple(betti), sigma)


def _check_inertia_suite() -> bool:
    rng = random.Random(20240517)
    for _ in range(100):
        size = rng.randint(1, 5)
        base = [[Fraction(0)] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                value = _random_rational(rng)
                base[i][j] = value
                base[j][i] = value
        reference = betti_mod.inertia(base)
        transform = _random_invertible(rng, size)
        congruent = _congruence(base, transform)
        if betti_mod.inertia(congruent) != reference:
            return False
    for triple, expected in (
        (betti_mod.InertiaTriple(1, 5, 0), (True, False)),
        (betti_mod.InertiaTriple(3, 0, 0), (False, True)),
        (betti_mod.InertiaTriple(1, 0, 0), (True, True)),
    ):
        if tuple(betti_mod.cs_classification(triple)) != expected:
            return False
    for _ in range(50):
        profile = _random_profile(rng)
        report = betti_mod.betti_inequality_check(profile)
        status = betti_mod.cs_classification(
            betti_mod.InertiaTriple(report.b_plus, report.b_minus, 0)
        )
        if report.upper.equality != status.reverse_cs:
            return False
        if report.lower.equality != status.cs:
            return False
    return True


def _random_invertible(rng: random.Random, size: int) -> list[list[Fraction]]:
    while True:
        matrix = [[_random_rational(rng) for _ in range(size)] for _ in range(size)]
        if _determinant(matrix) != 0:
            return matrix


def _determinant(matrix: list[list[Fraction]]) -> Fraction:
    size = len(matrix)
    work = [row[:] for row in matrix]
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if work[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            det = -det
        det *= work[c][c]
        inv = 1 / work[c][c]
        for r in range(c + 1, size):
            factor = work[r][c] * inv
            work[r] = [v - factor * w for v, w in zip(work[r], work[c])]
    return det


def _congruence(
    matrix: list[list[Fraction]], transform: list[list[Fraction]]
) -> list[list[Fraction]]:
    size = len(matrix)
    middle = [
        [sum(transform[k][i] * matrix[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]
    return [
        [sum(middle[i][k] * transform[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


CHECKS: tuple[tuple[str, str, Callable[[], bool]], ...] = (
    (
        "k-closed-forms",
        "computed K_0..K_4 match their closed forms for n = 4..8",
        _check_k_closed_forms,
    ),
    (
        "projective-genus",
        "chi_y of P^n equals sum of (-y)^p for n <= 10",
        _check_projective_genus,
    ),
    (
        "duality",
        "chi^p = (-1)^n chi^{n-p} on every catalog manifold of dimension <= 8",
        _check_duality,
    ),
    (
        "inequality-optimality",
        "P^n attains equality in every inequality; cleared i=1 bound is 2(n-1)n(n+1)",
        _check_inequality_optimality,
    ),
    (
        "binomial-transform",
        "binomial transform of the chi-vector equals the evaluated K_j on the catalog",
        _check_binomial_transform,
    ),
    (
        "localization",
        "fixed-point localization of P^n actions reproduces the genus and Betti numbers",
        _check_localization,
    ),
    (
        "signature-chain",
        "localized signatures, the alternating-sum identity, and the y = -1 specialization agree",
        _check_signature_chain,
    ),
    (
        "k3-cross-check",
        "the quartic surface has modified genus (2, 20, 2), Todd 2, signature -16, Euler 24, and is not signature-alternating",
        _check_k3,
    ),
    (
        "eulerian-identity",
        "the reciprocal series is generated by the Eulerian polynomials (brute-forced for i <= 6)",
        _check_eulerian,
    ),
    (
        "inertia-suite",
        "inertia is congruence-invariant; equality cases match the Cauchy-Schwarz classification",
        _check_inertia_suite,
    ),
)


def run_all() -> list[dict[str, Any]]:
    results = []
    for key, statement, check in CHECKS:
        results.append({"key": key, "statement": statement, "pass": bool(check())})
    return results
