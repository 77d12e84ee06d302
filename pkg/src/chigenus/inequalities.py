"""Chern number inequalities attached to positivity of the modified genus.

A manifold whose modified genus has positive (resp. signed-positive)
coefficients satisfies floor(n/2) + 1 inequalities: for each i, the Chern
number combination eps^n K_{2i} is at least its value on P^n, with equality
exactly when chi^p = eps^n (-1)^p for all p >= 2i. Reports use the cleared
integer form (denominators multiplied out), so the i = 0 line reads
eps^n c_n >= n + 1 and the i = 1 line has right-hand side 2(n-1)n(n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import NamedTuple, Sequence

from .chern import ChernPolynomial
from .engine import ManifoldLike, chi_vector
from .kexpansion import k_coefficients
from .partitions import Partition, partitions_of


def _validate_epsilon(epsilon: int) -> None:
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 (chi-positive) or -1 (signed chi-positive)")


def a_polynomial(i: int, n: int, epsilon: int = 1) -> ChernPolynomial:
    """The i-th inequality polynomial: eps^n * K_{2i}."""
    _validate_epsilon(epsilon)
    if not 0 <= i <= n // 2:
        raise ValueError(f"index {i} outside 0..{n // 2}")
    return k_coefficients(n).k_polys[2 * i].scale(Fraction(epsilon) ** n)


class PositivityResult(NamedTuple):
    chi_positive: bool
    signed_chi_positive: bool


def positivity_predicate(chi: Sequence[Fraction | int]) -> PositivityResult:
    """Positivity of the modified genus coefficients (plain and signed)."""
    n = len(chi) - 1
    plain = all((-1) ** p * chi[p] > 0 for p in range(n + 1))
    signed = all((-1) ** (n + p) * chi[p] > 0 for p in range(n + 1))
    return PositivityResult(plain, signed)


@dataclass(frozen=True)
class InequalityReport:
    """One inequality, evaluated in cleared integer form.

    ``equality`` is the chi-vector criterion (chi^p = eps^n (-1)^p for
    p >= 2i), which coincides with lhs == rhs under the positivity
    hypothesis; ``hypothesis_met`` records that hypothesis so failing
    manifolds are flagged rather than rejected.
    """

    index: int
    lhs: Fraction
    rhs: Fraction
    scale: int
    holds: bool
    equality: bool
    equality_witness: tuple[int, ...]
    hypothesis_met: bool


def projective_chern_numbers(n: int) -> dict[Partition, Fraction]:
    """c_lambda[P^n] as products of binomial coefficients."""
    out = {}
    for part in partitions_of(n):
        value = Fraction(1)
        for lam in part:
            value *= comb(n + 1, lam)
        out[part] = value
    return out


def _clearing_factor(poly: ChernPolynomial) -> int:
    denominators = [c.denominator for c in poly.constant_coefficients().values()]
    return lcm(*denominators) if denominators else 1


def check_inequalities(manifold: ManifoldLike, epsilon: int = 1) -> list[InequalityReport]:
    """Evaluate every inequality on a manifold, detecting equality cases."""
    _validate_epsilon(epsilon)
    n = manifold.dimension
    if n < 1:
        raise ValueError("need a manifold of positive dimension")
    sign = Fraction(epsilon) ** n
    chi = chi_vector(manifold)
    positivity = positivity_predicate(chi)
    hypothesis = positivity.chi_positive if epsilon == 1 else positivity.signed_chi_positive
    table = k_coefficients(n)
    binomials = projective_chern_numbers(n)
    reports = []
    for i in range(n // 2 + 1):
        k_poly = table.k_polys[2 * i]
        scale = _clearing_factor(k_poly)
        lhs = sign * k_poly.evaluate(manifold.chern_numbers).constant_value() * scale
        rhs = k_poly.evaluate(binomials).constant_value() * scale
        if i == 1 and rhs != 2 * (n - 1) * n * (n + 1):
            raise ArithmeticError(
                f"cleared i=1 bound {rhs} disagrees with 2(n-1)n(n+1) = {2 * (n - 1) * n * (n + 1)}"
            )
        witness = tuple(range(2 * i, n + 1))
        equality = all(chi[p] == sign * (-1) ** p for p in witness)
        reports.append(
            InequalityReport(
                index=i,
                lhs=lhs,
                rhs=rhs,
                scale=scale,
                holds=lhs >= rhs,
                equality=equality,
                equality_witness=witness,
                hypothesis_met=hypothesis,
            )
        )
    return reports


@dataclass(frozen=True)
class SurfaceInequality:
    label: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool


@dataclass(frozen=True)
class CurvatureBoundReport:
    """The negative-first-Chern-class bound c_2 (-c_1)^{n-2} >= n/(2(n+1)) (-c_1)^n.

    For surfaces the report also carries the two cleared consequences
    3 c_2 >= c_1^2 and c_2 + c_1^2 >= 12, whose equality cases are realized
    by ball quotients with c_1^2 = 9, c_2 = 3.
    """

    n: int
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    surface: tuple[SurfaceInequality, ...]


def miyaoka_yau_check(manifold: ManifoldLike) -> CurvatureBoundReport:
    n = manifold.dimension
    if n < 2:
        raise ValueError("need n >= 2")
    numbers = manifold.chern_numbers
    mixed: Partition = tuple(sorted([2] + [1] * (n - 2), reverse=True))
    powers: Partition = tuple([1] * n)
    try:
        c2_c1 = numbers[mixed]
        c1_n = numbers[powers]
    except KeyError as exc:
        raise ValueError(f"missing Chern number for partition {exc.args[0]}") from None
    sign = Fraction(-1) ** n
    lhs = sign * c2_c1
    rhs = Fraction(n, 2 * (n + 1)) * sign * c1_n
    surface: tuple[SurfaceInequality, ...] = ()
    if n == 2:
        c2 = numbers[(2,)]
        c1_sq = numbers[(1, 1)]
        surface = (
            SurfaceInequality("3*c2 >= c1^2", 3 * c2, c1_sq, 3 * c2 >= c1_sq, 3 * c2 == c1_sq),
            SurfaceInequality(
                "c2 + c1^2 >= 12", c2 + c1_sq, Fraction(12), c2 + c1_sq >= 12, c2 + c1_sq == 12
            ),
        )
    return CurvatureBoundReport(n, lhs, rhs, lhs >= rhs, lhs == rhs, surface)
