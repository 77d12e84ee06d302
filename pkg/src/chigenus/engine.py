"""The chi_y genus as a universal Chern polynomial and its evaluations.

The genus of a 2n-real-dimensional almost-complex manifold is the integral
of the product over the Chern roots x_i of the normalized series Q(y; x_i).
We never manipulate the roots themselves: the logarithm of the series turns
the product into a sum over power sums of the roots, each power sum is
rewritten in the c_i via Newton's identities, and a truncated exponential
in the graded monomial ring recovers the degree-n integrand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Protocol

from .chern import ChernPolynomial, GradedTerms, graded_exponential, graded_part, power_sum_in_chern
from .partitions import Partition
from .series import TruncatedSeries
from .ypoly import YPolynomial


class ManifoldLike(Protocol):
    """Anything carrying a dimension and exact Chern numbers."""

    dimension: int
    chern_numbers: dict[Partition, Fraction]


@dataclass(frozen=True)
class GenusTable:
    """Grade-n Chern polynomial whose evaluation is the chi_y polynomial."""

    n: int
    chi_poly: ChernPolynomial


SPECIAL_VALUES = {"euler": Fraction(-1), "todd": Fraction(0), "signature": Fraction(1)}


def normalized_series(order: int) -> TruncatedSeries:
    """The genus-defining power series in x, normalized to constant term 1.

    Writing u = x*(1+y), the series is x*(1 + y*e^{-u}) / (1 - e^{-u}).
    Both factors below have coefficients in Q[y] and the denominator has
    constant term 1, so the quotient stays inside Q[y] with no division by
    non-constant polynomials. At y = 0 it reduces to the Todd series
    x / (1 - e^{-x}); the x^k coefficient has y-degree at most k + 1.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    one_plus_y = YPolynomial({0: 1, 1: 1})
    y = YPolynomial.variable()
    numerator = [YPolynomial.one()]
    denominator = [YPolynomial.one()]
    for k in range(1, order):
        sign = Fraction(-1) ** k
        numerator.append(y * one_plus_y ** (k - 1) * (sign / factorial(k)))
        denominator.append(one_plus_y**k * (sign / factorial(k + 1)))
    num = TruncatedSeries(numerator, order)
    den = TruncatedSeries(denominator, order)
    return num * den.inverse()


_TABLE_CACHE: dict[int, GenusTable] = {}


def chi_y_chern_polynomial(n: int) -> GenusTable:
    """Universal grade-n Chern polynomial of the chi_y genus.

    Results are memoized per process; the computation is pure, so a racing
    recomputation is harmless.
    """
    if n < 0:
        raise ValueError("dimension must be non-negative")
    cached = _TABLE_CACHE.get(n)
    if cached is not None:
        return cached
    if n == 0:
        table = GenusTable(0, ChernPolynomial.monomial((), 1))
        _TABLE_CACHE[0] = table
        return table
    log_series = normalized_series(n + 1).log()
    exponent: GradedTerms = {}
    for k in range(1, n + 1):
        ell = log_series.coefficient(k)
        if ell.is_zero():
            continue
        for part, coeff in power_sum_in_chern(k, n).items():
            exponent[part] = exponent.get(part, YPolynomial.zero()) + coeff * ell
    table = GenusTable(n, graded_part(graded_exponential(exponent, n), n))
    _TABLE_CACHE[n] = table
    return table


def evaluate_genus(table: GenusTable, manifold: ManifoldLike) -> YPolynomial:
    """chi_y polynomial of a manifold: pair the table with its Chern numbers."""
    if manifold.dimension != table.n:
        raise ValueError(
            f"dimension mismatch: table is for n={table.n}, manifold has n={manifold.dimension}"
        )
    return table.chi_poly.evaluate(manifold.chern_numbers)


def genus_polynomial(manifold: ManifoldLike) -> YPolynomial:
    return evaluate_genus(chi_y_chern_polynomial(manifold.dimension), manifold)


def chi_vector(manifold: ManifoldLike) -> list[Fraction]:
    """The indices chi^0, ..., chi^n read off the genus polynomial."""
    return genus_polynomial(manifold).coefficients_dense(manifold.dimension + 1)


def chi_minus_y(manifold: ManifoldLike) -> YPolynomial:
    """The modified genus: coefficient of y^p is (-1)^p chi^p."""
    return genus_polynomial(manifold).negate_y()


def specialize(manifold: ManifoldLike, at: str) -> Fraction:
    """Evaluate the genus at y = -1, 0, 1 (Euler, Todd, signature).

    The Euler specialization is cross-checked against the top Chern number,
    which it must reproduce identically.
    """
    try:
        point = SPECIAL_VALUES[at]
    except KeyError:
        raise ValueError(f"unknown specialization {at!r}; expected euler, todd or signature") from None
    value = genus_polynomial(manifold).evaluate(point)
    if at == "euler":
        top: Partition = (manifold.dimension,) if manifold.dimension else ()
        expected = manifold.chern_numbers[top]
        if value != expected:
            raise ArithmeticError(
                f"Euler specialization {value} disagrees with top Chern number {expected}"
            )
    return value


def duality_holds(chi: "list[Fraction]") -> bool:
    """Whether chi^p == (-1)^n chi^{n-p} for all p, on a bare chi-vector."""
    n = len(chi) - 1
    sign = (-1) ** n
    return all(chi[p] == sign * chi[n - p] for p in range(n + 1))


def check_duality(manifold: ManifoldLike) -> bool:
    """Self-reciprocity of the genus polynomial of a manifold.

    This holds identically for the symbolic table, so it doubles as an
    end-to-end consistency check of evaluation.
    """
    return duality_holds(chi_vector(manifold))
