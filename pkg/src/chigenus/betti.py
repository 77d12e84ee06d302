"""Inertia of intersection forms and Betti-number inequalities.

The middle intersection form of a 4m-dimensional manifold decomposes as
b^+ positive, b^- negative and (for degenerate input) b^0 null directions;
the triple is a congruence invariant. For signature-alternating manifolds
the even Betti numbers obey two families of inequalities whose equality
cases are exactly b^+ = 1 and b^- = 0, the same conditions that
characterize the reverse and direct Cauchy-Schwarz property of the middle
cohomology pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence


class InertiaTriple(NamedTuple):
    b_plus: int
    b_minus: int
    b_zero: int


def inertia(matrix: Sequence[Sequence[Fraction | int]]) -> InertiaTriple:
    """Inertia of a symmetric rational matrix by congruence diagonalization.

    Symmetric pivoting; a zero diagonal with a nonzero off-diagonal entry is
    repaired by adding the partner row/column, which keeps the transform a
    congruence and surfaces a usable pivot (the hyperbolic pair then
    contributes one positive and one negative direction).
    """
    size = len(matrix)
    work = [[Fraction(v) for v in row] for row in matrix]
    for row in work:
        if len(row) != size:
            raise ValueError("matrix must be square")
    for i in range(size):
        for j in range(i + 1, size):
            if work[i][j] != work[j][i]:
                raise ValueError("matrix must be symmetric")
    plus = minus = zero = 0
    rows = list(range(size))
    while rows:
        k = next((r for r in rows if work[r][r] != 0), None)
        if k is None:
            pair = next(
                ((r, s) for r in rows for s in rows if r != s and work[r][s] != 0),
                None,
            )
            if pair is None:
                zero += len(rows)
                break
            r, s = pair
            for t in range(size):
                work[r][t] += work[s][t]
            for t in range(size):
                work[t][r] += work[t][s]
            k = r
        pivot = work[k][k]
        if pivot > 0:
            plus += 1
        else:
            minus += 1
        rows.remove(k)
        for r in rows:
            if work[r][k] == 0:
                continue
            factor = work[r][k] / pivot
            for t in range(size):
                work[r][t] -= factor * work[k][t]
            for t in range(size):
                work[t][r] -= factor * work[t][k]
    return InertiaTriple(plus, minus, zero)


@dataclass(frozen=True)
class BettiProfile:
    """Betti numbers b_0..b_dim of a closed oriented manifold, maybe with sigma.

    Poincare duality (b_i = b_{dim-i}) is enforced, and sigma must vanish
    when the dimension is not divisible by 4.
    """

    dim: int
    betti: tuple[int, ...]
    sigma: int | None = None

    def __post_init__(self) -> None:
        if self.dim < 0 or self.dim % 2 != 0:
            raise ValueError("dimension must be even and non-negative")
        object.__setattr__(self, "betti", tuple(self.betti))
        if len(self.betti) != self.dim + 1:
            raise ValueError(f"need Betti numbers b_0..b_{self.dim}")
        if any(b < 0 for b in self.betti):
            raise ValueError("Betti numbers must be non-negative")
        if any(self.betti[i] != self.betti[self.dim - i] for i in range(self.dim + 1)):
            raise ValueError("Betti numbers must satisfy Poincare duality")
        if self.sigma is not None and self.dim % 4 != 0 and self.sigma != 0:
            raise ValueError("signature must vanish in dimensions not divisible by 4")

    def even_betti(self) -> tuple[int, ...]:
        return tuple(self.betti[2 * i] for i in range(self.dim // 2 + 1))


def signature_alternating(profile: BettiProfile) -> bool:
    """Whether sigma equals the alternating sum of the even Betti numbers.

    In dimensions 2 mod 4 the alternating sum cancels by duality, so the
    predicate reduces to sigma == 0 there.
    """
    if profile.sigma is None:
        raise ValueError("profile has no signature")
    alternating = sum((-1) ** i * b for i, b in enumerate(profile.even_betti()))
    return profile.sigma == alternating


class CauchySchwarzStatus(NamedTuple):
    reverse_cs: bool
    cs: bool


def cs_classification(triple: InertiaTriple) -> CauchySchwarzStatus:
    """Reverse Cauchy-Schwarz iff b^+ = 1; Cauchy-Schwarz iff b^- = 0.

    A middle intersection form of a symplectic manifold pairs the symplectic
    class positively with itself, so b^+ = 0 cannot occur in valid data.
    """
    if triple.b_plus < 1:
        raise ValueError("invalid symplectic data: middle form needs b_plus >= 1")
    return CauchySchwarzStatus(triple.b_plus == 1, triple.b_minus == 0)


@dataclass(frozen=True)
class BettiInequality:
    k: int
    lhs: int
    rhs: int
    holds: bool
    equality: bool


@dataclass(frozen=True)
class BettiInequalityReport:
    dim: int
    b_plus: int
    b_minus: int
    alternating: bool
    upper: BettiInequality  # sum b_{2+4i} <= sum b_{4+4i}; equality iff b^+ = 1
    lower: BettiInequality  # sum b_{2+4i} >= sum b_{4i};   equality iff b^- = 0


def betti_inequality_check(profile: BettiProfile) -> BettiInequalityReport:
    """Both Betti-sum inequalities for a 4m-dimensional profile.

    b^{+-} are recovered from (b_{2m} +- sigma) / 2; a parity failure or a
    negative count means the profile cannot come from a real intersection
    form and is rejected. The equality cases are only meaningful when the
    profile is signature-alternating, which the report records.
    """
    if profile.dim % 4 != 0:
        raise ValueError("need dimension divisible by 4")
    if profile.sigma is None:
        raise ValueError("profile has no signature")
    m = profile.dim // 4
    even = profile.even_betti()
    middle = even[m]
    if (middle + profile.sigma) % 2 != 0:
        raise ValueError("middle Betti number and signature have different parity")
    b_plus = (middle + profile.sigma) // 2
    b_minus = (middle - profile.sigma) // 2
    if b_minus < 0 or b_plus < 0:
        raise ValueError("signature exceeds the middle Betti number")

    k_upper = m // 2
    lhs = sum(even[1 + 2 * i] for i in range(k_upper))
    rhs = sum(even[2 + 2 * i] for i in range(k_upper))
    upper = BettiInequality(k_upper, lhs, rhs, lhs <= rhs, lhs == rhs)

    k_lower = (m + 1) // 2
    lhs2 = sum(even[1 + 2 * i] for i in range(k_lower))
    rhs2 = sum(even[2 * i] for i in range(k_lower))
    lower = BettiInequality(k_lower, lhs2, rhs2, lhs2 >= rhs2, lhs2 == rhs2)

    return BettiInequalityReport(
        profile.dim, b_plus, b_minus, signature_alternating(profile), upper, lower
    )


UNIMODALITY_LABEL = "conjecture diagnostic"


@dataclass(frozen=True)
class UnimodalityReport:
    """Diagnostic only: the chain b_2 <= b_4 <= ... up to the middle.

    This inequality chain is an open question, not a theorem; the report is
    labeled accordingly and must never be asserted. ``first_violation`` is
    the real degree d of the first failing comparison b_d <= b_{d+2}.
    """

    label: str
    holds: bool
    first_violation: int | None


def tolman_unimodality_report(profile: BettiProfile) -> UnimodalityReport:
    n = profile.dim // 2
    even = profile.even_betti()
    chain = [even[j] for j in range(1, n // 2 + 1)]
    for idx in range(len(chain) - 1):
        if chain[idx] > chain[idx + 1]:
            return UnimodalityReport(UNIMODALITY_LABEL, False, 2 * (idx + 1))
    return UnimodalityReport(UNIMODALITY_LABEL, True, None)
