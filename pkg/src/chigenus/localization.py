"""Fixed-point data of circle actions and the localization formulas.

A fixed-point model lists the connected components of the fixed set of a
circle action on a 2n-real-dimensional almost-complex manifold. Each
component carries the rotation weights on its normal bundle (all nonzero);
the count d_F of negative weights drives every formula here: the modified
genus localizes as sum_F chi_{-y}(F) y^{d_F}, the Novikov numbers as
sum_F P_y(F) y^{2 d_F}, and the signature as sum_F sigma(F) (-1)^{d_F}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ypoly import YPolynomial


def negative_weight_count(weights: Sequence[int]) -> int:
    """Number of strictly negative weights; zero weights are malformed data."""
    for w in weights:
        if w == 0:
            raise ValueError("rotation weights must be nonzero")
    return sum(1 for w in weights if w < 0)


class FixedComponent:
    """One connected component of the fixed-point set.

    ``weights`` determine ``d_f``; when no weights are supplied an explicit
    ``d_f`` is required. A zero-dimensional component defaults to Betti
    numbers (1,), signature 1 (the rank-one positive form on H^0) and
    constant modified genus 1. Positive-dimensional components must be given
    their own invariants: the localization formulas consume them as data.
    """

    __slots__ = ("complex_dim", "weights", "d_f", "betti", "signature", "chi_minus_y")

    def __init__(
        self,
        complex_dim: int = 0,
        weights: Sequence[int] | None = None,
        d_f: int | None = None,
        betti: Sequence[int] | None = None,
        signature: int | None = None,
        chi_minus_y: YPolynomial | None = None,
    ) -> None:
        if complex_dim < 0:
            raise ValueError("component dimension must be non-negative")
        self.complex_dim = complex_dim
        self.weights = tuple(weights) if weights is not None else None
        if self.weights is not None:
            derived = negative_weight_count(self.weights)
            if d_f is not None and d_f != derived:
                raise ValueError(f"explicit d_f={d_f} contradicts weights (count {derived})")
            self.d_f = derived
        else:
            if d_f is None:
                raise ValueError("component needs weights or an explicit d_f")
            if d_f < 0:
                raise ValueError("d_f must be non-negative")
            self.d_f = d_f
        if complex_dim == 0:
            betti = (1,) if betti is None else betti
            signature = 1 if signature is None else signature
            chi_minus_y = YPolynomial.one() if chi_minus_y is None else chi_minus_y
        self.betti = tuple(betti) if betti is not None else None
        if self.betti is not None:
            if len(self.betti) != 2 * complex_dim + 1:
                raise ValueError(
                    f"component of dimension {complex_dim} needs Betti numbers b_0..b_{2 * complex_dim}"
                )
            if any(b < 0 for b in self.betti):
                raise ValueError("Betti numbers must be non-negative")
        self.signature = signature
        self.chi_minus_y = chi_minus_y

    def poincare_polynomial(self) -> YPolynomial:
        if self.betti is None:
            raise ValueError("component has no Betti numbers")
        return YPolynomial({i: b for i, b in enumerate(self.betti)})

    def is_isolated(self) -> bool:
        return self.complex_dim == 0


class FixedPointModel:
    """Nonempty list of fixed components of a circle action."""

    __slots__ = ("n", "components", "hamiltonian")

    def __init__(
        self,
        n: int,
        components: Sequence[FixedComponent],
        hamiltonian: bool = False,
    ) -> None:
        if n < 0:
            raise ValueError("n must be non-negative")
        if not components:
            raise ValueError("fixed-point set must be nonempty")
        for comp in components:
            if comp.complex_dim > n:
                raise ValueError("component dimension exceeds the manifold's")
            if comp.d_f > n - comp.complex_dim:
                raise ValueError(
                    f"d_f={comp.d_f} exceeds the normal rank {n - comp.complex_dim}"
                )
            if comp.weights is not None and len(comp.weights) != n - comp.complex_dim:
                raise ValueError(
                    f"component of dimension {comp.complex_dim} needs {n - comp.complex_dim} weights"
                )
        self.n = n
        self.components = tuple(components)
        self.hamiltonian = bool(hamiltonian)
        if self.hamiltonian and all(c.is_isolated() for c in self.components):
            values = {c.d_f for c in self.components}
            if 0 not in values or n not in values:
                raise ValueError(
                    "a Hamiltonian action with isolated fixed points must attain d_f = 0 and d_f = n"
                )

    def all_isolated(self) -> bool:
        return all(c.is_isolated() for c in self.components)


def localized_chi_minus_y(model: FixedPointModel) -> YPolynomial:
    """chi_{-y} of the total space: sum over components of chi_{-y}(F) y^{d_F}."""
    total = YPolynomial.zero()
    for comp in model.components:
        if comp.chi_minus_y is None:
            raise ValueError("positive-dimensional component lacks its modified genus")
        total = total + comp.chi_minus_y.shift_degree(comp.d_f)
    return total


def novikov_polynomial(model: FixedPointModel) -> YPolynomial:
    """Generating polynomial of the Novikov numbers: sum_F P_y(F) y^{2 d_F}.

    For a Hamiltonian action these are the Betti numbers of the total space.
    """
    total = YPolynomial.zero()
    for comp in model.components:
        total = total + comp.poincare_polynomial().shift_degree(2 * comp.d_f)
    return total


def localized_signature(model: FixedPointModel) -> int:
    """Signature of the total space: sum_F sigma(F) (-1)^{d_F}."""
    total = 0
    for comp in model.components:
        if comp.signature is None:
            raise ValueError("component lacks a signature")
        total += comp.signature * (-1) ** comp.d_f
    return total


@dataclass(frozen=True)
class IsolatedConsistencyReport:
    """Cross-checks available when every fixed component is a point."""

    odd_novikov_vanish: bool
    substitution_matches: bool
    chi_positive: bool

    @property
    def consistent(self) -> bool:
        return self.odd_novikov_vanish and self.substitution_matches


def consistency_isolated(model: FixedPointModel) -> IsolatedConsistencyReport:
    """For isolated fixed points the two localizations determine each other.

    The Novikov polynomial must have vanishing odd coefficients and equal
    the modified genus with y replaced by y^2; the manifold is chi-positive
    exactly when every even Novikov number is positive.
    """
    if not model.all_isolated():
        raise ValueError("all components must be isolated points")
    chi = localized_chi_minus_y(model)
    novikov = novikov_polynomial(model)
    odd_vanish = all(d % 2 == 0 for d, _ in novikov.items())
    matches = chi.stretch(2) == novikov
    positive = all(chi.coefficient(i) > 0 for i in range(model.n + 1))
    return IsolatedConsistencyReport(odd_vanish, matches, positive)


@dataclass(frozen=True)
class SignatureIdentityReport:
    """Outcome of the signature-vs-Novikov identity check.

    ``applicable`` records whether every component is signature-alternating
    (points count, via the rank-one convention). When it is False the
    identity is not asserted; both numbers are still reported.
    """

    applicable: bool
    signature: int
    alternating_sum: int

    @property
    def holds(self) -> bool:
        return self.signature == self.alternating_sum


def signature_identity_check(model: FixedPointModel) -> SignatureIdentityReport:
    """Check sigma(M) = sum_i (-1)^i b_{2i}(xi) via both localizations."""
    applicable = all(_component_signature_alternating(c) for c in model.components)
    signature = localized_signature(model)
    novikov = novikov_polynomial(model)
    alternating = sum(
        (-1) ** i * int(novikov.coefficient(2 * i)) for i in range(model.n + 1)
    )
    return SignatureIdentityReport(applicable, signature, alternating)


def _component_signature_alternating(comp: FixedComponent) -> bool:
    if comp.betti is None or comp.signature is None:
        return False
    alternating = sum((-1) ** i * comp.betti[2 * i] for i in range(comp.complex_dim + 1))
    return comp.signature == alternating
