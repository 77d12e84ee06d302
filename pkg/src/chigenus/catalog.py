"""Built-in manifolds with exact Chern numbers and circle-action data.

The evaluation model behind every entry is a truncated polynomial ring
Q[h_1..h_k]/(h_i^{n_i+1}) with a prescribed integral of the fundamental
monomial. Chern numbers are obtained by expanding the total Chern class and
integrating; no floating point, no division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .betti import BettiProfile
from .engine import genus_polynomial
from .localization import FixedComponent, FixedPointModel
from .partitions import Partition, partitions_of

Monomial = tuple[int, ...]
PolyDict = dict[Monomial, Fraction]


@dataclass(frozen=True)
class CohomologyModel:
    """Q[h_1..h_k]/(h_i^{orders_i + 1}) with a chosen top integral.

    Generators sit in cohomological degree 2; ``total_chern`` is a
    polynomial in them. Only the fundamental monomial h_1^{o_1}...h_k^{o_k}
    has a nonzero integral.
    """

    names: tuple[str, ...]
    orders: tuple[int, ...]
    top_integral: Fraction
    total_chern: PolyDict

    def __post_init__(self) -> None:
        if len(self.names) != len(self.orders):
            raise ValueError("one name per generator")
        if self.top_integral == 0:
            raise ValueError("top integral must be nonzero")

    def multiply(self, a: PolyDict, b: PolyDict) -> PolyDict:
        out: PolyDict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                key = tuple(x + y for x, y in zip(ma, mb))
                if any(e > o for e, o in zip(key, self.orders)):
                    continue
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return {m: c for m, c in out.items() if c != 0}

    def chern_component(self, i: int) -> PolyDict:
        return {m: c for m, c in self.total_chern.items() if sum(m) == i}

    def integrate(self, poly: PolyDict) -> Fraction:
        return poly.get(self.orders, Fraction(0)) * self.top_integral

    def chern_numbers(self, n: int) -> dict[Partition, Fraction]:
        numbers = {}
        for part in partitions_of(n):
            product: PolyDict = {tuple(0 for _ in self.orders): Fraction(1)}
            for i in part:
                product = self.multiply(product, self.chern_component(i))
            numbers[part] = self.integrate(product)
        return numbers

    def tensor(self, other: "CohomologyModel") -> "CohomologyModel":
        """Model of a product: disjoint generators, multiplied integrals."""
        names = tuple(f"h{i + 1}" for i in range(len(self.orders) + len(other.orders)))
        orders = self.orders + other.orders
        chern: PolyDict = {}
        for ma, ca in self.total_chern.items():
            for mb, cb in other.total_chern.items():
                chern[ma + mb] = ca * cb
        return CohomologyModel(names, orders, self.top_integral * other.top_integral, chern)


@dataclass
class ManifoldData:
    """Exact Chern numbers of a closed almost-complex manifold, plus extras.

    ``chern_numbers`` has one entry per partition of the complex dimension.
    Flags are catalog-supplied annotations, never derived from geometry.
    """

    dimension: int
    chern_numbers: dict[Partition, Fraction]
    pure_type: bool | None = None
    kahler_hyperbolic: bool | None = None
    hamiltonian_s1: bool | None = None
    betti: BettiProfile | None = None
    action: FixedPointModel | None = None
    model: CohomologyModel | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        expected = set(partitions_of(self.dimension))
        if set(self.chern_numbers) != expected:
            missing = expected - set(self.chern_numbers)
            extra = set(self.chern_numbers) - expected
            raise ValueError(
                f"Chern numbers must cover all partitions of {self.dimension}; "
                f"missing {sorted(missing)}, extra {sorted(extra)}"
            )
        self.chern_numbers = {p: Fraction(v) for p, v in self.chern_numbers.items()}


def point() -> ManifoldData:
    return ManifoldData(
        0,
        {(): Fraction(1)},
        pure_type=True,
        betti=BettiProfile(0, (1,), 1),
    )


def projective_space(n: int) -> ManifoldData:
    """P^n: ring Q[h]/(h^{n+1}), integral of h^n is 1, Chern class (1+h)^{n+1}."""
    if n < 1:
        raise ValueError("need n >= 1")
    total: PolyDict = {(j,): Fraction(comb(n + 1, j)) for j in range(n + 1)}
    model = CohomologyModel(("h",), (n,), Fraction(1), total)
    betti = tuple(1 if i % 2 == 0 else 0 for i in range(2 * n + 1))
    data = ManifoldData(
        n,
        model.chern_numbers(n),
        pure_type=True,
        hamiltonian_s1=True,
        model=model,
    )
    data.betti = BettiProfile(2 * n, betti, int(genus_polynomial(data).evaluate(1)))
    data.action = standard_pn_action(n, tuple(range(n + 1)))
    return data


def product(a: ManifoldData, b: ManifoldData) -> ManifoldData:
    """Product manifold; both factors must carry cohomology models."""
    if a.model is None or b.model is None:
        raise ValueError("product factors need cohomology models")
    model = a.model.tensor(b.model)
    n = a.dimension + b.dimension
    data = ManifoldData(
        n,
        model.chern_numbers(n),
        pure_type=_both(a.pure_type, b.pure_type),
        kahler_hyperbolic=_both(a.kahler_hyperbolic, b.kahler_hyperbolic),
        model=model,
    )
    if a.betti is not None and b.betti is not None:
        betti = _convolve(a.betti.betti, b.betti.betti)
        data.betti = BettiProfile(2 * n, betti, int(genus_polynomial(data).evaluate(1)))
    return data


def _both(x: bool | None, y: bool | None) -> bool | None:
    if x is False or y is False:
        return False
    if x is True and y is True:
        return True
    return None


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def hypersurface(n: int, d: int) -> ManifoldData:
    """Smooth degree-d hypersurface of dimension n: adjunction in Q[h]/(h^{n+1}).

    The total Chern class is (1+h)^{n+2} * (1+dh)^{-1}, expanded as a
    geometric series in the nilpotent quotient, and the integral of h^n is d.
    Betti numbers agree with those of P^n away from the middle degree, where
    the Euler characteristic pins the remaining one.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    total: PolyDict = {}
    for j in range(n + 1):
        coeff = sum(
            Fraction(comb(n + 2, i)) * (-d) ** (j - i) for i in range(j + 1)
        )
        if coeff != 0:
            total[(j,)] = Fraction(coeff)
    model = CohomologyModel(("h",), (n,), Fraction(d), total)
    data = ManifoldData(n, model.chern_numbers(n), model=model)
    euler = int(data.chern_numbers[(n,)])
    betti = [1 if i % 2 == 0 else 0 for i in range(2 * n + 1)]
    betti[n] = euler - n if n % 2 == 0 else (n + 1) - euler
    data.betti = BettiProfile(2 * n, tuple(betti), int(genus_polynomial(data).evaluate(1)))
    return data


def standard_pn_action(n: int, exponents: tuple[int, ...] | None = None) -> FixedPointModel:
    """The linear circle action on P^n with the given distinct exponents.

    Fixed points are the coordinate axes; the point with exponent a_j sees
    the weights a_i - a_j, so the number of negative weights equals the rank
    of a_j among the exponents.
    """
    if exponents is None:
        exponents = tuple(range(n + 1))
    if len(exponents) != n + 1:
        raise ValueError(f"need exactly {n + 1} exponents for n = {n}")
    if len(set(exponents)) != len(exponents):
        raise ValueError("exponents must be pairwise distinct")
    components = []
    for j, a_j in enumerate(exponents):
        weights = tuple(a_i - a_j for i, a_i in enumerate(exponents) if i != j)
        components.append(FixedComponent(complex_dim=0, weights=weights))
    return FixedPointModel(n, tuple(components), hamiltonian=True)


CATALOG_KEYS = (
    "pn:1",
    "pn:2",
    "pn:3",
    "pn:4",
    "pn:5",
    "pn:6",
    "pn:7",
    "pn:8",
    "hyp:1:3",
    "hyp:2:1",
    "hyp:2:2",
    "hyp:2:4",
    "hyp:3:5",
    "hyp:4:6",
    "product:pn:1,pn:1",
    "product:pn:1,pn:2",
    "product:pn:1,pn:3",
    "product:pn:2,pn:2",
    "product:pn:1,pn:1,pn:1",
)

ACTION_KEYS = tuple(f"pnaction:{n}:" + ",".join(str(i) for i in range(n + 1)) for n in range(1, 7))


def make_manifold(key: str) -> ManifoldData:
    """Build a manifold from a catalog key such as ``pn:3`` or ``hyp:2:4``."""
    kind, _, rest = key.partition(":")
    if kind == "pn":
        return projective_space(_int(rest, key))
    if kind == "hyp":
        n_text, _, d_text = rest.partition(":")
        return hypersurface(_int(n_text, key), _int(d_text, key))
    if kind == "product":
        factors = _split_factors(rest)
        if len(factors) < 2:
            raise ValueError(f"product needs at least two factors: {key!r}")
        data = make_manifold(factors[0])
        for factor in factors[1:]:
            data = product(data, make_manifold(factor))
        return data
    raise ValueError(f"unknown catalog key {key!r}")


def _split_factors(rest: str) -> list[str]:
    """Split ``pn:1,hyp:2:4`` into factor keys.

    Factor keys (``pn:N``, ``hyp:N:D``) never contain commas, so a plain
    split suffices; nested products are not part of the grammar.
    """
    factors = [chunk for chunk in rest.split(",") if chunk]
    for factor in factors:
        if factor.partition(":")[0] not in ("pn", "hyp"):
            raise ValueError(f"product factors must be pn or hyp keys, got {factor!r}")
    return factors


def make_action(key: str) -> FixedPointModel:
    """Build a fixed-point model from a key like ``pnaction:2:0,1,2``."""
    kind, _, rest = key.partition(":")
    if kind != "pnaction":
        raise ValueError(f"unknown action key {key!r}")
    n_text, _, exp_text = rest.partition(":")
    n = _int(n_text, key)
    if exp_text:
        exponents = tuple(_int(t, key) for t in exp_text.split(","))
    else:
        exponents = None
    return standard_pn_action(n, exponents)


def standard_catalog() -> list[tuple[str, ManifoldData]]:
    """The named instances exercised by the verification suite."""
    return [(key, make_manifold(key)) for key in CATALOG_KEYS]


def standard_actions() -> list[tuple[str, FixedPointModel]]:
    return [(key, make_action(key)) for key in ACTION_KEYS]


def _int(text: str, key: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"malformed catalog key {key!r}") from None
