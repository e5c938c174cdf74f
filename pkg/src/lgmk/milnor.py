"""Milnor rings and the unorbifolded B-side as graded vector spaces.

The quotient C[x_1..x_n]/(dW/dx_1, ..., dW/dx_n) is computed exactly with
the Buchberger engine; the closed-form dimension and top-degree expressions
are checked against the engine at construction time, so a disagreement
between the two routes fails loudly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import LgmkError, NotAdmissibleError, WeightError
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    is_zero_dimensional,
    standard_monomials,
)
from .polycore import (
    Monomial,
    Polynomial,
    WeightSystem,
    exponent_matrix,
    monomial_bdegree,
    solve_weights,
)


@dataclass(frozen=True)
class GradedDims:
    """Finitely supported map degree -> dimension; equality is the
    graded-vector-space isomorphism test."""

    entries: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        cleaned = tuple(sorted((Fraction(d), int(k)) for d, k in self.entries))
        if any(k <= 0 for _, k in cleaned):
            raise ValueError("graded dimensions must be positive")
        if len({d for d, _ in cleaned}) != len(cleaned):
            raise ValueError("repeated degree in graded dimensions")
        object.__setattr__(self, "entries", cleaned)

    @staticmethod
    def from_degrees(degrees: Iterable[Fraction]) -> "GradedDims":
        counts = Counter(degrees)
        return GradedDims(tuple(counts.items()))

    @property
    def total_dim(self) -> int:
        return sum(k for _, k in self.entries)

    def top_degree(self) -> Fraction:
        if not self.entries:
            raise ValueError("empty graded vector space has no top degree")
        return self.entries[-1][0]

    def dim_at(self, degree) -> int:
        d = Fraction(degree)
        for deg, k in self.entries:
            if deg == d:
                return k
        return 0

    def as_json_dict(self) -> dict[str, int]:
        return {str(d): k for d, k in self.entries}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{d}: {k}" for d, k in self.entries) + "}"


@dataclass(frozen=True)
class BModel:
    """Unorbifolded B-side: the Milnor ring with its rational grading."""

    source: Polynomial
    weights: WeightSystem
    basis: tuple[Monomial, ...]
    graded: GradedDims


def jacobian_ideal(poly: Polynomial) -> list[Polynomial]:
    """The n formal partial derivatives of poly, with exact coefficients."""
    partials = []
    for i in range(poly.n_variables):
        term_map = {}
        for coeff, mono in poly.terms:
            e = mono.exponents[i]
            if e:
                shifted = list(mono.exponents)
                shifted[i] = e - 1
                key = tuple(shifted)
                term_map[key] = term_map.get(key, Fraction(0)) + coeff * e
        partials.append(Polynomial.from_term_map(poly.variables, term_map))
    return partials


def _jacobian_basis(poly: Polynomial, order: MonomialOrder) -> GroebnerBasis | None:
    gens = [p for p in jacobian_ideal(poly) if not p.is_zero()]
    if not gens:
        return None
    return buchberger(gens, order)


def is_nondegenerate(poly: Polynomial) -> bool:
    """True iff the Jacobian ideal is zero dimensional (finite Milnor ring)."""
    if poly.is_zero() or poly.n_variables == 0:
        return False
    try:
        weights = solve_weights(exponent_matrix(poly))
        order = MonomialOrder.weighted_degrevlex(weights)
    except WeightError:
        order = MonomialOrder.degrevlex()
    basis = _jacobian_basis(poly, order)
    if basis is None:
        return False
    return is_zero_dimensional(basis)


def _dim_product(weights: WeightSystem) -> Fraction:
    result = Fraction(1)
    for q in weights:
        result *= 1 / q - 1
    return result


def _top_sum(weights: WeightSystem) -> Fraction:
    return 2 * sum((1 - 2 * q for q in weights), Fraction(0))


def bdim_formula(weights: WeightSystem) -> Fraction:
    """prod(1/q_i - 1), the closed-form Milnor ring dimension."""
    _require_halved(weights)
    return _dim_product(weights)


def btop_formula(weights: WeightSystem) -> Fraction:
    """2*sum(1 - 2 q_i), the closed-form top degree of the grading."""
    _require_halved(weights)
    return _top_sum(weights)


def _require_halved(weights: WeightSystem) -> None:
    if any(q > Fraction(1, 2) for q in weights):
        raise ValueError(f"weights {weights} must lie in (0, 1/2]")


def bmodel(poly: Polynomial) -> BModel:
    """Milnor ring of an admissible polynomial as a graded vector space."""
    from .polycore import classify  # deferred: classify also calls into this module

    verdict = classify(poly)
    if not verdict.is_admissible:
        raise NotAdmissibleError(verdict.reason or "polynomial is not admissible")
    weights = verdict.weights
    basis = _jacobian_basis(poly, MonomialOrder.weighted_degrevlex(weights))
    monomials = tuple(standard_monomials(basis))
    graded = GradedDims.from_degrees(monomial_bdegree(m, weights) for m in monomials)
    if graded.total_dim != _dim_product(weights):
        raise LgmkError(
            f"Milnor dimension {graded.total_dim} disagrees with the "
            f"closed form {_dim_product(weights)} for {poly}")
    if graded.top_degree() != _top_sum(weights):
        raise LgmkError(
            f"top degree {graded.top_degree()} disagrees with the "
            f"closed form {_top_sum(weights)} for {poly}")
    return BModel(poly, weights, monomials, graded)
