"""A-side state spaces: sector decomposition, invariant monomials, degrees.

The state space of (W, G) is the direct sum over group elements g of the
G-invariants of the Milnor ring of W restricted to the variables fixed by g.
The group acts on a sector through the determinant and composition taken
over the fixed-locus variables only; with that reading a sector whose fixed
locus is empty always contributes exactly one basis element.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateRestriction,
    GroupNotAdmissible,
    NotAdmissibleError,
)
from .groebner import MonomialOrder, buchberger, is_zero_dimensional, standard_monomials
from .milnor import GradedDims, jacobian_ideal
from .polycore import (
    Monomial,
    Polynomial,
    WeightSystem,
    classify,
)
from .symmetry import GroupElement, SymmetryGroup, check_symmetry, fixed_locus, is_admissible_group


@dataclass(frozen=True)
class SectorElement:
    """One basis element [m; g]: a monomial over fix(g) inside sector g."""

    monomial: Monomial
    sector: GroupElement
    adegree: Fraction


@dataclass(frozen=True)
class AModel:
    source: Polynomial
    group: SymmetryGroup
    basis: tuple[SectorElement, ...]
    graded: GradedDims
    convention_notes: tuple[str, ...] = ()


def restrict(poly: Polynomial, fix: frozenset[int] | set[int]) -> Polynomial | None:
    """Terms of poly supported only on the fixed variables, re-expressed in
    those variables; None when no terms survive."""
    indices = sorted(fix)
    index_set = set(indices)
    kept = {}
    for coeff, mono in poly.terms:
        if mono.support() <= index_set:
            kept[tuple(mono.exponents[i] for i in indices)] = coeff
    if not kept:
        return None
    names = tuple(poly.variables[i] for i in indices)
    return Polynomial.from_term_map(names, kept)


def adegree(element: GroupElement, weights: WeightSystem) -> Fraction:
    """dim(fix(g)) + 2*sum(g_i - q_i), independent of the monomial."""
    if len(element) != len(weights):
        raise ValueError("group element and weight system lengths differ")
    shift = 2 * sum((g - q for g, q in zip(element.phases, weights)), Fraction(0))
    return Fraction(len(fixed_locus(element))) + shift


def _restricted_milnor_basis(poly: Polynomial, weights: WeightSystem,
                             fix: frozenset[int]) -> list[Monomial]:
    """Standard monomial basis of the Milnor ring of poly restricted to fix."""
    restricted = restrict(poly, fix)
    if restricted is None:
        raise DegenerateRestriction(
            f"restriction to variables {sorted(fix)} is the zero polynomial")
    sub_weights = WeightSystem(tuple(weights[i] for i in sorted(fix)))
    gens = [p for p in jacobian_ideal(restricted) if not p.is_zero()]
    if not gens:
        raise DegenerateRestriction(
            f"restriction to variables {sorted(fix)} has a zero Jacobian ideal")
    basis = buchberger(gens, MonomialOrder.weighted_degrevlex(sub_weights))
    if not is_zero_dimensional(basis):
        raise DegenerateRestriction(
            f"restriction to variables {sorted(fix)} has a non-finite Milnor ring")
    return standard_monomials(basis)


def _is_invariant(exponents: tuple[int, ...], fix: list[int],
                  generators: tuple[GroupElement, ...]) -> bool:
    # invariance of x^a in sector g: sum over fixed i of (1 + a_i) h_i integral
    # for every h in G; checking generators suffices (the sum is additive in h)
    for h in generators:
        total = sum(((1 + a) * h.phases[i] for a, i in zip(exponents, fix)),
                    Fraction(0))
        if total.denominator != 1:
            return False
    return True


def invariant_monomials(sector: GroupElement, poly: Polynomial,
                        group: SymmetryGroup) -> list[Monomial]:
    """Basis monomials of the restricted Milnor ring that the group fixes.

    A sector with empty fixed locus contributes the single empty monomial
    unconditionally.
    """
    from .polycore import exponent_matrix, solve_weights

    weights = solve_weights(exponent_matrix(poly))
    return _invariant_monomials(sector, poly, weights, group,
                                _restricted_cache(poly, weights))


def _restricted_cache(poly, weights):
    cache: dict[frozenset[int], list[Monomial]] = {}

    def lookup(fix: frozenset[int]) -> list[Monomial]:
        if fix not in cache:
            cache[fix] = _restricted_milnor_basis(poly, weights, fix)
        return cache[fix]

    return lookup


def _invariant_monomials(sector, poly, weights, group, restricted_basis):
    fix = fixed_locus(sector)
    if not fix:
        return [Monomial(())]
    indices = sorted(fix)
    return [m for m in restricted_basis(fix)
            if _is_invariant(m.exponents, indices, group.generators)]


def _ambient_reading_count(sector, group, fix, monomials) -> int:
    # alternative reading: determinant over all ambient variables
    indices = sorted(fix)
    count = 0
    for m in monomials:
        ok = True
        for h in group.generators:
            total = sum(h.phases, Fraction(0))
            total += sum((a * h.phases[i] for a, i in zip(m.exponents, indices)),
                         Fraction(0))
            if total.denominator != 1:
                ok = False
                break
        if ok:
            count += 1
    return count


def amodel(poly: Polynomial, group: SymmetryGroup, threads: int = 1) -> AModel:
    """State space of (poly, group) with its rational grading.

    Requires poly admissible, the group a symmetry group of poly, and the
    weights vector J an element of the group.
    """
    verdict = classify(poly)
    if not verdict.is_admissible:
        raise NotAdmissibleError(verdict.reason or "polynomial is not admissible")
    weights = verdict.weights
    check_symmetry(group, poly)
    if not is_admissible_group(group, weights):
        raise GroupNotAdmissible(
            f"J = {weights} is not an element of the group {group}")
    restricted_basis = _restricted_cache(poly, weights)
    # precompute every distinct restricted Milnor basis once; this also makes
    # the per-sector work safe to run on worker threads
    for fix in {fixed_locus(g) for g in group.elements if fixed_locus(g)}:
        restricted_basis(fix)

    def sector_monomials(g: GroupElement) -> list[Monomial]:
        return _invariant_monomials(g, poly, weights, group, restricted_basis)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_sector = list(pool.map(sector_monomials, group.elements))
    else:
        per_sector = [sector_monomials(g) for g in group.elements]

    basis = []
    notes = []
    n = poly.n_variables
    for g, monomials in zip(group.elements, per_sector):
        degree = adegree(g, weights)
        basis.extend(SectorElement(m, g, degree) for m in monomials)
        fix = fixed_locus(g)
        if fix and len(fix) < n:
            ambient = _ambient_reading_count(g, group, fix, restricted_basis(fix))
            if ambient != len(monomials):
                notes.append(
                    f"sector {g}: ambient-determinant reading gives {ambient} "
                    f"invariants, fixed-locus reading gives {len(monomials)}")
    basis.sort(key=lambda s: (s.adegree, s.sector.phases, s.monomial.exponents))
    graded = GradedDims.from_degrees(s.adegree for s in basis)
    return AModel(poly, group, tuple(basis), graded, tuple(notes))


def group_weights_compare(poly_a: Polynomial, poly_b: Polynomial,
                          group: SymmetryGroup) -> bool:
    """Graded-vector-space comparison of the two state spaces under one group.

    Both polynomials must be admissible with identical weights, and the group
    must be an admissible symmetry group of each.
    """
    verdict_a = classify(poly_a)
    verdict_b = classify(poly_b)
    if not (verdict_a.is_admissible and verdict_b.is_admissible):
        raise NotAdmissibleError("both polynomials must be admissible")
    if verdict_a.weights != verdict_b.weights:
        raise ValueError(
            f"weight systems differ: {verdict_a.weights} vs {verdict_b.weights}")
    return amodel(poly_a, group).graded == amodel(poly_b, group).graded
