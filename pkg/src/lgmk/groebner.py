"""Buchberger engine over Q for the quotient-ring computations.

Polynomials enter and leave as `polycore.Polynomial`; internally everything
is a dict mapping exponent tuples to Fractions.  The default order for
quasihomogeneous work is weighted-degree reverse-lexicographic, under which
Jacobian ideals are homogeneous and standard monomial bases are graded.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import NotFiniteDimensional, ResourceLimitExceeded
from .polycore import Exps, Monomial, Polynomial, WeightSystem

DEFAULT_PAIR_BUDGET = 10**6
PAIR_BUDGET_ENV = "LGMK_PAIR_BUDGET"

TermDict = dict[Exps, Fraction]


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse-lexicographic order, graded by weights or total degree.

    key() returns a tuple that sorts ascending in the order; 1 is minimal
    because all weights are positive.
    """

    weights: tuple[Fraction, ...] | None = None

    @staticmethod
    def degrevlex() -> "MonomialOrder":
        return MonomialOrder(None)

    @staticmethod
    def weighted_degrevlex(weights: WeightSystem) -> "MonomialOrder":
        return MonomialOrder(tuple(weights))

    def key(self, exps: Exps):
        if self.weights is None:
            grade: Fraction | int = sum(exps)
        else:
            grade = sum((e * w for e, w in zip(exps, self.weights)), Fraction(0))
        return (grade, tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic generators, no leading term divides another."""

    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    variables: tuple[str, ...]

    def leading_terms(self) -> list[Exps]:
        key = self.order.key
        return [max(g.term_map(), key=key) for g in self.generators]


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(poly: TermDict, key) -> TermDict:
    lead = poly[max(poly, key=key)]
    if lead == 1:
        return poly
    return {e: c / lead for e, c in poly.items()}


def _normal_form_dict(poly: TermDict, basis: list[tuple[TermDict, Exps]], key) -> TermDict:
    """Full remainder of poly on division by basis; no result term reducible."""
    work = dict(poly)
    remainder: TermDict = {}
    while work:
        term = max(work, key=key)
        coeff = work[term]
        for gen, lead in basis:
            if _divides(lead, term):
                factor = coeff / gen[lead]
                shift = tuple(t - l for t, l in zip(term, lead))
                for exps, c in gen.items():
                    target = tuple(e + s for e, s in zip(exps, shift))
                    value = work.get(target, Fraction(0)) - factor * c
                    if value:
                        work[target] = value
                    else:
                        work.pop(target, None)
                break
        else:
            remainder[term] = coeff
            del work[term]
    return remainder


def _s_polynomial(f: TermDict, lt_f: Exps, g: TermDict, lt_g: Exps) -> TermDict:
    lcm = _lcm(lt_f, lt_g)
    shift_f = tuple(l - e for l, e in zip(lcm, lt_f))
    shift_g = tuple(l - e for l, e in zip(lcm, lt_g))
    inv_f = 1 / f[lt_f]
    inv_g = 1 / g[lt_g]
    result: TermDict = {}
    for exps, c in f.items():
        target = tuple(e + s for e, s in zip(exps, shift_f))
        result[target] = result.get(target, Fraction(0)) + c * inv_f
    for exps, c in g.items():
        target = tuple(e + s for e, s in zip(exps, shift_g))
        value = result.get(target, Fraction(0)) - c * inv_g
        if value:
            result[target] = value
        else:
            result.pop(target, None)
    return {e: c for e, c in result.items() if c}


def _autoreduce(basis: list[TermDict], key) -> list[TermDict]:
    # minimal: drop generators whose leading term another leading term divides
    items = [(d, max(d, key=key)) for d in basis]
    items.sort(key=lambda pair: key(pair[1]))
    kept: list[tuple[TermDict, Exps]] = []
    for d, lt in items:
        if not any(_divides(other_lt, lt) for _, other_lt in kept):
            kept.append((d, lt))
    # reduced: every generator in normal form with respect to the others
    changed = True
    while changed:
        changed = False
        for i, (d, lt) in enumerate(kept):
            others = [kept[j] for j in range(len(kept)) if j != i]
            reduced = _normal_form_dict(d, others, key)
            reduced = _monic(reduced, key)
            if reduced != d:
                kept[i] = (reduced, max(reduced, key=key))
                changed = True
    kept.sort(key=lambda pair: key(pair[1]))
    return [d for d, _ in kept]


def _pair_budget(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    return int(os.environ.get(PAIR_BUDGET_ENV, DEFAULT_PAIR_BUDGET))


def buchberger(gens: list[Polynomial], order: MonomialOrder,
               pair_budget: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Pair selection is the normal strategy (smallest lcm in the order); the
    coprime and chain criteria prune useless pairs.  Processing more than
    `pair_budget` S-pairs (default 10^6, overridable through the
    LGMK_PAIR_BUDGET environment variable) raises ResourceLimitExceeded.
    """
    if not gens:
        raise ValueError("no generators given")
    variables = gens[0].variables
    if any(g.variables != variables for g in gens):
        raise ValueError("generators must share one ambient variable list")
    budget = _pair_budget(pair_budget)
    key = order.key

    basis: list[TermDict] = []
    leads: list[Exps] = []
    for g in gens:
        d = g.term_map()
        if d:
            d = _monic(d, key)
            basis.append(d)
            leads.append(max(d, key=key))

    pending: set[tuple[int, int]] = set()
    heap: list = []
    counter = 0

    def push_pair(i: int, j: int) -> None:
        nonlocal counter
        pending.add((i, j))
        heapq.heappush(heap, (key(_lcm(leads[i], leads[j])), counter, i, j))
        counter += 1

    for j in range(len(basis)):
        for i in range(j):
            push_pair(i, j)

    processed = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        processed += 1
        if processed > budget:
            raise ResourceLimitExceeded(
                f"S-pair budget of {budget} exceeded; set {PAIR_BUDGET_ENV} to raise it")
        lcm = _lcm(leads[i], leads[j])
        if lcm == tuple(a + b for a, b in zip(leads[i], leads[j])):
            continue  # coprime leading terms reduce to zero
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(leads[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and \
               (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        s_poly = _s_polynomial(basis[i], leads[i], basis[j], leads[j])
        remainder = _normal_form_dict(s_poly, list(zip(basis, leads)), key)
        if remainder:
            remainder = _monic(remainder, key)
            basis.append(remainder)
            leads.append(max(remainder, key=key))
            new = len(basis) - 1
            for k in range(new):
                push_pair(k, new)

    reduced = _autoreduce(basis, key) if basis else []
    generators = tuple(Polynomial.from_term_map(variables, d) for d in reduced)
    return GroebnerBasis(generators, order, variables)


def normal_form(poly: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Canonical representative of poly in the quotient ring."""
    if poly.variables != basis.variables:
        raise ValueError("polynomial and basis have different ambient variables")
    key = basis.order.key
    pairs = [(g.term_map(), lt) for g, lt in zip(basis.generators, basis.leading_terms())]
    remainder = _normal_form_dict(poly.term_map(), pairs, key)
    return Polynomial.from_term_map(poly.variables, remainder)


def _pure_power_of(lt: Exps, i: int) -> bool:
    return lt[i] > 0 and all(e == 0 for j, e in enumerate(lt) if j != i)


def is_zero_dimensional(basis: GroebnerBasis) -> bool:
    """True iff every variable has a pure-power leading term in the basis."""
    if not basis.variables:
        return True
    leads = basis.leading_terms()
    if any(not any(lt) for lt in leads):
        return True  # unit ideal: the quotient is the zero space
    return all(any(_pure_power_of(lt, i) for lt in leads)
               for i in range(len(basis.variables)))


def standard_monomials(basis: GroebnerBasis) -> list[Monomial]:
    """Monomials divisible by no leading term: a basis of the quotient.

    Sorted ascending in the basis order.  Raises NotFiniteDimensional when
    the quotient is not a finite-dimensional vector space.
    """
    if not is_zero_dimensional(basis):
        raise NotFiniteDimensional("ideal is not zero dimensional")
    leads = basis.leading_terms()
    if any(not any(lt) for lt in leads):
        return []  # unit ideal
    n = len(basis.variables)
    bounds = []
    for i in range(n):
        pures = [lt[i] for lt in leads if _pure_power_of(lt, i)]
        bounds.append(min(pures))
    key = basis.order.key
    found = [exps for exps in product(*(range(b) for b in bounds))
             if not any(_divides(lt, exps) for lt in leads)]
    found.sort(key=key)
    return [Monomial(exps) for exps in found]
