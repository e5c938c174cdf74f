"""Finite diagonal symmetry groups of quasihomogeneous polynomials.

Group elements are phase vectors in (Q/Z)^n, stored with every phase reduced
into [0, 1).  Groups keep a fully enumerated, sorted element list: at the
scale of this toolkit (orders up to a few hundred) that makes subgroup and
equality tests trivial set operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, lcm, prod

from .errors import (
    GroupNotSymmetry,
    InfiniteGroup,
    WeightConditionViolated,
)
from .polycore import Polynomial, WeightSystem, exponent_matrix


@dataclass(frozen=True, order=True)
class GroupElement:
    """Element of (Q/Z)^n given by its phases, each reduced into [0, 1)."""

    phases: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "phases",
                           tuple(Fraction(p) % 1 for p in self.phases))

    @staticmethod
    def identity(n: int) -> "GroupElement":
        return GroupElement((Fraction(0),) * n)

    def __len__(self) -> int:
        return len(self.phases)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(a + b for a, b in zip(self.phases, other.phases)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-p for p in self.phases))

    def is_identity(self) -> bool:
        return not any(self.phases)

    def order(self) -> int:
        return lcm(*(p.denominator for p in self.phases)) if self.phases else 1

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.phases) + ")"


@dataclass(frozen=True)
class SymmetryGroup:
    """Finite subgroup of (Q/Z)^n with a complete sorted element list."""

    ambient: int
    generators: tuple[GroupElement, ...]
    elements: tuple[GroupElement, ...]
    snf_diagonal: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_element_set", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, element: GroupElement) -> bool:
        return element in self._element_set

    def element_set(self) -> frozenset[GroupElement]:
        return self._element_set

    def is_subgroup_of(self, other: "SymmetryGroup") -> bool:
        return self._element_set <= other._element_set

    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors d_1 | d_2 | ... with the group = product Z/d_i."""
        return _abelian_invariants(list(self.elements),
                                   lambda a, b: a + b,
                                   GroupElement.identity(self.ambient))

    def __str__(self) -> str:
        gens = "; ".join(str(g) for g in self.generators) or "0"
        return f"<{gens}> of order {self.order}"


def _closure(gens: list[GroupElement], ambient: int) -> tuple[GroupElement, ...]:
    zero = GroupElement.identity(ambient)
    seen = {zero}
    frontier = [zero]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                b = a + g
                if b not in seen:
                    seen.add(b)
                    fresh.append(b)
        frontier = fresh
    return tuple(sorted(seen))


def _greedy_generators(elements: tuple[GroupElement, ...],
                       ambient: int) -> tuple[GroupElement, ...]:
    gens: list[GroupElement] = []
    have = {GroupElement.identity(ambient)}
    for e in sorted(elements, key=lambda g: (-g.order(), g)):
        if e not in have:
            gens.append(e)
            have = set(_closure(gens, ambient))
    return tuple(gens)


def subgroup_generated(gens: list[GroupElement], ambient: int) -> SymmetryGroup:
    """Closure of the generators under addition mod 1."""
    for g in gens:
        if len(g) != ambient:
            raise ValueError("generator length does not match ambient dimension")
    elements = _closure(list(gens), ambient)
    return SymmetryGroup(ambient, tuple(gens), elements)


def group_from_elements(elements, ambient: int) -> SymmetryGroup:
    """Group from a complete element list, with a small generating set."""
    elems = tuple(sorted(set(elements)))
    if not elems:
        elems = (GroupElement.identity(ambient),)
    gens = _greedy_generators(elems, ambient)
    group = SymmetryGroup(ambient, gens, elems)
    if len(_closure(list(gens), ambient)) != len(elems):
        raise ValueError("element list is not closed under addition")
    return group


# ---------------------------------------------------------------------------
# Smith normal form over Z
# ---------------------------------------------------------------------------

def smith_normal_form(matrix) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """U, D, V with U*matrix*V = D, U and V unimodular, and the diagonal of D
    nonnegative with d_i | d_{i+1}.

    Runs entirely over Python integers, so entries may grow without overflow.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, factor):
        for row in a:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(m, n):
        pivot = find_pivot(t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t, restarting whenever a smaller remainder appears
            restart = False
            for i in range(m):
                if i != t and a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(n):
                if j != t and a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # divisibility: the pivot must divide the remaining submatrix
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    return u, a, v


def gmax(poly: Polynomial) -> SymmetryGroup:
    """Maximal diagonal symmetry group {g in (Q/Z)^n : A.g integral}.

    Computed through the Smith normal form U*A*V = D: writing h = V^{-1} g the
    condition becomes d_i h_i integral, so the group is generated by the
    columns of V scaled by 1/d_i.  Raises InfiniteGroup when rank(A) < n.
    """
    matrix = exponent_matrix(poly)
    n = matrix.n
    _, d, v = smith_normal_form(matrix.rows)
    diag = [d[i][i] for i in range(min(matrix.m, n))]
    if len(diag) < n or any(x == 0 for x in diag):
        raise InfiniteGroup(f"rank of the exponent matrix is below {n}")
    generators = []
    for i in range(n):
        if diag[i] > 1:
            generators.append(GroupElement(
                tuple(Fraction(v[row][i], diag[i]) for row in range(n))))
    elements = set()
    for ks in product(*(range(x) for x in diag)):
        phases = tuple(
            sum((Fraction(v[row][i] * ks[i], diag[i]) for i in range(n)),
                Fraction(0)) % 1
            for row in range(n))
        elements.add(GroupElement(phases))
    if len(elements) != prod(diag):
        raise AssertionError("Smith normal form produced a defective group")
    return SymmetryGroup(n, tuple(generators), tuple(sorted(elements)),
                         snf_diagonal=tuple(diag))


def gmax_bruteforce(poly: Polynomial, denominator_bound: int) -> SymmetryGroup:
    """Oracle for gmax: try every phase vector with denominators dividing the
    bound.  Complete only when the bound is a multiple of every invariant
    factor; that is the caller's responsibility."""
    matrix = exponent_matrix(poly)
    n = matrix.n
    b = int(denominator_bound)
    found = []
    for ks in product(range(b), repeat=n):
        if all(sum(row[j] * ks[j] for j in range(n)) % b == 0
               for row in matrix.rows):
            found.append(GroupElement(tuple(Fraction(k, b) for k in ks)))
    return group_from_elements(found, n)


def is_admissible_group(group: SymmetryGroup, weights: WeightSystem) -> bool:
    """True iff the phase vector of the weights (J) lies in the group."""
    if len(weights) != group.ambient:
        raise ValueError("weights and group have different ambient dimensions")
    return GroupElement(tuple(weights)) in group


def sl_subgroup(group: SymmetryGroup) -> SymmetryGroup:
    """Subgroup of elements whose phases sum to an integer (determinant one)."""
    kept = [g for g in group.elements
            if sum(g.phases, Fraction(0)).denominator == 1]
    return group_from_elements(kept, group.ambient)


def fixed_locus(element: GroupElement) -> frozenset[int]:
    """Zero-based indices of the variables fixed by the element."""
    return frozenset(i for i, p in enumerate(element.phases) if p == 0)


def _pairing_integral(g: GroupElement, rows, h: GroupElement) -> bool:
    total = Fraction(0)
    for i, row in enumerate(rows):
        total += g.phases[i] * sum(row[j] * h.phases[j] for j in range(len(row)))
    return total.denominator == 1


def transpose_group(group: SymmetryGroup, poly: Polynomial) -> SymmetryGroup:
    """Dual group {g in Gmax(W^T) : g A h^T integral for all h in the group}.

    Defined for invertible polynomials only; the pairing uses the exponent
    matrix of poly itself.  Checking the generators of the group suffices
    because the pairing is additive in h.
    """
    from .mirror import transpose_polynomial  # deferred: mirror builds on this module

    transposed = transpose_polynomial(poly)
    ambient_max = gmax(transposed)
    rows = exponent_matrix(poly).rows
    generators = group.generators if group.generators else ()
    kept = [g for g in ambient_max.elements
            if all(_pairing_integral(g, rows, h) for h in generators)]
    return group_from_elements(kept, ambient_max.ambient)


def gmax_fermat_plus_monomial(p: int, q: int, r: int, s: int) -> SymmetryGroup:
    """Closed-form maximal symmetry group of x^p + y^q + x^r*y^s.

    Requires r/p + s/q = 1, i.e. the added monomial satisfies the weights of
    x^p + y^q; the group is generated by (1/p, 1/q) and (1/gcd(p, r), 0).
    """
    if min(p, q, r, s) < 1:
        raise ValueError("exponents must be positive")
    if Fraction(r, p) + Fraction(s, q) != 1:
        raise WeightConditionViolated(
            f"monomial x^{r}*y^{s} violates r/p + s/q = 1 for (p, q) = ({p}, {q})")
    gens = [GroupElement((Fraction(1, p), Fraction(1, q))),
            GroupElement((Fraction(1, gcd(p, r)), Fraction(0)))]
    return subgroup_generated(gens, 2)


def check_symmetry(group: SymmetryGroup, poly: Polynomial) -> None:
    """Raise GroupNotSymmetry unless every element fixes the polynomial."""
    matrix = exponent_matrix(poly)
    if group.ambient != matrix.n:
        raise GroupNotSymmetry(
            f"group lives in (Q/Z)^{group.ambient}, polynomial has {matrix.n} variables")
    for g in group.elements:
        for row in matrix.rows:
            phase = sum((row[j] * g.phases[j] for j in range(matrix.n)), Fraction(0))
            if phase.denominator != 1:
                raise GroupNotSymmetry(f"element {g} does not fix the polynomial")


# ---------------------------------------------------------------------------
# Invariant factors of abstract finite abelian groups
# ---------------------------------------------------------------------------

def _element_order(e, add, zero) -> int:
    k = 1
    acc = e
    while acc != zero:
        acc = add(acc, e)
        k += 1
    return k


def _abelian_invariants(elements, add, zero) -> tuple[int, ...]:
    """Invariant factors via repeated splitting at an element of maximal order.

    An element of maximal order in a finite abelian group generates a direct
    summand, so the remaining factors are those of the quotient.
    """
    if len(elements) == 1:
        return ()
    orders = {e: _element_order(e, add, zero) for e in elements}
    x = max(elements, key=lambda e: (orders[e], e))
    d = orders[x]
    cyclic = {zero}
    acc = x
    while acc != zero:
        cyclic.add(acc)
        acc = add(acc, x)

    def canon(e):
        return min(add(e, h) for h in cyclic)

    reps = sorted({canon(e) for e in elements})
    rest = _abelian_invariants(reps, lambda a, b: canon(add(a, b)), canon(zero))
    return rest + (d,)


def quotient_invariant_factors(group: SymmetryGroup,
                               subgroup: SymmetryGroup) -> tuple[int, ...]:
    """Invariant factors of group/subgroup (subgroup must be contained)."""
    if not subgroup.is_subgroup_of(group):
        raise ValueError("second argument is not a subgroup of the first")
    sub = subgroup.element_set()

    def canon(e):
        return min(e + h for h in sub)

    reps = sorted({canon(e) for e in group.elements})
    zero = canon(GroupElement.identity(group.ambient))
    return _abelian_invariants(reps, lambda a, b: canon(a + b), zero)


def subgroups_containing(group: SymmetryGroup,
                         seed: list[GroupElement]) -> list[SymmetryGroup]:
    """Every subgroup of the group that contains all the seed elements."""
    base = subgroup_generated(list(seed), group.ambient)
    if not base.is_subgroup_of(group):
        raise ValueError("seed elements do not lie in the group")
    seen = {base.element_set()}
    queue = [base]
    out = [base]
    while queue:
        current = queue.pop()
        for x in group.elements:
            if x in current:
                continue
            extended = subgroup_generated(list(current.generators) + [x],
                                          group.ambient)
            if extended.element_set() not in seen:
                seen.add(extended.element_set())
                queue.append(extended)
                out.append(extended)
    out.sort(key=lambda s: (s.order, s.elements))
    return out
