"""Shared fixtures: the invertible test corpus and the example-table entries."""

from fractions import Fraction

import pytest

from lgmk import GroupElement, Polynomial, parse_polynomial, subgroup_generated

# Invertible polynomials in up to three variables, exponents at most 7:
# sums of one-variable powers, chains, and loops, plus mixed sums.
FERMAT_1 = [f"x^{a}" for a in range(2, 8)]
FERMAT_2 = [f"x^{a} + y^{b}" for a, b in
            [(2, 2), (3, 3), (4, 4), (5, 5), (7, 7), (2, 5), (3, 4), (2, 7), (6, 4)]]
FERMAT_3 = [f"x^{a} + y^{b} + z^{c}" for a, b, c in
            [(2, 2, 2), (3, 3, 3), (2, 3, 4), (5, 2, 2), (2, 3, 7)]]
CHAIN_2 = [f"x^{a} + x*y^{b}" for a, b in
           [(3, 2), (4, 3), (5, 5), (7, 2), (2, 6), (6, 7)]]
LOOP_2 = [f"x^{a}*y + x*y^{b}" for a, b in
          [(2, 2), (3, 5), (4, 4), (7, 3), (2, 7)]]
CHAIN_3 = [f"x^{a} + x*y^{b} + y*z^{c}" for a, b, c in
           [(3, 2, 2), (2, 3, 4), (7, 2, 3)]]
LOOP_3 = [f"x^{a}*y + y^{b}*z + z^{c}*x" for a, b, c in
          [(2, 2, 2), (3, 2, 4), (2, 3, 2)]]

INVERTIBLE_CORPUS_TEXTS = (FERMAT_1 + FERMAT_2 + FERMAT_3 +
                           CHAIN_2 + LOOP_2 + CHAIN_3 + LOOP_3)

# Admissible two-variable examples with weights (1/n, 1/n), n = 4..7.
EXAMPLE_TABLE = {
    4: ["x^4 + y^4 + x^3*y", "x^4 + x^2*y^2 + x*y^3", "x^4 + x*y^3"],
    5: ["x^5 + y^5 + x^4*y", "x^4*y + x*y^4 + x^3*y^2 + x^2*y^3",
        "x^5 + x^2*y^3 + x*y^4"],
    6: ["x^6 + y^6 + x^5*y", "x^5*y + x^4*y^2 + y^6",
        "x^6 + x^2*y^4 + x*y^5 + y^6"],
    7: ["x^7 + y^7 + x^6*y", "x^6*y + x^5*y^2 + y^7", "x^6*y + x*y^6"],
}


def family_polynomial(n: int) -> Polynomial:
    """x^n + y^n + x^(n-1)*y."""
    return parse_polynomial(f"x^{n} + y^{n} + x^{n - 1}*y")


def j_group(n: int):
    """The cyclic group generated by (1/n, 1/n)."""
    return subgroup_generated([GroupElement((Fraction(1, n), Fraction(1, n)))], 2)


@pytest.fixture(scope="session")
def invertible_corpus():
    return [parse_polynomial(text) for text in INVERTIBLE_CORPUS_TEXTS]


@pytest.fixture(scope="session")
def invertible_corpus_2var(invertible_corpus):
    return [poly for poly in invertible_corpus if poly.n_variables == 2]


@pytest.fixture(scope="session")
def example_table():
    return {n: [parse_polynomial(text) for text in rows]
            for n, rows in EXAMPLE_TABLE.items()}
