"""Command-line front end: every pipeline as a text or JSON report.

Exit codes: 0 success, 2 parse error, 3 polynomial not admissible, 4 group
not admissible or not a symmetry group, 5 polynomial not invertible,
6 Groebner resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .amodel import amodel
from .errors import (
    DegenerateRestriction,
    GroupNotAdmissible,
    GroupNotSymmetry,
    InfiniteGroup,
    NotAdmissibleError,
    NotInvertible,
    ParseError,
    ResourceLimitExceeded,
    WeightError,
)
from .milnor import bdim_formula, bmodel, btop_formula, is_nondegenerate
from .mirror import (
    STATUS_NONE_EXACT,
    STATUS_NONE_WITHIN_BOUND,
    discriminant_2var,
    discriminant_sign_boundary,
    mirror_check,
    search_weight_systems,
    transpose_polynomial,
)
from .polycore import Polynomial, classify, parse_polynomial
from .symmetry import GroupElement, SymmetryGroup, gmax, sl_subgroup, subgroup_generated


def _rat(value) -> str:
    return str(Fraction(value))


def _json_rat(value) -> list[int]:
    f = Fraction(value)
    return [f.numerator, f.denominator]


def _graded_json(graded) -> dict[str, int]:
    return graded.as_json_dict()


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def _require_admissible(poly: Polynomial):
    verdict = classify(poly)
    if not verdict.is_admissible:
        raise NotAdmissibleError(verdict.reason or "polynomial is not admissible")
    return verdict


def _parse_group_spec(spec: str, poly: Polynomial, weights) -> SymmetryGroup:
    """Mini-language: 'max' | 'J' | 'sl' | '0' | 'p/q,p/q;p/q,p/q'."""
    n = poly.n_variables
    spec = spec.strip()
    if spec == "max":
        return gmax(poly)
    if spec == "J":
        return subgroup_generated([GroupElement(tuple(weights))], n)
    if spec == "sl":
        return sl_subgroup(gmax(poly))
    if spec == "0":
        return subgroup_generated([], n)
    generators = []
    for chunk in spec.split(";"):
        phases = tuple(_parse_fraction(part) for part in chunk.split(","))
        if len(phases) != n:
            raise ParseError(
                f"group generator {chunk!r} has {len(phases)} phases, expected {n}")
        generators.append(GroupElement(phases))
    return subgroup_generated(generators, n)


# ---------------------------------------------------------------------------
# Command handlers: each returns (report dict, text lines)
# ---------------------------------------------------------------------------

def cmd_weights(args) -> tuple[dict, list[str]]:
    poly = parse_polynomial(args.polynomial)
    verdict = classify(poly)
    payload: dict = {
        "polynomial": str(poly),
        "variables": list(poly.variables),
        "classification": verdict.kind.value,
        "nondegenerate": is_nondegenerate(poly),
    }
    if verdict.weights is not None:
        payload["weights"] = [_rat(q) for q in verdict.weights]
    else:
        payload["weights"] = None
    if verdict.reason:
        payload["reason"] = verdict.reason
    lines = [f"polynomial: {payload['polynomial']}",
             f"variables: {', '.join(poly.variables)}"]
    if verdict.weights is not None:
        lines.append("weights: (" + ", ".join(payload["weights"]) + ")")
    else:
        lines.append("weights: none")
    lines.append(f"classification: {verdict.kind.value}")
    lines.append(f"nondegenerate: {str(payload['nondegenerate']).lower()}")
    if verdict.reason:
        lines.append(f"reason: {verdict.reason}")
    report = {"command": "weights", "inputs": {"polynomial": args.polynomial},
              "payload": payload, "warnings": []}
    return report, lines


def cmd_gmax(args) -> tuple[dict, list[str]]:
    poly = parse_polynomial(args.polynomial)
    _require_admissible(poly)
    group = gmax(poly)
    payload = {
        "polynomial": str(poly),
        "order": group.order,
        "invariant_factors": list(group.snf_diagonal or ()),
        "generators": [[_rat(p) for p in g.phases] for g in group.generators],
    }
    if args.elements:
        payload["elements"] = [[_rat(p) for p in g.phases] for g in group.elements]
    lines = [f"polynomial: {payload['polynomial']}",
             f"order: {group.order}",
             "invariant factors: (" + ", ".join(map(str, payload["invariant_factors"])) + ")"]
    for g in group.generators:
        lines.append(f"generator: {g}")
    if args.elements:
        for g in group.elements:
            lines.append(f"element: {g}")
    report = {"command": "gmax", "inputs": {"polynomial": args.polynomial},
              "payload": payload, "warnings": []}
    return report, lines


def cmd_amodel(args) -> tuple[dict, list[str]]:
    poly = parse_polynomial(args.polynomial)
    verdict = _require_admissible(poly)
    group = _parse_group_spec(args.group, poly, verdict.weights)
    model = amodel(poly, group, threads=args.threads)
    payload = {
        "polynomial": str(poly),
        "group_order": group.order,
        "group_generators": [[_rat(p) for p in g.phases] for g in group.generators],
        "dimension": model.graded.total_dim,
        "top_degree": _rat(model.graded.top_degree()),
        "graded": _graded_json(model.graded),
        "basis": [
            {"monomial": _sector_monomial_text(s, poly),
             "sector": [_rat(p) for p in s.sector.phases],
             "degree": _rat(s.adegree)}
            for s in model.basis
        ],
    }
    warnings = list(model.convention_notes)
    lines = [f"polynomial: {payload['polynomial']}",
             f"group: order {group.order}",
             f"dimension: {model.graded.total_dim}",
             f"top degree: {payload['top_degree']}",
             "graded dimensions:"]
    for degree, dim in model.graded.entries:
        lines.append(f"  {degree}: {dim}")
    lines.append("basis:")
    for s in model.basis:
        lines.append(f"  [{_sector_monomial_text(s, poly)}; {s.sector}]  degree {s.adegree}")
    for note in warnings:
        lines.append(f"warning: {note}")
    report = {"command": "amodel",
              "inputs": {"polynomial": args.polynomial, "group": args.group},
              "payload": payload, "warnings": warnings}
    return report, lines


def _sector_monomial_text(sector_element, poly: Polynomial) -> str:
    from .symmetry import fixed_locus

    fix = sorted(fixed_locus(sector_element.sector))
    names = tuple(poly.variables[i] for i in fix)
    return sector_element.monomial.render(names)


def cmd_bmodel(args) -> tuple[dict, list[str]]:
    poly = parse_polynomial(args.polynomial)
    model = bmodel(poly)
    weights = model.weights
    dim_formula, top_formula = _formula_values(weights)
    payload = {
        "polynomial": str(poly),
        "weights": [_rat(q) for q in weights],
        "dimension": model.graded.total_dim,
        "dimension_formula": _rat(dim_formula),
        "top_degree": _rat(model.graded.top_degree()),
        "top_degree_formula": _rat(top_formula),
        "graded": _graded_json(model.graded),
        "basis": [m.render(poly.variables) for m in model.basis],
    }
    lines = [f"polynomial: {payload['polynomial']}",
             "weights: (" + ", ".join(payload["weights"]) + ")",
             f"dimension: {model.graded.total_dim} (formula: {payload['dimension_formula']})",
             f"top degree: {payload['top_degree']} (formula: {payload['top_degree_formula']})",
             "graded dimensions:"]
    for degree, dim in model.graded.entries:
        lines.append(f"  {degree}: {dim}")
    lines.append("basis: " + ", ".join(payload["basis"]))
    report = {"command": "bmodel", "inputs": {"polynomial": args.polynomial},
              "payload": payload, "warnings": []}
    return report, lines


def _formula_values(weights):
    # the public formulas insist on weights in (0, 1/2]; admissible polynomials
    # with cross-terms may exceed that, so fall back to the raw expressions
    try:
        return bdim_formula(weights), btop_formula(weights)
    except ValueError:
        from .milnor import _dim_product, _top_sum

        return _dim_product(weights), _top_sum(weights)


def cmd_mirror_check(args) -> tuple[dict, list[str]]:
    poly = parse_polynomial(args.polynomial)
    partner = transpose_polynomial(poly)
    a_side = amodel(poly, gmax(poly)).graded
    b_side = bmodel(partner).graded
    verdict = a_side == b_side
    payload = {
        "polynomial": str(poly),
        "transpose": str(partner),
        "a_graded": _graded_json(a_side),
        "b_graded": _graded_json(b_side),
        "isomorphic": verdict,
    }
    lines = [f"polynomial: {payload['polynomial']}",
             f"transpose: {payload['transpose']}",
             "A-side graded: " + str(a_side),
             "B-side graded: " + str(b_side),
             f"graded vector spaces equal: {str(verdict).lower()}"]
    report = {"command": "mirror-check", "inputs": {"polynomial": args.polynomial},
              "payload": payload, "warnings": []}
    return report, lines


def _family_parameter(dim: Fraction, top: Fraction) -> int | None:
    # (d, delta) = (2n-2, 2(2n-4)/n) for an integer n >= 1?
    n2 = (dim + 2) / 2
    if n2.denominator != 1 or n2 < 1:
        return None
    n = int(n2)
    if top == Fraction(2 * (2 * n - 4), n):
        return n
    return None


def cmd_search(args) -> tuple[dict, list[str]]:
    dim = _parse_fraction(args.dim)
    top = _parse_fraction(args.top)
    report_obj = search_weight_systems(dim, top, args.vars,
                                       denominator_bound=args.bound,
                                       threads=args.threads)
    payload = report_obj.to_json_dict()
    lines = [f"target dimension: {_rat(dim)}",
             f"target top degree: {_rat(top)}",
             f"variables: {args.vars}",
             f"denominator bound: {args.bound}",
             f"status: {report_obj.status}"]
    if args.vars == 2:
        n = _family_parameter(dim, top)
        if n is not None:
            disc = discriminant_2var(n)
            payload["discriminant"] = disc
            lines.append(f"discriminant: {disc}")
    if args.vars == 3:
        boundary = discriminant_sign_boundary(dim, top, args.bound)
        payload["discriminant_nonnegative_up_to"] = (
            _rat(boundary) if boundary is not None else None)
        lines.append("discriminant nonnegative for grid q3 up to: "
                     + (_rat(boundary) if boundary is not None else "none"))
    for ws in report_obj.solutions:
        lines.append("solution: (" + ", ".join(_rat(q) for q in ws) + ")")
    if not report_obj.solutions:
        lines.append("solutions: none")
    report = {"command": "search",
              "inputs": {"dim": args.dim, "top": args.top, "vars": args.vars,
                         "bound": args.bound},
              "payload": payload, "warnings": []}
    return report, lines


def cmd_paper_tables(args) -> tuple[dict, list[str]]:
    dims_rows = []
    for n in range(3, 13):
        dims_rows.append({"n": n, "dim": 2 * n - 2,
                          "top_degree": _rat(Fraction(2 * (2 * n - 4), n))})
    matrix_rows = []
    for n in range(4, 13):
        d = Fraction(2 * n - 2)
        top = Fraction(2 * (2 * n - 4), n)
        row = {"n": n}
        for m in (1, 2, 3):
            result = search_weight_systems(d, top, m, denominator_bound=args.bound)
            if result.status == STATUS_NONE_EXACT:
                row[f"m{m}"] = "X"
            elif result.status == STATUS_NONE_WITHIN_BOUND:
                row[f"m{m}"] = "X*"
            else:
                row[f"m{m}"] = ""
        matrix_rows.append(row)
    payload = {"bound": args.bound,
               "nonexistence": matrix_rows,
               "state_space_dimensions": dims_rows,
               "legend": {"X": "no weight system exists (exact)",
                          "X*": f"no weight system with denominators up to {args.bound}"}}
    lines = ["nonexistence of candidate weight systems (rows n, columns m):",
             "  n | m=1  m=2  m=3"]
    for row in matrix_rows:
        lines.append(f"  {row['n']:>2} | {row['m1']:<4} {row['m2']:<4} {row['m3']:<4}")
    lines.append("X = impossible (exact); X* = impossible within denominator bound "
                 f"{args.bound}")
    lines.append("")
    lines.append("state-space dimension and top degree for x^n + y^n + x^(n-1)*y with <J>:")
    lines.append("  n | dim   top degree")
    for row in dims_rows:
        lines.append(f"  {row['n']:>2} | {row['dim']:<5} {row['top_degree']}")
    report = {"command": "paper-tables", "inputs": {"bound": args.bound},
              "payload": payload, "warnings": []}
    return report, lines


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgmk",
        description="Exact A/B-model state spaces and weight-system searches "
                    "for quasihomogeneous polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("weights", help="weights, classification, nondegeneracy")
    p.add_argument("polynomial")
    add_json(p)
    p.set_defaults(handler=cmd_weights)

    p = sub.add_parser("gmax", help="maximal diagonal symmetry group")
    p.add_argument("polynomial")
    p.add_argument("--elements", action="store_true", help="list every element")
    add_json(p)
    p.set_defaults(handler=cmd_gmax)

    p = sub.add_parser("amodel", help="A-side state space for (polynomial, group)")
    p.add_argument("polynomial")
    p.add_argument("group", help="'max', 'J', 'sl', '0', or generators 'p/q,p/q;...'")
    p.add_argument("--threads", type=int, default=1)
    add_json(p)
    p.set_defaults(handler=cmd_amodel)

    p = sub.add_parser("bmodel", help="Milnor ring as a graded vector space")
    p.add_argument("polynomial")
    add_json(p)
    p.set_defaults(handler=cmd_bmodel)

    p = sub.add_parser("mirror-check", help="graded comparison against the transpose")
    p.add_argument("polynomial")
    add_json(p)
    p.set_defaults(handler=cmd_mirror_check)

    p = sub.add_parser("search", help="weight systems matching a dimension/top target")
    p.add_argument("dim", help="target dimension (rational, e.g. 8)")
    p.add_argument("top", help="target top degree (rational, e.g. 12/5)")
    p.add_argument("vars", type=int, help="number of variables of the candidate")
    p.add_argument("--bound", type=int, default=60, help="denominator bound for tails")
    p.add_argument("--threads", type=int, default=1)
    add_json(p)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("paper-tables",
                       help="nonexistence matrix and dimension table for the "
                            "x^n + y^n + x^(n-1)*y family")
    p.add_argument("--bound", type=int, default=60)
    add_json(p)
    p.set_defaults(handler=cmd_paper_tables)

    return parser


_EXIT_CODES = (
    (ParseError, 2),
    ((NotAdmissibleError, WeightError, InfiniteGroup, DegenerateRestriction), 3),
    ((GroupNotAdmissible, GroupNotSymmetry), 4),
    (NotInvertible, 5),
    (ResourceLimitExceeded, 6),
)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report, lines = args.handler(args)
    except Exception as exc:  # noqa: BLE001 - mapped to documented exit codes
        for types, code in _EXIT_CODES:
            if isinstance(exc, types):
                print(f"error: {exc}", file=sys.stderr)
                return code
        raise
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
