"""Command-line front end: analyze, baxterize, ncplane, verify-all.

Targets are the two built-in cases (s03, s14) or, for analyze only, a
user matrix supplied as file:PATH in the JSON layout that matrix_to_obj
emits.  File targets are taken as already braided: they are analysed
exactly as given, with no permutation applied.

Everything is symbolic and exact, so a verdict is a theorem about the
given parameters, not a numerical spot check.  Exit codes: 0 all checks
hold, 1 at least one check failed, 2 usage error, 3 the input could not
be read or lies outside the searchable scalar domain.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Tuple

from .cases import builtin_case
from .funceq import c_law_residual, reparametrize_check
from .linalg import (
    SquareMatrix,
    matrix_from_obj,
    matrix_to_obj,
    minimal_polynomial,
    rref,
)
from .ncplane import (
    ConsistencyFailure,
    mixed_rules_s03,
    mixed_rules_s14,
    s03_plane,
    s14_plane,
)
from .parser import ParseError, parse
from .scalar import PoleError, SymbolTable, UnknownSymbol
from .spectral import (
    IrreducibleOverSearchSpace,
    RepeatedRoots,
    find_roots,
    lagrange_projectors,
)
from .verify import run_all
from .ybe import (
    TensorOps,
    braid_ybe_residual,
    expand_pybe_coefficients,
    pybe_coefficient_formulas,
    s03_pybe_residual,
    s14_member_q,
    s14_pybe_residual,
    verify_frt_relations,
)

__all__ = ["main"]


class InputError(Exception):
    """The input file or a parameter expression cannot be used."""


class UsageError(Exception):
    """A verb received an option combination it does not accept."""


_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _parse_parameters(texts: List[str]) -> list:
    """Parse expressions over a shared table of their free identifiers."""
    names = sorted(
        {match.group(0) for text in texts for match in _IDENTIFIER.finditer(text)}
        - {"i"}
    )
    table = SymbolTable(names)
    values = []
    for text in texts:
        try:
            values.append(parse(text, table))
        except (ParseError, UnknownSymbol, PoleError) as exc:
            raise InputError(f"cannot parse parameter {text!r}: {exc}") from exc
    return values


def _load_matrix(path: str) -> SquareMatrix:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    try:
        return matrix_from_obj(obj)
    except (KeyError, TypeError, ValueError, ParseError, UnknownSymbol) as exc:
        raise InputError(f"{path} does not describe a matrix: {exc}") from exc


def _target_kind(target: str) -> Tuple[str, str]:
    lowered = target.lower()
    if lowered in ("s03", "s14"):
        return "builtin", lowered
    if target.startswith("file:"):
        return "file", target[5:]
    raise UsageError(f"target must be s03, s14, or file:PATH, not {target!r}")


def _section(name: str, holds: bool, detail: str) -> dict:
    return {"name": name, "holds": holds, "detail": detail}


def _matrix_lines(obj: dict, indent: str = "  ") -> List[str]:
    return [indent + "[" + ", ".join(row) + "]" for row in obj["entries"]]


def _rows_of(matrix: SquareMatrix) -> tuple:
    reduced, pivots = rref([list(row) for row in matrix.rows])
    return tuple(tuple(reduced[k]) for k in range(len(pivots)))


# ------------------------------------------------------------------ analyze


def _run_analyze(args) -> Tuple[dict, List[str]]:
    kind, name = _target_kind(args.target)
    if kind == "builtin":
        case = builtin_case(name)
        matrix = case.rhat
    else:
        case = None
        matrix = _load_matrix(name)

    poly = minimal_polynomial(matrix)
    try:
        roots = find_roots(poly)
    except IrreducibleOverSearchSpace as exc:
        raise InputError(
            f"spectrum not found: no searched root annihilates {exc.poly}"
        ) from exc

    sections = []
    try:
        ps = lagrange_projectors(matrix, roots)
    except (RepeatedRoots, ValueError) as exc:
        raise InputError(f"matrix is not diagonalisable this way: {exc}") from exc

    count = len(ps.items)
    sections.append(_section(
        "projectors", True,
        f"spectral resolution into {count} orthogonal idempotent{'s' if count != 1 else ''}",
    ))
    sections.append(_section(
        "spectral-recompose", ps.recompose() == matrix,
        "eigenvalue-weighted projector sum restores the matrix",
    ))
    if matrix.n == 4:
        sections.append(_section(
            "constant-ybe", braid_ybe_residual(matrix).is_zero(),
            "braid relation residual on the triple tensor space",
        ))
    else:
        sections.append(_section(
            "constant-ybe", True,
            f"skipped: braid relation needs a 4x4 matrix, this one is {matrix.n}x{matrix.n}",
        ))
    if case is not None:
        published = (
            poly == case.min_poly
            and len(ps.items) == len(case.pairing)
            and all(
                eig == want and proj == case.projectors[label]
                for (eig, proj), (want, label) in zip(ps.items, case.pairing)
            )
        )
        sections.append(_section(
            "published-data", published,
            "minimal polynomial, eigenvalue order, and parameter-free projectors match the case constants",
        ))

    report = {
        "verb": "analyze",
        "target": args.target,
        "holds": all(s["holds"] for s in sections),
        "sections": sections,
        "matrix": matrix_to_obj(matrix),
        "minimal_polynomial": str(poly),
        "eigenvalues": [str(eig) for eig, _ in ps.items],
        "projectors": [
            {"eigenvalue": str(eig), "matrix": matrix_to_obj(proj)}
            for eig, proj in ps.items
        ],
    }

    lines = [f"analyze {args.target}"]
    lines.append("matrix:")
    lines.extend(_matrix_lines(report["matrix"]))
    lines.append(f"minimal polynomial: {report['minimal_polynomial']}")
    lines.append("eigenvalues: " + ", ".join(report["eigenvalues"]))
    for item in report["projectors"]:
        lines.append(f"projector at {item['eigenvalue']}:")
        lines.extend(_matrix_lines(item["matrix"]))
    return report, lines


# ---------------------------------------------------------------- baxterize


def _run_baxterize(args) -> Tuple[dict, List[str]]:
    kind, name = _target_kind(args.target)
    if kind == "file":
        raise UsageError("baxterize works on the built-in cases only")
    if name == "s03":
        if args.triplet is not None:
            raise UsageError("--triplet applies to the s14 target only")
        return _baxterize_s03(args)
    if args.p is not None:
        raise UsageError("--p applies to the s03 target only")
    return _baxterize_s14(args)


def _baxterize_s03(args) -> Tuple[dict, List[str]]:
    p = -2 if args.p is None else args.p
    table = SymbolTable(["x", "y"])
    x, y = table.symbols("x", "y")
    sections = [
        _section(
            "parameterised-braid", s03_pybe_residual(p, x, y).is_zero(),
            f"triple-product residual at exponent {p}, symbolically in x and y",
        ),
        _section(
            "coefficient-law", c_law_residual(p, x, y).is_zero(),
            "cx + cy + 2*cx*cy = cxy for the power-law coefficients",
        ),
    ]
    if p % 2 == 0:
        sections.append(_section(
            "reparametrised-branch", reparametrize_check(p),
            "square-root branch in the substituted variable recovers the same coefficients",
        ))
    report = {
        "verb": "baxterize",
        "target": "s03",
        "p": p,
        "holds": all(s["holds"] for s in sections),
        "sections": sections,
    }
    return report, [f"baxterize s03 (p = {p})"]


def _baxterize_s14(args) -> Tuple[dict, List[str]]:
    report = {"verb": "baxterize", "target": "s14"}
    lines = ["baxterize s14"]
    if args.triplet is not None:
        texts = [piece.strip() for piece in args.triplet.split(",")]
        if len(texts) != 6:
            raise UsageError(
                "--triplet needs six comma-separated expressions: v,w for each slot"
            )
        values = _parse_parameters(texts)
        first, middle, last = (
            (values[0], values[1]), (values[2], values[3]), (values[4], values[5]),
        )
        coeffs = expand_pybe_coefficients(first, middle, last)
        closed = pybe_coefficient_formulas(first, middle, last)
        sections = [
            _section(
                "expansion-coefficients",
                all(coeffs[k] == closed[k] for k in ("a1", "a2", "b1", "b2")),
                "expanded residual coefficients equal their closed forms",
            ),
            _section(
                "residual-zero",
                all(coeffs[k].is_zero() for k in ("a1", "a2", "b1", "b2")),
                "the three supplied members satisfy the parameterised braid equation",
            ),
        ]
        report["triplet"] = [[str(v), str(w)] for v, w in (first, middle, last)]
        report["coefficients"] = {k: str(coeffs[k]) for k in ("a1", "a2", "b1", "b2")}
        lines.append("coefficients:")
        for key in ("a1", "a2", "b1", "b2"):
            lines.append(f"  {key} = {report['coefficients'][key]}")
    else:
        table = SymbolTable(["q", "v", "w", "vp", "wp", "vpp", "wpp"])
        q, v, w, vp, wp, vpp, wpp = table.symbols(
            "q", "v", "w", "vp", "wp", "vpp", "wpp"
        )
        two = table.const(2)
        residual = s14_pybe_residual((v, -two - v), (vp, -two - vp), (vpp, -two - vpp))
        coeffs = expand_pybe_coefficients((v, w), (vp, wp), (vpp, wpp))
        closed = pybe_coefficient_formulas((v, w), (vp, wp), (vpp, wpp))
        sections = [
            _section(
                "triplet-free-braid", residual.is_zero(),
                "three independent members with parameter pairs summing to -2 satisfy the braid equation",
            ),
            _section(
                "coefficient-formulas",
                all(coeffs[k] == closed[k] for k in ("a1", "a2", "b1", "b2")),
                "expanded residual coefficients equal their closed forms in six free parameters",
            ),
            _section(
                "exchange-relations",
                verify_frt_relations(TensorOps(table), s14_member_q(q)),
                "corner projectors intertwine the braided members across adjacent slots",
            ),
        ]
    report["sections"] = sections
    report["holds"] = all(s["holds"] for s in sections)
    return report, lines


# ------------------------------------------------------------------ ncplane


def _run_ncplane(args) -> Tuple[dict, List[str]]:
    kind, name = _target_kind(args.target)
    if kind == "file":
        raise UsageError("ncplane works on the built-in cases only")
    if name == "s03":
        if args.kplus is not None or args.kzero is not None:
            raise UsageError("--kplus/--kzero apply to the s14 target only")
        text = "c" if args.c is None else args.c
        (c,) = _parse_parameters([text])
        table = c.table
        builder = lambda: s03_plane(c)
        expected_mixed = mixed_rules_s03(c)
        coord_rows = ((1, -1, 0, 0), (0, 0, 1, 1))
        parameters = {"c": str(c)}
    else:
        if args.c is not None:
            raise UsageError("--c applies to the s03 target only")
        ptexts = [
            "kplus" if args.kplus is None else args.kplus,
            "kzero" if args.kzero is None else args.kzero,
        ]
        kplus, kzero = _parse_parameters(ptexts)
        table = kplus.table
        builder = lambda: s14_plane(kplus, kzero)
        expected_mixed = mixed_rules_s14(kplus, kzero)
        coord_rows = ((1, 0, 0, -1),)
        parameters = {"kplus": str(kplus), "kzero": str(kzero)}

    sections = []
    try:
        relations = builder()
    except ConsistencyFailure as exc:
        sections.append(_section(
            "consistency", False, f"defining operators clash: witness {exc.witness}"
        ))
        report = {
            "verb": "ncplane",
            "target": name,
            "parameters": parameters,
            "holds": False,
            "sections": sections,
        }
        return report, [f"ncplane {name}"]

    sections.append(_section(
        "consistency", True, "coordinate and differential operators are compatible"
    ))
    expected_coord = tuple(
        tuple(table.const(entry) for entry in row) for row in coord_rows
    )
    eye = SquareMatrix.identity(table, 4)
    expected_diff = _rows_of(expected_mixed + eye)
    sections.append(_section(
        "coordinate-block", relations.coordinates == expected_coord,
        "coordinate relations match the published block",
    ))
    sections.append(_section(
        "differential-block", relations.differentials == expected_diff,
        "differential relations match the published rewrite rules' annihilator",
    ))
    sections.append(_section(
        "rewrite-rules", relations.mixed == expected_mixed,
        "mixed coordinate-differential rules match the published matrix",
    ))

    report = {
        "verb": "ncplane",
        "target": name,
        "parameters": parameters,
        "holds": all(s["holds"] for s in sections),
        "sections": sections,
        "relations": relations.to_obj(),
    }
    lines = [f"ncplane {name} ({', '.join(f'{k} = {v}' for k, v in parameters.items())})"]
    lines.append("relations:")
    lines.extend("  " + text for text in relations.lines())
    return report, lines


# --------------------------------------------------------------- verify-all


def _run_verify_all(args) -> Tuple[dict, List[str]]:
    outcome = run_all(seed=args.seed, fault=args.inject_fault)
    report = {"verb": "verify-all", "target": None}
    report.update(outcome.to_obj())
    return report, [f"verify-all (seed = {args.seed})"]


# ------------------------------------------------------------------ wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidbax",
        description="Exact symbolic analysis of the two exotic braid matrices "
                    "and their parameterised families.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="report rendering (default: text)")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write the report to PATH instead of stdout")

    p = sub.add_parser("analyze", help="spectral analysis of a braided matrix")
    p.add_argument("target", help="s03, s14, or file:PATH (already braided)")
    common(p)

    p = sub.add_parser("baxterize", help="parameterised braid-equation checks")
    p.add_argument("target", help="s03 or s14")
    p.add_argument("--p", type=int, default=None,
                   help="power-family exponent for s03 (default: -2)")
    p.add_argument("--triplet", metavar="V,W,V2,W2,V3,W3", default=None,
                   help="six expressions giving explicit s14 parameter pairs")
    common(p)

    p = sub.add_parser("ncplane", help="derive quadratic plane relations")
    p.add_argument("target", help="s03 or s14")
    p.add_argument("--c", metavar="EXPR", default=None,
                   help="s03 differential coefficient (default: symbol c)")
    p.add_argument("--kplus", metavar="EXPR", default=None,
                   help="s14 corner coefficient (default: symbol kplus)")
    p.add_argument("--kzero", metavar="EXPR", default=None,
                   help="s14 middle coefficient (default: symbol kzero)")
    common(p)

    p = sub.add_parser("verify-all", help="run the complete verification suite")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomised plumbing section (default: 0)")
    p.add_argument("--inject-fault", choices=("s03", "s14"), default=None,
                   help=argparse.SUPPRESS)
    common(p)

    return parser


_RUNNERS = {
    "analyze": _run_analyze,
    "baxterize": _run_baxterize,
    "ncplane": _run_ncplane,
    "verify-all": _run_verify_all,
}


def _emit(report: dict, lines: List[str], args) -> None:
    if args.format == "json":
        payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        body = list(lines)
        for section in report["sections"]:
            mark = "ok" if section["holds"] else "FAIL"
            body.append(f"[{mark:>4}] {section['name']}: {section['detail']}")
        body.append("overall: " + ("ok" if report["holds"] else "FAIL"))
        payload = "\n".join(body) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        report, lines = _RUNNERS[args.verb](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    _emit(report, lines, args)
    return 0 if report["holds"] else 1


if __name__ == "__main__":
    sys.exit(main())
