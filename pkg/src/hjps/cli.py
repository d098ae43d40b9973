"""Command-line front end.

Exit codes: 0 success, 1 a checker ran and said no, 2 bad usage or input
(nothing is written to stdout in that case).  Payloads are JSON with sorted
keys; exact rationals are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import enumeration as en
from .classify import h_basis
from .dualcurve import FIT_TOL, SingularCurveError, fit_dual_sextic, sample_tangents
from .heisenberg import check_h_invariance
from .jps import bracket_table, check_casimir, check_jacobi, parse_casimir_file
from .plot import UnsupportedPlotError, plot_polytope
from .polyring import ParseError, format_poly


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int
    payload: Any = None
    text: str | None = None


def _rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _load_casimirs(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_casimir_file(text)
    except (ParseError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


# -- subcommands ------------------------------------------------------------


def cmd_basis(args) -> CommandResult:
    try:
        rep = h_basis(args.n, args.r)
    except en.EnumerationLimitError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "n": rep.n,
        "r": rep.r,
        "degree": rep.degree,
        "tau_degree": rep.tau_target,
        "dimension": rep.monomial_dimension,
        "invariant_dimension": rep.orbit_dimension,
        "exponents": [list(e) for e in rep.monomials],
    }
    if args.orbits:
        payload["orbits"] = [[list(e) for e in orbit] for orbit in rep.orbits]
        payload["orbit_sums"] = [format_poly(p) for p in rep.orbit_sums()]
    if args.json:
        return CommandResult(0, payload)
    lines = [
        f"n={rep.n} r={rep.r} degree={rep.degree} tau-degree={rep.tau_target}",
        f"dimension (admissible monomials): {rep.monomial_dimension}",
        f"invariant_dimension (sigma-orbits): {rep.orbit_dimension}",
    ]
    if args.orbits:
        lines += [f"  {format_poly(p)}" for p in rep.orbit_sums()]
    return CommandResult(0, text="\n".join(lines) + "\n")


def cmd_count(args) -> CommandResult:
    method = "triangle-brute" if args.method == "triangle" else args.method
    if method in ("closed-form", "triangle-brute") and args.n != 3:
        raise UsageError(f"method {args.method} is only defined for n = 3")
    if args.n < 3 or args.r < 1:
        raise UsageError("need n >= 3 and r >= 1")
    try:
        report = en.count(args.n, args.r, method)
    except en.EnumerationLimitError as exc:
        raise UsageError(str(exc)) from None
    others = list(en.METHODS) if args.n == 3 else ["compositions", "monomial-filter"]
    cross = {}
    for m in others:
        try:
            cross[m] = en.count(args.n, args.r, m).count
        except en.EnumerationLimitError:
            continue
    agree = all(v == report.count for v in cross.values())
    payload = {"n": args.n, "r": args.r, "method": method, "count": report.count, "cross_check": cross, "agree": agree}
    return CommandResult(0 if agree else 1, payload)


def cmd_poincare(args) -> CommandResult:
    if args.max_r < 0:
        raise UsageError("--max-r must be >= 0")
    coeffs = en.poincare_coeffs(args.max_r)
    series = en.poincare_series(3 * args.max_r)
    expected = [1] + [en.dim_h3(r - 1) for r in range(1, args.max_r + 1)]
    ok = coeffs == expected and all(c == 0 for k, c in enumerate(series) if k % 3)
    payload = {"series": en.POINCARE_SERIES, "max_r": args.max_r, "coefficients": coeffs, "formula_agrees": ok}
    return CommandResult(0 if ok else 1, payload)


def cmd_bracket(args) -> CommandResult:
    c = _load_casimirs(args.casimirs)
    table = bracket_table(c)
    if args.pair is not None:
        i, j = args.pair
        if not (0 <= i < c.n and 0 <= j < c.n):
            raise UsageError(f"pair ({i}, {j}) out of range for n={c.n}")
        return CommandResult(0, {"n": c.n, "pair": [i, j], "bracket": format_poly(table.get(i, j))})
    entries = {f"{i},{j}": format_poly(p) for (i, j), p in table.items()}
    return CommandResult(0, {"n": c.n, "casimirs": [format_poly(q) for q in c.casimirs], "brackets": entries})


def cmd_check(args) -> CommandResult:
    c = _load_casimirs(args.casimirs)
    table = bracket_table(c).scale(args.sign)
    inv = check_h_invariance(table)
    jacobi_ok, witness = check_jacobi(table)
    casimir_ok = check_casimir(c, table)
    payload = {
        "n": c.n,
        "sign": args.sign,
        "sigma_ok": inv.sigma_ok,
        "tau_ok": inv.tau_ok,
        "degree_signature_ok": inv.degree_signature_ok,
        "jacobi_ok": jacobi_ok,
        "casimir_ok": casimir_ok,
        "failures": [{"pair": [i, j], "reason": why, "witness": format_poly(w)} for i, j, why, w in inv.failures],
    }
    if witness is not None:
        i, j, k, total = witness
        payload["failures"].append({"triple": [i, j, k], "reason": "jacobi", "witness": format_poly(total)})
    ok = inv.ok and jacobi_ok and casimir_ok
    payload["ok"] = ok
    return CommandResult(0 if ok else 1, payload)


def cmd_dual(args) -> CommandResult:
    if args.samples < 8:
        raise UsageError("--samples must be at least 8")
    try:
        samples = sample_tangents(float(args.gamma), args.samples, args.seed)
    except SingularCurveError as exc:
        raise UsageError(str(exc)) from None
    fit = fit_dual_sextic(samples)
    ok = fit.residual < args.tol
    payload = {
        "gamma": _rational(args.gamma),
        "samples": args.samples,
        "seed": args.seed,
        "tol": args.tol,
        "coeffs": dict(zip("abcd", fit.coeffs)),
        "residual": fit.residual,
        "in_family": ok,
    }
    return CommandResult(0 if ok else 1, payload)


def cmd_polytope(args) -> CommandResult:
    if args.n < 3 or args.r < 1:
        raise UsageError("need n >= 3 and r >= 1")
    system = en.constraint_system(args.n, args.r)
    payload = {
        "n": args.n,
        "r": args.r,
        "tau_degree": en.cyclic_offset(args.n),
        "weight": system.weight,
        "constraints": [list(row) for row in system.rows],
        "count": len(en.enumerate_compositions(args.n, args.r)),
    }
    if args.n == 3:
        r = args.r
        verts = [(0, r), (r, 2 * r), (2 * r, 0)]
        payload["vertices"] = [list(v) for v in verts]
        payload["vertices_ok"] = en.check_polytope_vertices(3, r, verts)
    if args.plot:
        try:
            path = plot_polytope(args.n, args.r, args.plot, args.view)
        except UnsupportedPlotError as exc:
            raise UsageError(str(exc)) from None
        payload["plot"] = str(path)
    return CommandResult(0, payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hjps", description="Heisenberg-invariant Jacobian Poisson structures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="admissible monomials and sigma-orbits in degree n*r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--orbits", action="store_true")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("count", help="count admissible exponents by one method, cross-checked against the others")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", required=True, choices=["closed-form", "triangle", "compositions", "monomial-filter"])
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("poincare", help="Poincare series coefficients in dimension 3")
    p.add_argument("--max-r", type=int, required=True)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("bracket", help="generator brackets of a Casimir file")
    p.add_argument("--casimirs", required=True)
    p.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"))
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("check", help="Heisenberg invariance, Jacobi and Casimir checks")
    p.add_argument("--casimirs", required=True)
    p.add_argument("--sign", type=int, choices=[-1, 1], default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dual", help="fit sampled tangent lines of the AST cubic in the sextic family")
    p.add_argument("--gamma", type=_parse_rational, required=True)
    p.add_argument("--samples", type=int, default=24)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=FIT_TOL)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("polytope", help="constraint system, lattice count and optional SVG plot")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--plot", metavar="PATH")
    p.add_argument("--view", choices=["2d", "3d"])
    p.set_defaults(func=cmd_polytope)
    return parser


def execute(argv: Sequence[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hjps {args.command}: error: {exc}", file=sys.stderr)
        return CommandResult(2)


def run(argv: Sequence[str] | None = None) -> int:
    result = execute(argv)
    if result.exit_code != 2:
        if result.payload is not None:
            sys.stdout.write(dumps(result.payload))
        elif result.text is not None:
            sys.stdout.write(result.text)
    return result.exit_code


def main() -> None:
    sys.exit(run())
