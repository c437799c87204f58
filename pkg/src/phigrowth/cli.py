"""Command line interface: ``phigrowth {phi,poly,table,energy,ogf,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .closedform import phi_closed, phi_via_series
from .energy import energy_report, u_table
from .exactmath import rat_str
from .growthpoly import growth_polynomial, ogf_psi3_coeffs
from .oracle import BudgetExceeded, ProblemSpec, interval, intset, phi_convolve, phi_enumerate
from .verify import parse_grid, run_grid

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_BUDGET = 0, 1, 2, 3

METHODS = {
    "closed": phi_closed,
    "series": phi_via_series,
    "convolve": phi_convolve,
    "enumerate": phi_enumerate,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_set(text: str) -> tuple[int, ...]:
    """``interval:m:n`` or ``set:a,b,c``."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "interval":
            m, n = rest.split(":")
            return interval(int(m), int(n))
        if kind == "set":
            return intset(int(v) for v in rest.split(","))
    except ValueError as exc:
        raise UsageError(f"bad set spec {text!r}: {exc}") from None
    raise UsageError(f"bad set spec {text!r}; expected interval:m:n or set:a,b,...")


def _emit(fmt: str, text: str, data, rows: list[list] | None = None) -> str:
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows or [])
        return buf.getvalue().rstrip("\n")
    return text


def _spec_dict(spec: ProblemSpec) -> dict:
    return {"h": spec.h, "k": spec.k, "m": spec.m, "c": spec.c}


def cmd_phi(args) -> tuple[str, int]:
    spec = ProblemSpec(args.h, args.k, args.m, args.c)
    if args.n < 1:
        raise UsageError("n must be >= 1")
    names = list(METHODS) if args.method == "all" else [args.method]
    values = {}
    for name in names:
        try:
            values[name] = METHODS[name](spec, args.n)
        except BudgetExceeded:
            if args.method != "all":
                raise
            values[name] = None
    computed = {v for v in values.values() if v is not None}
    code = EXIT_OK
    data = {"spec": _spec_dict(spec), "n": args.n,
            "values": {k: (str(v) if v is not None else None) for k, v in values.items()}}
    if args.method == "all":
        verdict = "AGREE" if len(computed) == 1 else "DISAGREE"
        data["verdict"] = verdict
        code = EXIT_OK if verdict == "AGREE" else EXIT_DISAGREE
        lines = [f"{k}: {v if v is not None else 'skipped (over budget)'}" for k, v in values.items()]
        text = "\n".join(lines + [verdict])
    else:
        text = str(values[args.method])
    rows = [["method", "value"]] + [[k, "" if v is None else v] for k, v in values.items()]
    return _emit(args.format, text, data, rows), code


def cmd_poly(args) -> tuple[str, int]:
    g = growth_polynomial(ProblemSpec(args.h, args.k, args.m, args.c))
    data = {"spec": _spec_dict(g.spec), "poly": g.poly.to_str(), "coeffs": g.poly.to_json_map(),
            "n0_paper": g.n0_paper, "n0_empirical": g.n0_empirical, "u0_fixed": g.u0_fixed}
    text = "\n".join([g.poly.to_str(), f"n0_paper: {g.n0_paper}",
                      f"n0_empirical: {g.n0_empirical}", f"u0_fixed: {g.u0_fixed}"])
    rows = [["exponent", "coefficient"]]
    rows += [[e, rat_str(c)] for e, c in reversed(list(enumerate(g.poly.coeffs))) if c]
    return _emit(args.format, text, data, rows), EXIT_OK


def cmd_table(args) -> tuple[str, int]:
    hs = list(range(1, args.max_h + 1))
    if args.extra:
        try:
            hs += [int(v) for v in args.extra.split(",") if v.strip()]
        except ValueError:
            raise UsageError(f"bad --extra list {args.extra!r}") from None
    if any(h < 1 for h in hs):
        raise UsageError("h values must be >= 1")
    table = u_table(hs, args.digits)
    header = ["h", "ell", "U", "ell_exact", "U_exact"]
    rows = [[r.h, str(r.ell_dec), str(r.U_dec), rat_str(r.ell), rat_str(r.U)] for r in table]
    data = [dict(zip(header, row)) for row in rows]
    # exact rationals get long quickly; the text table shows decimals only
    shown = [row[:3] for row in [header] + rows]
    widths = [max(len(str(x)) for x in col) for col in zip(*shown)]
    text = "\n".join("  ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in shown)
    return _emit(args.format, text, data, [header] + rows), EXIT_OK


def cmd_energy(args) -> tuple[str, int]:
    A = parse_set(args.set)
    r = energy_report(A, args.h)
    fields = [("set", r.descriptor), ("h", r.h), ("size", r.size), ("psi", r.psi),
              ("sumset_size", r.sumset_size), ("omega", rat_str(r.omega)),
              ("kappa", rat_str(r.kappa)), ("product", rat_str(r.product))]
    data = dict(fields)
    text = " ".join(f"{k}={v}" for k, v in fields)
    rows = [[k for k, _ in fields], [v for _, v in fields]]
    return _emit(args.format, text, data, rows), EXIT_OK


def cmd_ogf(args) -> tuple[str, int]:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    coeffs = ogf_psi3_coeffs(args.count)
    data = {"coefficients": [str(v) for v in coeffs]}
    rows = [["j", "coefficient"]] + [[j, v] for j, v in enumerate(coeffs)]
    return _emit(args.format, ", ".join(map(str, coeffs)), data, rows), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    try:
        grid = parse_grid(args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_grid(grid, args.enum_budget, inject_fault=args.inject_fault)
    verdict = "PASS" if report.passed else "FAIL"
    lines = [f"{verdict}, {len(report.failures)} disagreements ({report.checks} checks)"]
    lines += report.failures[:20]
    data = {"verdict": verdict, "checks": report.checks, "failures": report.failures}
    rows = [["verdict", "checks", "disagreements"], [verdict, report.checks, len(report.failures)]]
    return _emit(args.format, "\n".join(lines), data, rows), (EXIT_OK if report.passed else EXIT_DISAGREE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)

    parser = _Parser(prog="phigrowth", parents=[common],
                     description="Exact counts and growth polynomials for "
                                 "(a1+..+ah)-(a_{h+1}+..+a_{h+k}) = c over integer intervals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def problem(p, with_n=True):
        for name in ("h", "k", "m", "c"):
            p.add_argument(name, type=int)
        if with_n:
            p.add_argument("n", type=int)

    p = sub.add_parser("phi", parents=[common], help="count solutions for one n")
    problem(p)
    p.add_argument("--method", choices=[*METHODS, "all"], default="closed")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("poly", parents=[common], help="growth polynomial and thresholds")
    problem(p, with_n=False)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", parents=[common], help="leading coefficients ell(h) and U(h)")
    p.add_argument("--max-h", type=int, default=10)
    p.add_argument("--extra", default="")
    p.add_argument("--digits", type=int, default=5)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("energy", parents=[common], help="additive energy of a set")
    p.add_argument("set", help="interval:m:n or set:a,b,c,...")
    p.add_argument("h", type=int)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("ogf", parents=[common], help="expand the generating function of Psi_3")
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_ogf)

    p = sub.add_parser("verify", parents=[common], help="cross-check all counting routes on a grid")
    p.add_argument("--grid", default="hk<=6,|m|<=2,|c|<=10,n<=12")
    p.add_argument("--enum-budget", type=int, default=10**7)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"phigrowth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"phigrowth: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"phigrowth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
