"""Command-line front end.

Subcommands: ``curvature`` (full expansion), ``cq`` (one path sum),
``binom`` (Gaussian binomial), ``infinitesimal`` (first-order
coefficients), ``verify`` (cross-validation suite).  Output formats:
text, latex, json.  Exit codes: 0 success, 1 verification failure,
2 argument error.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from .curvature import (
    InfinitesimalCoefficients,
    infinitesimal_coefficients,
    path_expansion,
    resolve_default_rule,
    root_of_unity_expansion,
    verify_suite,
)
from .cyclo import CycloModulus, QPoly, coeffs_list, q_binomial
from .freealg import ElementPoly
from .paths import Comp, WeightRule, path_sum_dp, path_sum_enum


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("n must be a positive integer")
    return value


def _comp(text: str) -> Comp:
    try:
        return Comp.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcurvature",
        description="Exact calculator for deformed q-differentials at roots of unity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, rule: bool = True) -> None:
        p.add_argument("--n", type=_positive_int, required=True)
        p.add_argument("--mode", choices=("generic", "root"), default="root")
        p.add_argument("--format", choices=("text", "latex", "json"), default="text")
        if rule:
            p.add_argument(
                "--rule", choices=("default", "literal", "prefix"), default="default"
            )

    p_curv = sub.add_parser("curvature", help="expansion of the n-th deformed power")
    common(p_curv)
    p_curv.set_defaults(handler=_run_curvature)

    p_cq = sub.add_parser("cq", help="weighted path sum to one composition")
    common(p_cq)
    p_cq.add_argument("--s", type=_comp, required=True, metavar="COMP")
    p_cq.add_argument("--method", choices=("dp", "enum"), default="dp")
    p_cq.set_defaults(handler=_run_cq)

    p_binom = sub.add_parser("binom", help="Gaussian binomial coefficient")
    common(p_binom, rule=False)
    p_binom.add_argument("--k", type=int, required=True)
    p_binom.set_defaults(handler=_run_binom)

    p_inf = sub.add_parser("infinitesimal", help="first-order deformation coefficients")
    common(p_inf)
    p_inf.set_defaults(handler=_run_infinitesimal)

    p_verify = sub.add_parser("verify", help="run the cross-validation suite")
    common(p_verify)
    p_verify.set_defaults(handler=_run_verify)

    return parser


def _resolve_rule(args: argparse.Namespace) -> WeightRule | None:
    """Map the --rule flag to a WeightRule; None means arbitrated default."""
    if args.rule == "default":
        rule = resolve_default_rule()
        print(f"rule: {rule.value} (oracle-arbitrated default)", file=sys.stderr)
        return rule
    return WeightRule(args.rule)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _require(condition: bool, parser_message: str) -> None:
    if not condition:
        print(f"error: {parser_message}", file=sys.stderr)
        raise SystemExit(2)


def _poly_out(value: QPoly, fmt: str, payload: dict) -> None:
    if fmt == "text":
        print(value)
    elif fmt == "latex":
        print(value.latex())
    else:
        payload["value"] = coeffs_list(value)
        _emit_json(payload)


def _element_latex(element: ElementPoly) -> str:
    if element.is_zero():
        return "0"
    parts = []
    for mono, coeff in element.items():
        cstr = coeff.latex()
        if cstr == "1":
            parts.append(mono.latex())
            continue
        if "+" in cstr or "-" in cstr:
            cstr = f"({cstr})"
        parts.append(f"{cstr}{mono.latex()}" if len(mono) else cstr)
    return " + ".join(parts)


def _run_curvature(args: argparse.Namespace) -> int:
    rule = _resolve_rule(args)
    if args.mode == "root":
        _require(args.n >= 2, "curvature --mode root needs --n >= 2")
        expansion = root_of_unity_expansion(args.n, rule)
        top = args.n - 1
    else:
        expansion = path_expansion(args.n, rule)
        top = args.n
    if args.format == "json":
        _emit_json(expansion.to_json_dict())
    elif args.format == "latex":
        for k in range(top, -1, -1):
            print(f"c_{{{k}}} = {_element_latex(expansion.coefficient(k))}")
    else:
        for k in range(top, -1, -1):
            print(f"c[{k}] = {expansion.coefficient(k)}")
    return 0


def _run_cq(args: argparse.Namespace) -> int:
    rule = _resolve_rule(args)
    compute = path_sum_dp if args.method == "dp" else path_sum_enum
    value = compute(args.s, args.n, rule)
    if args.mode == "root":
        _require(args.n >= 2, "cq --mode root needs --n >= 2")
        value = CycloModulus.of(args.n).reduce(value)
    payload = {
        "n": args.n,
        "s": list(args.s.entries),
        "rule": rule.value,
        "method": args.method,
        "mode": args.mode,
    }
    _poly_out(value, args.format, payload)
    return 0


def _run_binom(args: argparse.Namespace) -> int:
    value = q_binomial(args.n, args.k)
    if args.mode == "root":
        _require(args.n >= 2, "binom --mode root needs --n >= 2")
        value = CycloModulus.of(args.n).reduce(value)
    payload = {"n": args.n, "k": args.k, "mode": args.mode}
    _poly_out(value, args.format, payload)
    return 0


def _run_infinitesimal(args: argparse.Namespace) -> int:
    _require(args.n >= 2, "infinitesimal needs --n >= 2")
    rule = _resolve_rule(args)
    coeffs: InfinitesimalCoefficients = infinitesimal_coefficients(args.n, rule)
    if args.mode == "root":
        coeffs = coeffs.reduced(CycloModulus.of(args.n))
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "mode": args.mode,
                "rule": rule.value,
                "coeffs": [coeffs_list(c) for c in coeffs.coeffs],
            }
        )
    elif args.format == "latex":
        for m, c in enumerate(coeffs.coeffs):
            print(f"m={m}: {c.latex()}")
    else:
        for m, c in enumerate(coeffs.coeffs):
            print(f"m={m}: {c}")
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    _require(args.n >= 2, "verify needs --n >= 2")
    rule = None if args.rule == "default" else WeightRule(args.rule)
    report = verify_suite(args.n, rule)
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        for line in report.summary_lines():
            print(line)
    return 0 if report.passed else 1


def run(argv: list[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
