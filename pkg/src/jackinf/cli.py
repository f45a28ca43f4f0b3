"""Command-line interface: ``jack expand|apply|eigenvalue|step|verify|kernel``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or parse
errors (including a rational ``--alpha`` that hits a pole).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .alpha import AlphaPoleError, AlphaRat, AlphaZeroDivisionError, specialized
from .jack import jack_P
from .operators import eigenvalue_A_k, eigenvalue_A_series, operator_by_name, step_down, step_up
from .partitions import format_partition, parse_partition, removable_rows
from .spectral import expand_pochhammer
from .symfun import SymFun, kernel_closed_form, kernel_truncated
from .verify import SUITES, Bounds, run_suite

__all__ = ["main", "build_parser", "parse_symfun"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_SHORTHAND = re.compile(r"^\{\s*([pm])\s*:\s*\[([\d,\s]*)\]\s*\}$")


class UsageError(Exception):
    pass


def parse_symfun(text: str) -> SymFun:
    """Parse SymFun JSON, the shorthand ``{p:[2,1]}``/``{m:[1,1]}``, or a constant."""
    text = text.strip()
    hit = _SHORTHAND.match(text)
    if hit:
        parts = [int(t) for t in hit.group(2).split(",") if t.strip()]
        return SymFun(hit.group(1), {parse_partition(",".join(map(str, parts))): 1})
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"input is not valid JSON: {exc}") from exc
        if not isinstance(data, dict) or "terms" not in data:
            raise UsageError("SymFun JSON needs a 'terms' list")
        if data.get("basis", "p") not in ("p", "m"):
            raise UsageError("basis must be 'p' or 'm'")
        try:
            return SymFun.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed SymFun JSON: {exc}") from exc
    try:
        return SymFun("p", {(): AlphaRat.parse(text)})
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse input {text!r}") from exc


def _read_input(arg: Optional[str]) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    if not arg.lstrip().startswith("{") and os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _alpha_value(text: Optional[str]) -> Optional[Fraction]:
    if text is None or text in ("symbolic", "sym"):
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--alpha must be 'symbolic' or a rational, got {text!r}") from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=False))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_expand(args) -> int:
    lam = _partition(args.partition)
    exp = jack_P(lam)
    f = exp.body if args.basis == "m" else exp.p_body
    _emit(args, f.to_json(), f"P[{format_partition(lam)}] = {f}")
    return EXIT_OK


def cmd_apply(args) -> int:
    try:
        op = operator_by_name(args.op)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    f = parse_symfun(_read_input(args.input))
    g = op(f).in_basis(args.basis)
    _emit(args, g.to_json(), str(g))
    return EXIT_OK


def cmd_eigenvalue(args) -> int:
    lam = _partition(args.partition)
    series = eigenvalue_A_series(lam)
    if args.k is not None:
        if args.k < 1:
            raise UsageError("-k must be at least 1")
        v = eigenvalue_A_k(lam, args.k)
        _emit(args, {"partition": list(lam), "k": args.k, "eigenvalue": v.to_json()}, str(v))
        return EXIT_OK
    coeffs = expand_pochhammer(series, len(lam)).coeffs
    payload = {
        "partition": list(lam),
        "series": series.to_json(),
        "pochhammer": [c.to_json() for c in coeffs],
    }
    lines = [f"A(u) P[{format_partition(lam)}]: {series}"]
    lines += [f"A^({k}): {c}" for k, c in enumerate(coeffs) if k]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_step(args) -> int:
    lam = _partition(args.partition)
    rows = [args.row] if args.row is not None else removable_rows(lam)
    fn = step_up if args.direction == "up" else step_down
    out = []
    for i in rows:
        try:
            mu, c = fn(lam, i)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        out.append((i, mu, c))
    payload = {
        "partition": list(lam),
        "direction": args.direction,
        "steps": [{"row": i, "mu": list(mu), "coeff": c.to_json()} for i, mu, c in out],
    }
    if args.direction == "up":
        text = "\n".join(f"row {i}: P[{format_partition(mu)}] -> ({c}) P[{format_partition(lam)}]" for i, mu, c in out)
    else:
        text = "\n".join(f"row {i}: P[{format_partition(lam)}] -> ({c}) P[{format_partition(mu)}]" for i, mu, c in out)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = Bounds(
        max_weight=args.max_weight,
        max_k=args.max_k,
        n=args.n,
        m=args.m,
        ydeg=args.ydeg,
        seeds=args.seeds,
        seed=args.seed,
    )
    report = run_suite(args.suite, bounds)
    ok, bad = report.counts()
    if args.format == "json":
        print(json.dumps(report.to_json(), ensure_ascii=False))
    else:
        for r in report.results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.suite}: {r.name}")
        print(f"{args.suite}: {ok} passed, {bad} failed")
        fail = report.first_failure
        if fail is not None:
            print(json.dumps(fail.to_json(), ensure_ascii=False))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_kernel(args) -> int:
    d = args.max_weight
    if d < 0:
        raise UsageError("--max-weight must be non-negative")
    series = kernel_truncated(d)
    matches = series == kernel_closed_form(d)
    keys = sorted(series, key=lambda t: (sum(t[0]), sum(t[1]), t[0], t[1]))
    payload = {
        "degree": d,
        "terms": [{"x": list(a), "y": list(b), "coeff": series[(a, b)].to_json()} for a, b in keys],
        "matches_closed_form": matches,
    }
    text = "\n".join(
        f"p[{format_partition(a)}](x) p[{format_partition(b)}](y): {series[(a, b)]}" for a, b in keys
    )
    text += f"\ndiagonal closed form: {'PASS' if matches else 'FAIL'}"
    _emit(args, payload, text)
    return EXIT_OK if matches else EXIT_FAIL


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", default=None, help="'symbolic' (default) or a rational such as 1 or 1/2")
    common.add_argument("--format", choices=("json", "text"), default=None,
                        help="output format (default: json; text for verify)")

    parser = _Parser(prog="jack", description="Jack functions and the commuting operators A^(k) on symmetric functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", parents=[common], help="expand P_lambda")
    p.add_argument("-l", "--partition", required=True, help="e.g. 3,1,1; '-' for the empty partition")
    p.add_argument("--basis", choices=("m", "p"), default="m")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("apply", parents=[common], help="apply an operator to a symmetric function")
    p.add_argument("--op", required=True, help="A<k>, B<k>, C<k>, H1, H2, a+<n>, a-<n>")
    p.add_argument("--in", dest="input", default=None,
                   help="SymFun JSON, shorthand {p:[2,1]}, a constant, a file name, or '-' for stdin")
    p.add_argument("--basis", choices=("m", "p"), default="p")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("eigenvalue", parents=[common], help="eigenvalue of A(u) or A^(k) on P_lambda")
    p.add_argument("-l", "--partition", required=True)
    p.add_argument("-k", type=int, default=None)
    p.set_defaults(func=cmd_eigenvalue)

    p = sub.add_parser("step", parents=[common], help="step operator coefficients")
    p.add_argument("-l", "--partition", required=True)
    p.add_argument("-i", "--row", type=int, default=None, help="row of the box (default: every removable row)")
    p.add_argument("--direction", choices=("up", "down"), default="up")
    p.set_defaults(func=cmd_step)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--ydeg", type=int, default=3)
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kernel", parents=[common], help="truncated reproducing kernel")
    p.add_argument("--max-weight", type=int, default=4)
    p.set_defaults(func=cmd_kernel)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "text" if args.command == "verify" else "json"
    try:
        r = _alpha_value(args.alpha)
        if r is None:
            return args.func(args)
        with specialized(r):
            return args.func(args)
    except UsageError as exc:
        print(f"jack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AlphaPoleError, AlphaZeroDivisionError) as exc:
        print(f"jack: error: pole at the requested alpha: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
