"""Command-line front end.

Exit codes: 0 success, 1 violated hypothesis, 2 witness found by ``verify``,
3 usage error.  Reports go to stdout (or ``--output``) as sorted JSON by
default; ``--format text`` gives a flat ``key: value`` rendering.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import dimcheck, genus, gonality, hilbert, neffeas, primesel
from .errors import ArgumentError, CigonalityError, HypothesisError
from .serialize import dumps, parse_rational, to_jsonable

__all__ = ["main", "run", "build_parser", "PRECISION_ENV"]

PRECISION_ENV = "CIGONALITY_PRECISION"
EXIT_OK, EXIT_HYPOTHESIS, EXIT_WITNESS, EXIT_USAGE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise _UsageError(f"{self.prog}: {message}")


def _integer(text: str) -> int:
    try:
        value = parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value.denominator != 1:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text}")
    return int(value)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _ints(values: Sequence[str]) -> List[int]:
    out = []
    for v in values:
        out.extend(_integer(x) for x in v.split(",") if x)
    return out


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return 12
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise _UsageError(f"{PRECISION_ENV} must be >= 1")
    return value


# ---------------------------------------------------------------------------
# handlers return (report, exit code)


def _bound(args):
    if args.kind == "codim2":
        cert = gonality.cg_bound_codim2(args.n, args.a, args.b)
    elif args.kind == "surface":
        cert = gonality.cg_bound_surface_general(args.e, _ints(args.degrees))
    else:
        cert = gonality.cg_bound_surface_special(args.e, _ints(args.adjusted))
    report = to_jsonable(cert)
    report["bound"] = report["bound_rational"]
    report["guarantee"] = cert.integer_guarantee
    return report, EXIT_OK


def _hilbert(args):
    degrees = _ints(args.degrees or [])
    codim = args.codim if args.codim is not None else len(degrees)
    spec = hilbert.CompleteIntersectionSpec(args.n, tuple(degrees), codim)
    report = {
        "nested": hilbert.h0_ci_nested(spec, args.twist),
        "koszul": hilbert.h0_ci_koszul(spec, args.twist),
    }
    if args.oracle:
        report["series"] = hilbert.h0_series_oracle(spec, args.twist) if args.twist >= 0 else 0
    return report, EXIT_OK


def _primes(args):
    if args.kind == "ramanujan":
        return {"n": args.n, "ramanujan_prime": primesel.ramanujan_prime(args.n)}, EXIT_OK
    if args.kind == "pi":
        return {"x": args.x, "pi": primesel.prime_pi(args.x)}, EXIT_OK
    return to_jsonable(primesel.select_prime_degrees(args.e, _ints(args.degrees))), EXIT_OK


def _genus(args):
    if args.kind == "lower":
        spec = hilbert.CompleteIntersectionSpec(args.n, tuple(_ints(args.degrees)))
        return {"genus_lower_bound": genus.genus_lower_bound(spec, args.degree)}, EXIT_OK
    if args.kind == "gap":
        return {"gap": genus.plane_gap_bound(args.degree, args.genus)}, EXIT_OK
    if args.kind == "delta":
        return {"delta_lower_bound": genus.delta_lower_bound(args.n, args.m, args.precision)}, EXIT_OK
    bound = genus.castelnuovo_upper_bound(_ints(args.degrees_y), args.a_e, args.degree)
    return {"castelnuovo_upper_bound": bound}, EXIT_OK


def _decide(args):
    if args.kind == "codim2":
        system = neffeas.Codim2System(args.n, args.a, args.b, args.s)
        if args.bruteforce:
            k_max = system.default_horizon() if args.k_max is None else args.k_max
            verdict = neffeas.codim2_decide_bruteforce(system, k_max)
        else:
            verdict = neffeas.codim2_decide_analytic(system)
    else:
        degrees = _ints(args.degrees_y)
        system = neffeas.SurfaceSystem(args.e, tuple(degrees), args.a_e, args.s)
        if args.bruteforce:
            verdict = neffeas.surface_decide_bruteforce(system, args.k_max, args.precision)
        else:
            verdict = neffeas.surface_decide(system, args.k_max, args.precision)
    return to_jsonable(verdict), EXIT_OK


def _verify(args):
    if args.kind == "codim2":
        report = neffeas.verify_induction("codim2", n=args.n, a=args.a, b=args.b)
    else:
        report = neffeas.verify_induction(
            "surface",
            e=args.e,
            adjusted=_ints(args.adjusted),
            k_max=args.k_max,
            precision=args.precision,
        )
    out = to_jsonable(report)
    out["witnesses"] = to_jsonable(report.witnesses)
    return out, (EXIT_WITNESS if report.witnesses else EXIT_OK)


def _dimcheck(args):
    degrees = _ints(args.degrees_y)
    if args.kind == "first":
        report = dimcheck.check_first_surface(args.e, degrees, args.a_e, args.s)
    else:
        report = dimcheck.check_second_surface(args.e, degrees, args.b1, args.a_e, args.s)
    return to_jsonable(report), EXIT_OK


def _constants(args):
    return {
        "e": args.e,
        "A": gonality.constant_A(args.e),
        "B": gonality.constant_B(args.e),
        "special_coefficient": gonality.special_coefficient(args.e),
    }, EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", metavar="FILE")
    common.add_argument("--precision", type=_integer, default=None)

    def sub(parent, name, handler, **kw):
        p = parent.add_parser(name, parents=[common], **kw)
        p.set_defaults(handler=handler)
        return p

    parser = _Parser(prog="cigonality", description=__doc__.splitlines()[0])
    cmds = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    bound = cmds.add_parser("bound", help="covering-gonality bounds")
    kinds = bound.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = sub(kinds, "codim2", _bound)
    for flag in ("--n", "--a", "--b"):
        p.add_argument(flag, type=_integer, required=True)
    p = sub(kinds, "surface", _bound)
    p.add_argument("--e", type=_integer, required=True)
    p.add_argument("--degrees", nargs="+", required=True)
    p = sub(kinds, "surface-special", _bound)
    p.add_argument("--e", type=_integer, required=True)
    p.add_argument("--adjusted", nargs="+", required=True)

    p = sub(cmds, "hilbert", _hilbert, help="h^0 of a complete intersection")
    p.add_argument("--n", type=_integer, required=True, help="dimension")
    p.add_argument("--codim", type=_integer)
    p.add_argument("--degrees", nargs="*")
    p.add_argument("--twist", type=_integer, required=True)
    p.add_argument("--oracle", action="store_true", help="also evaluate the series oracle")

    primes = cmds.add_parser("primes", help="prime utilities")
    kinds = primes.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    sub(kinds, "ramanujan", _primes).add_argument("--n", type=_integer, required=True)
    sub(kinds, "pi", _primes).add_argument("--x", type=_integer, required=True)
    p = sub(kinds, "select", _primes)
    p.add_argument("--e", type=_integer, required=True)
    p.add_argument("--degrees", nargs="+", required=True)

    g = cmds.add_parser("genus", help="genus and multiplicity bounds")
    kinds = g.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = sub(kinds, "lower", _genus)
    p.add_argument("--n", type=_integer, required=True, help="dimension of the ambient CI")
    p.add_argument("--degrees", nargs="*", default=[])
    p.add_argument("--degree", type=_integer, required=True, help="curve degree")
    p = sub(kinds, "gap", _genus)
    p.add_argument("--degree", type=_integer, required=True)
    p.add_argument("--genus", type=_rational, required=True)
    p = sub(kinds, "delta", _genus)
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--m", type=_integer, required=True)
    p = sub(kinds, "castelnuovo", _genus)
    p.add_argument("--degrees-y", nargs="+", required=True)
    p.add_argument("--a-e", type=_integer, required=True)
    p.add_argument("--degree", type=_integer, required=True)

    for name, handler, helptext in (
        ("decide", _decide, "decide one induction step"),
        ("verify", _verify, "replay the whole induction"),
    ):
        top = cmds.add_parser(name, help=helptext)
        kinds = top.add_subparsers(dest="kind", required=True, parser_class=_Parser)
        p = sub(kinds, "codim2", handler)
        for flag in ("--n", "--a", "--b"):
            p.add_argument(flag, type=_integer, required=True)
        if name == "decide":
            p.add_argument("--s", type=_integer, required=True)
            p.add_argument("--bruteforce", action="store_true")
            p.add_argument("--k-max", type=_integer)
        p = sub(kinds, "surface", handler)
        p.add_argument("--e", type=_integer, required=True)
        p.add_argument("--k-max", type=_integer)
        if name == "decide":
            p.add_argument("--degrees-y", nargs="+", required=True)
            p.add_argument("--a-e", type=_integer, required=True)
            p.add_argument("--s", type=_integer, required=True)
            p.add_argument("--bruteforce", action="store_true")
        else:
            p.add_argument("--adjusted", nargs="+", required=True)

    d = cmds.add_parser("dimcheck", help="dimension counts for V_1, V_2")
    kinds = d.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for name in ("first", "second"):
        p = sub(kinds, name, _dimcheck)
        p.add_argument("--e", type=_integer, required=True)
        p.add_argument("--degrees-y", nargs="+", required=True)
        p.add_argument("--a-e", type=_integer, required=True)
        p.add_argument("--s", type=_integer, required=True)
        if name == "second":
            p.add_argument("--b1", type=_integer, required=True)

    sub(cmds, "constants", _constants, help="A(e), B(e)").add_argument(
        "--e", type=_integer, required=True
    )
    return parser


def _render_text(report) -> str:
    if not isinstance(report, dict):
        return f"{report}\n"
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, (dict, list)):
            value = dumps(value).strip().replace("\n", " ")
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _error(message: str, hypothesis: Optional[str], stream) -> None:
    payload = {"error": message}
    if hypothesis:
        payload["hypothesis"] = hypothesis
    stream.write(dumps(payload))


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.precision is None:
            args.precision = _default_precision()
        if args.precision < 1:
            raise _UsageError("--precision must be >= 1")
        report, code = args.handler(args)
    except (_UsageError, argparse.ArgumentTypeError) as exc:
        _error(str(exc), None, stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        _error(str(exc), exc.hypothesis, stderr)
        return EXIT_HYPOTHESIS
    except ArgumentError as exc:
        _error(str(exc), None, stderr)
        return EXIT_USAGE
    except CigonalityError as exc:
        _error(str(exc), None, stderr)
        return EXIT_HYPOTHESIS
    text = dumps(report) if args.format == "json" else _render_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:  # console-script entry point
    sys.exit(run())


if __name__ == "__main__":
    main()
