"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 when verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import cycleindex as ci
from .counting import (
    ORBI,
    PLAIN,
    NonIntegralCountError,
    coloring_coefficient,
    coloring_gf,
    cycles_on_quotient,
    necklace_count,
    orbi_polya_count,
    orbifold_cohomology_dimension,
    orbinecklace_count,
    polya_count,
)
from .permgroup import GroupTooLargeError, PermutationError, PermutationGroup, parse_group_spec
from .polyring import MultiPoly, fraction_str
from .verify import SUITES, Bounds, run_suite
from .weighted import WeightedSet

FORMATS = ("text", "latex", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbipolya", description="Cycle and orbicycle index polynomials and orbi-Polya counting.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    def group(p):
        p.add_argument("--group", required=True, help="C:n, D:n, S:n, T:m or G:m:(1 2)(3 4),(1 3)")

    for name in ("index", "orbi-index"):
        p = sub.add_parser(name, help=f"{'orbicycle' if name == 'orbi-index' else 'cycle'} index polynomial")
        group(p)
        fmt(p)
        p.add_argument("--closed-form", action="store_true", help="use the closed form of the family")
        p.add_argument("--variant", choices=("printed", "corrected"), default="corrected")

    p = sub.add_parser("count", help="|[r]^m / G| or its orbi version")
    group(p)
    fmt(p)
    p.add_argument("--colors", "-r", type=_positive, required=True)
    p.add_argument("--orbi", action="store_true")
    p.add_argument("--weights", choices=("trivial", "generic"), default="trivial")

    p = sub.add_parser("coeffs", help="coloration generating function or one coefficient")
    group(p)
    fmt(p)
    p.add_argument("--colors", "-r", type=_positive)
    p.add_argument("--orbi", action="store_true")
    p.add_argument("--exponents", help="comma-separated color content, e.g. 2,1")

    p = sub.add_parser("necklaces", help="necklaces / orbi-necklaces with p beads and r colors")
    fmt(p)
    p.add_argument("-p", type=_positive, required=True)
    p.add_argument("-r", type=_positive, required=True)
    p.add_argument("--orbi", action="store_true")

    p = sub.add_parser("cycles", help="n-cycles on [r]^m / G (plain or orbi on either side)")
    group(p)
    fmt(p)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--colors", "-r", type=_positive, required=True)
    p.add_argument("--quotient", choices=(PLAIN, ORBI), default=ORBI)
    p.add_argument("--cycles", choices=(PLAIN, ORBI), default=ORBI)
    p.add_argument("--weights", choices=("trivial", "generic"), default="trivial")

    p = sub.add_parser("cohomology-dim", help="dimension of the orbifold cohomology of M^n / S_n")
    fmt(p)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("-b", "--basis-size", type=_nonnegative, required=True)

    p = sub.add_parser("verify", help="run verification suites and print a JSON report")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max", type=_positive, dest="max_n")
    p.add_argument("--max-degree", type=_positive, default=4)
    p.add_argument("--max-colors", type=_positive, default=3)
    p.add_argument("--variant", choices=("printed", "corrected"), default="corrected")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _group(spec: str) -> PermutationGroup:
    try:
        return parse_group_spec(spec)
    except (PermutationError, GroupTooLargeError) as exc:
        raise UsageError(f"--group: {exc}") from None


def _variant(v: str) -> str:
    return ci.AS_PRINTED if v == "printed" else ci.CORRECTED


def _family(group: PermutationGroup) -> tuple[str, int]:
    tag = group.family_tag.split()
    if tag[0] == "trivial":
        return "trivial", group.degree
    if tag[0] == "custom":
        raise UsageError("--closed-form: no closed form for custom groups")
    return tag[0], int(tag[1])


def render_poly(p: MultiPoly, fmt: str) -> str:
    if fmt == "latex":
        return p.to_latex()
    if fmt == "json":
        return p.to_json()
    return p.to_text()


def render_value(v, fmt: str) -> str:
    v = Fraction(v)
    if fmt == "json":
        return json.dumps({"value": fraction_str(v)}, separators=(",", ":"))
    if fmt == "latex" and v.denominator != 1:
        return f"\\frac{{{v.numerator}}}{{{v.denominator}}}"
    return fraction_str(v)


def _render_count(p: MultiPoly, fmt: str) -> str:
    return render_value(p.constant_value(), fmt) if p.is_constant() else render_poly(p, fmt)


def _index(args, orbi: bool) -> str:
    G = _group(args.group)
    if not args.closed_form:
        return render_poly(ci.orbicycle_index(G) if orbi else ci.cycle_index(G), args.format)
    family, n = _family(G)
    variant = _variant(args.variant)
    try:
        poly = ci.closed_form(family, n, orbi, variant)
    except ValueError as exc:
        raise UsageError(f"--variant: {exc}") from None
    if orbi and variant == ci.AS_PRINTED:
        truth = ci.orbicycle_index(G)
        if poly != truth:
            print(
                f"warning: printed closed form differs from the definition; difference {truth - poly}",
                file=sys.stderr,
            )
    return render_poly(poly, args.format)


def _colors(r: int, weights: str) -> WeightedSet:
    return WeightedSet.generic(r) if weights == "generic" else WeightedSet.uniform(r)


def _count(args) -> str:
    G = _group(args.group)
    X = _colors(args.colors, args.weights)
    result = orbi_polya_count(G, X) if args.orbi else polya_count(G, X)
    return _render_count(result, args.format)


def _coeffs(args) -> str:
    G = _group(args.group)
    if args.exponents:
        try:
            exps = [int(t) for t in args.exponents.split(",")]
        except ValueError:
            raise UsageError(f"--exponents: expected integers, got {args.exponents!r}") from None
        if args.colors is not None and args.colors != len(exps):
            raise UsageError(f"--exponents: {len(exps)} entries but --colors is {args.colors}")
        if any(e < 0 for e in exps):
            raise UsageError("--exponents: entries must be nonnegative")
        if sum(exps) != G.degree:
            print(f"warning: exponents sum to {sum(exps)}, not the degree {G.degree}", file=sys.stderr)
            return render_value(0, args.format)
        return render_value(coloring_coefficient(G, exps, orbi=args.orbi), args.format)
    if args.colors is None:
        raise UsageError("--colors: required unless --exponents is given")
    return render_poly(coloring_gf(G, args.colors, orbi=args.orbi), args.format)


def _necklaces(args) -> str:
    try:
        value = orbinecklace_count(args.p, args.r) if args.orbi else necklace_count(args.p, args.r)
    except ValueError as exc:
        raise UsageError(f"-p: {exc}") from None
    return render_value(value, args.format)


def _cycles(args) -> str:
    G = _group(args.group)
    X = _colors(args.colors, args.weights)
    result = cycles_on_quotient(args.n, (G, X), quotient=args.quotient, cycles=args.cycles)
    return _render_count(result, args.format)


def _cohomology(args) -> str:
    return render_value(orbifold_cohomology_dimension(args.n, args.basis_size), args.format)


def _verify(args) -> tuple[str, int]:
    bounds = Bounds(
        max_n=args.max_n,
        max_degree=args.max_degree,
        max_colors=args.max_colors,
        variant=_variant(args.variant),
        seed=args.seed,
    )
    if bounds.max_degree > 6:
        raise UsageError("--max-degree: at most 6 (brute-force enumeration)")
    if bounds.max_colors > 4:
        raise UsageError("--max-colors: at most 4 (brute-force enumeration)")
    if args.max_n is not None and args.suite in ("symmetric", "all") and args.max_n > 8:
        raise UsageError("--max: symmetric suite is limited to n <= 8")
    report = run_suite(args.suite, bounds)
    out = json.dumps(report.to_dict(), indent=2)
    if not report.ok:
        bad = report.first_failure()
        print(f"verification failed: {bad.check} at {bad.instance}: {bad.detail}", file=sys.stderr)
        return out, 2
    return out, 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "index": lambda a: _index(a, orbi=False),
        "orbi-index": lambda a: _index(a, orbi=True),
        "count": _count,
        "coeffs": _coeffs,
        "necklaces": _necklaces,
        "cycles": _cycles,
        "cohomology-dim": _cohomology,
    }
    try:
        if args.command == "verify":
            out, code = _verify(args)
        else:
            out, code = handlers[args.command](args), 0
    except UsageError as exc:
        print(f"orbipolya {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except NonIntegralCountError as exc:
        print(f"orbipolya {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
