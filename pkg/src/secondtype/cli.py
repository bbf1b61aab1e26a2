"""Command-line entry point.

Exit codes: 0 success, 1 unexpected failure, 2 dicritical, 3 depth
exceeded, 4 bad input, 5 two computations disagree.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cuspidal import (
    CuspidalSpec, OracleMismatch, UndefinedIndex, build_cuspidal, classify_cuspidal,
    cusp_gsv, pullback_order,
)
from .foliation import NotSaturated, OneForm, ZeroForm, multiplicity
from .formparse import ParseContext, ParseError, parse_oneform, parse_parameterization, parse_poly
from .newton import NotInvariant, newton_polygon, newton_second_type_test, support_form
from .numfield import NameClash, NotSquarefree
from .polyring import INF
from .reduction import (
    DEFAULT_MAX_DEPTH, DepthExceeded, Dicritical, reduce, same_foliation_reduction, verdict,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_DICRITICAL = 2
EXIT_DEPTH = 3
EXIT_INPUT = 4
EXIT_MISMATCH = 5

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj):
    return json.dumps({"schema": SCHEMA, **obj}, indent=2, sort_keys=True)


def _num(v):
    return "inf" if v == INF else v


def _context(args):
    ctx = ParseContext()
    for decl in args.alg:
        ctx = ctx.declare(decl)
    return ctx


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _polygon_payload(P):
    return {
        "vertices": [list(v) for v in P.vertices],
        "sides": [{"from": list(v), "to": list(w), "inclination": str(s)}
                  for (v, w), s in P.compact_sides],
        "support": sorted(list(pt) for pt in P.support),
    }


def cmd_polygon(args):
    omega = parse_oneform(args.form, _context(args))
    P = newton_polygon(support_form(omega))
    if args.format == "ascii":
        return P.render_ascii()
    if args.format == "svg":
        return P.render_svg()
    return _dump({**_polygon_payload(P), "ascii": P.render_ascii()})


def cmd_classify(args):
    ctx = _context(args)
    omega = parse_oneform(args.form, ctx)
    tree = reduce(omega, args.max_depth)
    if tree.dicritical:
        raise Dicritical(tree.dicritical_at)
    v = verdict(tree)
    out = {
        "form": str(omega),
        "second_type": v.second_type,
        "generalized_curve": v.generalized_curve,
        "blowups": tree.blowup_count,
        "multiplicity": multiplicity(omega),
    }
    if args.separatrix:
        f = parse_poly(args.separatrix, ctx)
        equal = newton_second_type_test(omega, f)
        out["newton_equal"] = equal
        out["separatrix"] = str(f)
        if equal != v.second_type:
            raise OracleMismatch(
                f"Newton polygon test says {equal}, reduction says {v.second_type}")
    return _dump(out)


def cmd_reduce(args):
    omega = parse_oneform(args.form, _context(args))
    tree = reduce(omega, args.max_depth)
    if tree.dicritical:
        raise Dicritical(tree.dicritical_at)
    if args.format == "dot":
        return tree.to_dot()
    return tree.to_json()


def _spec(args):
    ctx = _context(args)
    return CuspidalSpec(args.p, args.q, parse_poly(args.delta, ctx))


def cmd_cuspidal(args):
    spec = _spec(args)
    v = classify_cuspidal(spec, args.oracle, args.max_depth)
    out = v.to_dict()
    if v.same_reduction is None:
        out["same_reduction"] = same_foliation_reduction(
            build_cuspidal(spec), OneForm.exact(spec.separatrix), args.max_depth)
    out.update(p=spec.p, q=spec.q, delta=str(spec.delta))
    return _dump(out)


def cmd_gsv(args):
    spec = _spec(args)
    res = cusp_gsv(spec)
    return _dump({"p": spec.p, "q": spec.q, "delta": str(spec.delta), **res})


def cmd_pullback(args):
    ctx = _context(args)
    omega = parse_oneform(args.form, ctx)
    gamma = parse_parameterization(args.gamma, ctx)
    return _dump({"form": str(omega), "order": _num(pullback_order(gamma, omega))})


def build_parser():
    parser = _Parser(prog="secondtype",
                     description="Classify plane polynomial 1-forms at the origin.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--alg", action="append", default=[], metavar="DECL",
                       help='algebraic constant, e.g. "b: b^2 - 2 ~ 1.414"')
        p.add_argument("--max-depth", type=_positive, default=DEFAULT_MAX_DEPTH)

    p = sub.add_parser("polygon", help="Newton polygon of a form")
    p.add_argument("--form", required=True)
    p.add_argument("--format", choices=("json", "ascii", "svg"), default="json")
    common(p)
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("classify", help="second type / generalized curve verdict")
    p.add_argument("--form", required=True)
    p.add_argument("--separatrix")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", help="reduction of singularities")
    p.add_argument("--form", required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("cuspidal", help="verdict for d(y^p - x^q) + Delta (p x dy - q y dx)")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--oracle", action="store_true",
                   help="confirm the verdict by a full reduction")
    common(p)
    p.set_defaults(func=cmd_cuspidal)

    p = sub.add_parser("gsv", help="GSV index along y^p = x^q")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--delta", required=True)
    common(p)
    p.set_defaults(func=cmd_gsv)

    p = sub.add_parser("pullback", help="order of a form along an arc")
    p.add_argument("--form", required=True)
    p.add_argument("--gamma", required=True, help='"x(t), y(t)"')
    common(p)
    p.set_defaults(func=cmd_pullback)
    return parser


def _error(code, kind, exc):
    return code, _dump({"error": kind, "message": str(exc)})


def run(argv):
    """Run one command; returns ``(exit_code, text)``.

    On failure ``text`` is a JSON error document.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _error(EXIT_INPUT, "usage", exc)
    except SystemExit as exc:  # --help / --version already printed
        return int(exc.code or 0), ""
    try:
        return EXIT_OK, args.func(args)
    except Dicritical as exc:
        return _error(EXIT_DICRITICAL, "dicritical", exc)
    except DepthExceeded as exc:
        return _error(EXIT_DEPTH, "depth-exceeded", exc)
    except OracleMismatch as exc:
        return _error(EXIT_MISMATCH, "oracle-mismatch", exc)
    except ParseError as exc:
        return _error(EXIT_INPUT, "parse", exc)
    except (NotInvariant, NotSaturated, ZeroForm, UndefinedIndex, NameClash,
            NotSquarefree, ValueError) as exc:
        return _error(EXIT_INPUT, "input", exc)
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        return _error(EXIT_FAILURE, "internal", exc)


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stdout if code == EXIT_OK else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
