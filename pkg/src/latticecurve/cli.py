"""Command line front end: ``latticecurve analyze|fan|gaps|verify|plot``.

Exit codes: 0 success, 2 unreadable input, 3 degenerate polygon, 4 fan
invariant violated, 5 invalid trigonal model, 6 campaign found violations.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration as en
from .curves import classify_curve
from .errors import (
    BetaEven,
    CapExceeded,
    DegeneratePolygon,
    DiscriminantOrderEven,
    EmptyPolytope,
    FanError,
    ModelError,
    NoFibrations,
    NotNef,
    ParseError,
)
from .fan import (
    ToricDivisor,
    divisor_of_polygon,
    fiber_degree,
    pr_star,
    relative_minimalize,
    smooth_refine,
    toric_fibrations,
    validate_fan,
)
from .gaps import TrigonalModel, gap_report
from .io import looks_like_fan, parse_fan, parse_model, parse_polygon, polygon_to_json, read_text
from .svg import fan_svg, polygon_svg

EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_FAN = 4
EXIT_MODEL = 5
EXIT_VIOLATIONS = 6

SUITES = ("bounds", "q4", "gonality", "width-oracle", "exceptional")


class _Exit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _table(d: dict) -> str:
    w = max(len(k) for k in d) if d else 0
    lines = []
    for k, v in d.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v)
        lines.append(f"{k:<{w}}  {v}")
    return "\n".join(lines)


def _emit(args, payload, table=None) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = (table if table is not None else _table(payload)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _polygon(src=None, text=None):
    P = parse_polygon(read_text(src) if text is None else text)
    if not P.is_full_dimensional:
        raise _Exit(EXIT_DEGENERATE, f"degenerate polygon {P!r}: need a full-dimensional polygon")
    return P


def cmd_analyze(args) -> int:
    P = _polygon(args.input)
    rep = classify_curve(P)
    d = {"vertices": polygon_to_json(P)}
    d.update(rep.to_dict())
    _emit(args, d)
    return 0


def _fan_input(src):
    """Either ``(rays, coeffs)`` from fan JSON or the divisor of a polygon."""
    text = read_text(src)
    if looks_like_fan(text):
        rays, coeffs = parse_fan(text)
        return rays, coeffs, None
    P = _polygon(text=text)
    C = divisor_of_polygon(P)
    return [list(r) for r in C.fan.rays], list(C.coeffs), P


def _divisor_dict(C: ToricDivisor) -> dict:
    return {
        "rays": [list(r) for r in C.fan.rays],
        "coeffs": list(C.coeffs),
        "self_intersections": list(C.fan.self_intersections),
    }


def cmd_fan(args) -> int:
    rays, coeffs, P = _fan_input(args.input)
    q = args.query
    if q == "refine":
        F = smooth_refine(rays)
        _emit(args, {"rays": [list(r) for r in F.rays], "self_intersections": list(F.self_intersections)})
        return 0
    F = validate_fan(rays)
    C = None
    if coeffs is not None:
        # reorder the coefficients along with the rays
        lookup = {tuple(r): c for r, c in zip(rays, coeffs)}
        C = ToricDivisor(F, tuple(lookup[tuple(r)] for r in F.rays))
    if q == "validate":
        out = {"valid": True, "rays": [list(r) for r in F.rays],
               "self_intersections": list(F.self_intersections)}
        if C is not None:
            out["coeffs"] = list(C.coeffs)
            out["nef"] = C.is_nef
        _emit(args, out)
    elif q == "prstar":
        _emit(args, {"pr_star": [list(d) for d in pr_star(F)]})
    elif q == "fibrations":
        fibs = []
        for fb in toric_fibrations(F):
            item = {"axis": list(fb.axis), "coeffs": list(fb.coeffs)}
            if C is not None and C.is_nef:
                item["degree"] = fiber_degree(fb, C)
            fibs.append(item)
        _emit(args, {"rays": [list(r) for r in F.rays], "fibrations": fibs})
    elif q == "minimalize":
        if C is None:
            raise _Exit(EXIT_PARSE, "minimalize needs coefficients (a polygon or fan JSON with 'coeffs')")
        M = relative_minimalize(C)
        removed = [list(r) for r in F.rays if r not in M.fan.rays]
        out = _divisor_dict(M)
        out["removed_rays"] = removed
        out["polygon"] = polygon_to_json(M.polygon)
        out["changed"] = bool(removed)
        _emit(args, out)
    return 0


def cmd_gaps(args) -> int:
    obj = parse_model(read_text(args.input))
    try:
        M = TrigonalModel.from_dict(obj)
    except (TypeError, KeyError) as e:
        raise _Exit(EXIT_MODEL, f"invalid model: {e}") from None
    _emit(args, gap_report(M).to_dict())
    return 0


def cmd_verify(args) -> int:
    N = args.max_coord
    if args.suite == "bounds":
        rep = en.campaign_selfint_bounds(N)
    elif args.suite == "q4":
        rep = en.campaign_q4_census(N)
    elif args.suite == "gonality":
        rep = en.campaign_gonality_consistency(N)
    elif args.suite == "width-oracle":
        rep = en.campaign_width_oracle(N, n_random=args.random)
    else:
        rep = en.campaign_exceptional_census(N)
    d = rep.to_dict()
    d["max_coord"] = N
    _emit(args, d, rep.table())
    return EXIT_VIOLATIONS if rep.violations else 0


def cmd_plot(args) -> int:
    text = read_text(args.input)
    if looks_like_fan(text):
        rays, _ = parse_fan(text)
        svg = fan_svg(rays)
    else:
        svg = polygon_svg(parse_polygon(text))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    ap = argparse.ArgumentParser(
        prog="latticecurve",
        description="Gonality, Clifford index and toric fibrations of curves on toric surfaces.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="classify the curve of a polygon")
    p.add_argument("input", help="polygon: file, '-' for stdin, or inline like '[[0,0],[4,2],[2,4]]'")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fan", parents=[common], help="fan queries on fan JSON or a polygon")
    p.add_argument("input")
    p.add_argument("--query", choices=("validate", "refine", "fibrations", "prstar", "minimalize"),
                   default="validate")
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("gaps", parents=[common], help="gap sequence of a trigonal model")
    p.add_argument("input", help='model JSON, e.g. \'{"case": "i", "m": 1}\'')
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("verify", parents=[common], help="run an enumeration campaign")
    p.add_argument("--max-coord", type=int, default=5)
    p.add_argument("--suite", choices=SUITES, default="bounds")
    p.add_argument("--random", type=int, default=0, help="extra random polygons (width-oracle)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", parents=[common], help="SVG of a polygon or fan")
    p.add_argument("input")
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as e:
        code, msg = e.code, str(e)
    except (ParseError, CapExceeded) as e:
        code, msg = EXIT_PARSE, str(e)
    except DegeneratePolygon as e:
        code, msg = EXIT_DEGENERATE, str(e)
    except FanError as e:
        code, msg = EXIT_FAN, f"{type(e).__name__}: {e}"
    except (NoFibrations, NotNef, EmptyPolytope) as e:
        code, msg = EXIT_FAN, f"{type(e).__name__}: {e}"
    except (ModelError, BetaEven, DiscriminantOrderEven) as e:
        code, msg = EXIT_MODEL, f"{type(e).__name__}: {e}"
    print(f"latticecurve: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
