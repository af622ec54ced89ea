"""Command-line front end.

Subcommands: eval, dist, classify, hull-dist, verify, oracle, net.  Shared
flags (per subcommand): --order, --precision, --json, --seed.

Exit codes: 0 all checks pass / value printed; 1 a verification check
failed; 2 usage, parse, or domain error; 3 a query was indeterminate at the
requested order/precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cover, gridoracle, hull, lcf, scenarios, spaces
from .errors import (
    BranchIndeterminate,
    IhullError,
    IndeterminateComparison,
    NotFinite,
    ParseError,
)
from .lcf import LeviCivitaNumber
from .parsing import format_number, number_to_json, parse_expression, parse_point

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--order",
        default="8",
        metavar="Q",
        help="truncation order for series operations (rational, default 8)",
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=64,
        metavar="N",
        help="enclosure precision in bits (default 64)",
    )
    parser.add_argument(
        "--json", action="store_true", help="machine-readable output on stdout"
    )
    parser.add_argument(
        "--seed", type=int, default=0, metavar="S", help="seed for generated probes"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ihull",
        description="exact infinitesimal arithmetic, hull distances, and the "
        "punctured-plane universal cover",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an arithmetic expression")
    p_eval.add_argument("expr")
    _common_flags(p_eval)

    p_dist = sub.add_parser("dist", help="extended distance between two points")
    p_dist.add_argument("space", choices=spaces.SPACE_NAMES)
    p_dist.add_argument("p1")
    p_dist.add_argument("p2")
    _common_flags(p_dist)

    p_cls = sub.add_parser(
        "classify", help="classify a number (magnitude) or cover point"
    )
    p_cls.add_argument("point")
    _common_flags(p_cls)

    p_hd = sub.add_parser("hull-dist", help="hull distance (standard part) of halos")
    p_hd.add_argument("space", choices=spaces.SPACE_NAMES)
    p_hd.add_argument("p1")
    p_hd.add_argument("p2")
    _common_flags(p_hd)

    p_ver = sub.add_parser("verify", help="run a named verification scenario")
    p_ver.add_argument("scenario", choices=scenarios.SCENARIO_NAMES)
    _common_flags(p_ver)

    p_or = sub.add_parser("oracle", help="grid-oracle vs closed-form distance")
    p_or.add_argument("p1")
    p_or.add_argument("p2")
    p_or.add_argument(
        "--grid", type=int, default=256, metavar="N", help="levels per axis"
    )
    _common_flags(p_or)

    p_net = sub.add_parser("net", help="print the 2-separated unit-sphere net")
    p_net.add_argument("n", type=int)
    _common_flags(p_net)

    return parser


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _standard_part_payload(d: LeviCivitaNumber):
    try:
        st = lcf.standard_part(d)
    except NotFinite:
        return None
    return {"lo": str(st.lo), "hi": str(st.hi), "approx": float(st.midpoint)}


def _cmd_eval(args) -> int:
    value = parse_expression(args.expr, Fraction(args.order), args.precision)
    _emit(args, {"value": number_to_json(value)}, [format_number(value)])
    return EXIT_OK


def _parse_space_point(space, text: str, args):
    coords = parse_point(text, precision=args.precision)
    return space.point(*coords)


def _cmd_dist(args) -> int:
    space = spaces.get_space(args.space, Fraction(args.order), args.precision)
    a = _parse_space_point(space, args.p1, args)
    b = _parse_space_point(space, args.p2, args)
    d = hull.extended_distance(space, a, b)
    st = _standard_part_payload(d)
    lines = [f"d = {format_number(d)}"]
    if st is None:
        lines.append("st = (not finite)")
    elif st["lo"] == st["hi"]:
        lines.append(f"st = {st['lo']}")
    else:
        lines.append(f"st ~ {st['approx']:.12g}")
    _emit(
        args,
        {"space": args.space, "distance": number_to_json(d), "standard_part": st},
        lines,
    )
    return EXIT_OK


def _cmd_classify(args) -> int:
    coords = parse_point(args.point, precision=args.precision)
    if len(coords) == 1:
        verdict = lcf.classify_magnitude(coords[0])
        payload = {"kind": "magnitude", "verdict": verdict.value}
        lines = [verdict.value]
    elif len(coords) == 2:
        classified = cover.classify_point(cover.CoverPoint(coords[0], coords[1]))
        payload = {"kind": "cover", "verdict": classified.verdict.value}
        if classified.standard_point is not None:
            payload["standard_point"] = [str(i) for i in classified.standard_point]
        lines = [str(classified)]
    else:
        raise ParseError("expected a number or a pair", 0)
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_hull_dist(args) -> int:
    space = spaces.get_space(args.space, Fraction(args.order), args.precision)
    x = hull.halo(space, _parse_space_point(space, args.p1, args))
    y = hull.halo(space, _parse_space_point(space, args.p2, args))
    value = hull.hull_distance(space, x, y)
    payload = {
        "space": args.space,
        "hull_distance": {"lo": str(value.lo), "hi": str(value.hi)},
        "approx": float(value.midpoint),
    }
    _emit(args, payload, [str(value)])
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = scenarios.run_scenario(
        args.scenario, args.seed, Fraction(args.order), args.precision
    )
    lines = [f"scenario: {report['scenario']}"]
    for check in report["checks"]:
        lines.append(f"  {check['verdict']:7s} {check['name']}: {check['details']}")
    verdicts = [c["verdict"] for c in report["checks"]]
    if "fail" in verdicts:
        code = EXIT_CHECK_FAILED
    elif "unknown" in verdicts:
        code = EXIT_INDETERMINATE
    else:
        code = EXIT_OK
    lines.append(f"result: {'pass' if code == EXIT_OK else 'fail' if code == 1 else 'unknown'}")
    _emit(args, report, lines)
    return code


def _standard_floats(coords) -> tuple[float, float]:
    values = []
    for c in coords:
        if not c.is_exact or any(q != 0 for q, _ in c.terms):
            raise IhullError("oracle points need exact standard coordinates")
        values.append(float(c.coefficient(0).lo))
    return tuple(values)


def _cmd_oracle(args) -> int:
    a = _standard_floats(parse_point(args.p1, precision=args.precision))
    b = _standard_floats(parse_point(args.p2, precision=args.precision))
    cfg = gridoracle.window_for([a, b], n_r=args.grid, n_zeta=args.grid)
    approx = gridoracle.oracle_distance(cfg, a, b)
    pa = cover.point(Fraction(a[0]).limit_denominator(10**9), Fraction(a[1]).limit_denominator(10**9))
    pb = cover.point(Fraction(b[0]).limit_denominator(10**9), Fraction(b[1]).limit_denominator(10**9))
    closed = float(
        lcf.standard_part(
            cover.cover_distance(pa, pb, Fraction(args.order), args.precision)
        ).midpoint
    )
    gap = abs(approx - closed) / closed if closed else 0.0
    payload = {
        "oracle": approx,
        "closed_form": closed,
        "relative_gap": gap,
        "grid": args.grid,
    }
    lines = [
        f"oracle      = {approx:.6f}",
        f"closed form = {closed:.6f}",
        f"relative gap = {gap:.4%}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_net(args) -> int:
    net = cover.separated_net(args.n)
    rendered = [str(p) for p in net]
    _emit(args, {"points": rendered}, rendered)
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "dist": _cmd_dist,
    "classify": _cmd_classify,
    "hull-dist": _cmd_hull_dist,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "net": _cmd_net,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IndeterminateComparison, BranchIndeterminate) as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (IhullError, ValueError, ZeroDivisionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
