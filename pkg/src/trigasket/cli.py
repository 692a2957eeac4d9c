"""Command-line front end.

Every subcommand validates before computing and prints exact values;
identical argv always produces byte-identical stdout. Exit codes: 0 on
success, 1 when validation or computation rejects the input, 2 for usage
errors (argparse's default).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from trigasket.acceptance import SUITES, run_suite
from trigasket.coalgebras import get_coalgebra, theta
from trigasket.counterexamples import APEX, delta_point
from trigasket.geometry import (
    Point2,
    QSqrt3,
    RENDER_MAX_DEPTH,
    address_of,
    coords,
    render,
)
from trigasket.metric import dist_G, dist_level
from trigasket.numerics import format_dist
from trigasket.words import canonicalize, parse_word


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r} ({exc})") from None


def _cmd_normalize(args: argparse.Namespace) -> int:
    print(canonicalize(parse_word(args.word)).text)
    return 0


def _cmd_dist(args: argparse.Namespace) -> int:
    u = parse_word(args.words[0])
    v = parse_word(args.words[1])
    print(format_dist(dist_level(u, v, args.level)))
    return 0


def _cmd_gdist(args: argparse.Namespace) -> int:
    u = canonicalize(parse_word(args.words[0]))
    v = canonicalize(parse_word(args.words[1]))
    d = dist_G(u, v)
    print(f"{d.numerator}/{d.denominator}")
    return 0


def _cmd_coords(args: argparse.Namespace) -> int:
    p = coords(parse_word(args.word))
    print(f"x = {p.x.text} = {p.x.decimal()}")
    print(f"y = {p.y.text} = {p.y.decimal()}")
    return 0


def _cmd_address(args: argparse.Namespace) -> int:
    p = Point2(QSqrt3.of(_fraction(args.x)), QSqrt3.of(0, _fraction(args.y_coeff)))
    print(address_of(p, args.depth).text)
    return 0


def _parse_point(coalgebra: str, spec: str):
    if coalgebra == "delta":
        if spec == "apex":
            return APEX
        return delta_point(_fraction(spec))
    if coalgebra == "gasket-sigma":
        parts = spec.split(",")
        if len(parts) != 2:
            raise ValueError(
                f"gasket-sigma points are written 'x,ycoeff' (y = ycoeff*sqrt(3)), got {spec!r}"
            )
        return Point2(
            QSqrt3.of(_fraction(parts[0])), QSqrt3.of(0, _fraction(parts[1]))
        )
    raise ValueError(f"no point syntax for coalgebra {coalgebra!r}")


def _cmd_mediate(args: argparse.Namespace) -> int:
    co = get_coalgebra(args.coalgebra)
    x = _parse_point(args.coalgebra, args.point)
    t = theta(co, x, args.depth)
    anchor = coords(t.word)
    bound = Fraction(1, 2**args.depth)
    print(f"theta_{args.depth} = {t.text}")
    print(f"coords = {anchor.x.text}, {anchor.y.text}")
    print(f"bound = {bound.numerator}/{bound.denominator}")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    count = render(args.depth, args.out, args.format)
    print(f"wrote {count} points to {args.out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite)
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigasket",
        description="Exact address arithmetic on the Sierpinski gasket.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="canonical form of an address word")
    p.add_argument("word", help="address word, e.g. 'bbb.L'")
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("dist", help="quotient distance between two same-level words")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("words", nargs=2, metavar="WORD")
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("gdist", help="distance between two address classes")
    p.add_argument("words", nargs=2, metavar="WORD")
    p.set_defaults(fn=_cmd_gdist)

    p = sub.add_parser("coords", help="planar coordinates of an address word")
    p.add_argument("word")
    p.set_defaults(fn=_cmd_coords)

    p = sub.add_parser("address", help="address of a planar point (x, ycoeff*sqrt(3))")
    p.add_argument("--x", required=True, help="rational x coordinate, e.g. 3/4")
    p.add_argument("--y-coeff", required=True, help="rational sqrt(3)-coefficient of y")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(fn=_cmd_address)

    p = sub.add_parser("mediate", help="depth-n address approximant of a point's limit")
    p.add_argument("--coalgebra", required=True, choices=("gasket-sigma", "delta"))
    p.add_argument("--point", required=True,
                   help="delta: 'apex' or a rational; gasket-sigma: 'x,ycoeff'")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(fn=_cmd_mediate)

    p = sub.add_parser("render", help="write a point-cloud rendering")
    p.add_argument("--depth", type=int, required=True,
                   help=f"0..{RENDER_MAX_DEPTH}")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("svg", "points"), default="svg")
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, NotImplementedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
