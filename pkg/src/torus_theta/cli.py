"""Command line front end: ``torus-theta <command> [options] [--format human|json]``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
JSON output carries ``"schema": 1``; knots are [p, q] arrays.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import __version__
from .classify import (
    ConnectedSum,
    Prime,
    ThetaOnTorus,
    classify_pqr,
    classify_theta,
    is_prime_theta,
    theta_equivalent,
)
from .constituents import (
    ThetaPQR,
    ThetaSignVariant,
    constituents_pqr,
    constituents_sign_variant,
)
from .errors import ThetaError
from .fibonacci import fib_table
from .knot_core import TorusKnot, unoriented
from .oracle import cross_check
from .render import render_cover, render_square

SCHEMA = 1


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b' with integers, got {text!r}") from None
    return a, b


def _triple(text: str):
    parts = text.split(";")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected 'a1,b1;a2,b2;a3,b3', got {text!r}")
    return tuple(_pair(part) for part in parts)


def format_knot(k: TorusKnot) -> str:
    """Paper-style notation: an oriented knot is written t(a,b) or -t(a,b)."""
    u = unoriented(k)
    return str(k) if u == k else f"-{u}"


def _knot_json(k: TorusKnot) -> list[int]:
    return [k.p, k.q]


def _verdict_json(v) -> dict:
    if isinstance(v, Prime):
        return {"verdict": "prime", "p": v.p, "q": v.q, "sign": v.sign.value}
    if isinstance(v, ConnectedSum):
        return {
            "verdict": "connected_sum",
            "knot": _knot_json(v.knot),
            "knot_homeomorphism": _knot_json(v.homeomorphism_knot),
        }
    return {"verdict": "unknotted"}


def _verdict_human(v) -> str:
    if isinstance(v, Prime):
        return f"prime, isotopic on T to {v}"
    if isinstance(v, ConnectedSum):
        return f"2-connected sum θ_U #2 {v.knot}"
    return "unknotted"


def _cmd_constituents(args):
    if args.variant is not None:
        if args.r != 0:
            raise UsageError("--variant cannot be combined with --r")
        variant = ThetaSignVariant(args.variant)
        knots = sorted(constituents_sign_variant(args.p, args.q, variant))
        data = {
            "input": {"p": args.p, "q": args.q, "variant": variant.value},
            "unoriented_set": [_knot_json(k) for k in knots],
        }
        signs = {"pp": (1, 1), "pn": (1, -1), "nn": (-1, -1), "np": (-1, 1)}[variant.value]
        label = f"θ({signs[0] * args.p},{signs[1] * args.q})"
        human = [label, "  unoriented constituents: " + ", ".join(str(k) for k in knots)]
        return data, human
    theta = ThetaPQR(args.p, args.q, args.r)
    triple = constituents_pqr(theta)
    data = {
        "input": {"p": args.p, "q": args.q, "r": args.r},
        "k3": _knot_json(triple.k3),
        "k2": _knot_json(triple.k2),
        "k1": _knot_json(triple.k1),
        "unoriented_set": [_knot_json(k) for k in sorted(triple.unoriented_set())],
    }
    human = [
        str(theta),
        f"  k3 = {format_knot(triple.k3)}",
        f"  k2 = {format_knot(triple.k2)}",
        f"  k1 = {format_knot(triple.k1)}",
    ]
    return data, human


def _cmd_classify(args):
    theta = ThetaOnTorus.from_pairs(args.triple)
    verdict = classify_theta(theta)
    data = {"input": {"triple": [list(c) for c in theta]}, **_verdict_json(verdict)}
    return data, [_verdict_human(verdict)]


def _cmd_equiv(args):
    v = theta_equivalent(args.lhs, args.rhs)
    data = {
        "input": {"lhs": list(args.lhs), "rhs": list(args.rhs)},
        "isotopic": v.isotopic,
        "homeomorphic": v.homeomorphic,
    }
    lhs, rhs = f"θ({args.lhs[0]},{args.lhs[1]})", f"θ({args.rhs[0]},{args.rhs[1]})"
    human = [f"{lhs} vs {rhs}: isotopic={v.isotopic} homeomorphic={v.homeomorphic}"]
    return data, human


def _cmd_prime(args):
    theta = ThetaPQR(args.p, args.q, args.r)
    verdict = classify_pqr(theta)
    prime = is_prime_theta(verdict)
    data = {"input": {"p": args.p, "q": args.q, "r": args.r}, "prime": prime, **_verdict_json(verdict)}
    return data, [f"{theta}: {'prime' if prime else 'not prime'} ({_verdict_human(verdict)})"]


def _cmd_fib(args):
    records = fib_table(args.max)
    data = {
        "input": {"max": args.max},
        "records": [
            {
                "n": rec.n,
                "F_n": rec.Fn,
                "F_n1": rec.Fn1,
                "k3": _knot_json(rec.constituents.k3),
                "k2": _knot_json(rec.constituents.k2),
                "k1": _knot_json(rec.constituents.k1),
            }
            for rec in records
        ],
    }
    human = []
    for rec in records:
        c = rec.constituents
        human.append(
            f"n={rec.n:<3} {f'θ({rec.Fn},{rec.Fn1})':<12} k3 = {format_knot(c.k3)}  "
            f"k2 = {format_knot(c.k2)}  k1 = {format_knot(c.k1)}"
        )
    return data, human


def _cmd_render(args):
    draw = render_square if args.style == "square" else render_cover
    try:
        diagram = draw(args.p, args.q, args.r, out=args.out)
    except OSError as exc:
        raise ThetaError(f"cannot write {args.out}: {exc}") from exc
    data = {
        "input": {"p": args.p, "q": args.q, "r": args.r, "style": args.style, "out": args.out},
        "width": diagram.width,
        "height": diagram.height,
        "segments": len(diagram.segments),
    }
    return data, [f"wrote {args.out} ({diagram.width}x{diagram.height})"]


def _cmd_selftest(args):
    report = cross_check(args.max, args.rmax)
    data = {"input": {"max": args.max, "rmax": args.rmax}, **report.as_dict()}
    human = [
        f"checked {report.pairs_checked} pairs, {report.cases_checked} (p,q,r) cases: "
        f"{len(report.failures)} failures"
    ]
    human += ["  " + f for f in report.failures]
    return data, human, (0 if report.ok else 1)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["human", "json"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="torus-theta",
        description="Constituent knots and classification of theta-curves on the standard torus.",
        parents=[fmt],
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constituents", parents=[fmt], help="constituent knots of θ(p,q,r)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--variant", choices=[v.value for v in ThetaSignVariant])
    p.set_defaults(func=_cmd_constituents)

    p = sub.add_parser("classify", parents=[fmt], help="classify a triple of constituent classes")
    p.add_argument("--triple", type=_triple, required=True, metavar="a1,b1;a2,b2;a3,b3")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("equiv", parents=[fmt], help="compare θ(p,q) and θ(p',q')")
    p.add_argument("--lhs", type=_pair, required=True, metavar="P,Q")
    p.add_argument("--rhs", type=_pair, required=True, metavar="P,Q")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("prime", parents=[fmt], help="primeness of θ(p,q,r)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.set_defaults(func=_cmd_prime)

    p = sub.add_parser("fib", parents=[fmt], help="θ(F_n,F_{n+1}) for n = 3..max")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_fib)

    p = sub.add_parser("render", parents=[fmt], help="write an SVG picture of θ(p,q,r)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--style", choices=["square", "cover"], default="square")
    p.add_argument("--out", required=True, metavar="FILE.svg")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("selftest", parents=[fmt], help="cross-check closed forms against the oracles")
    p.add_argument("--max", type=int, default=30)
    p.add_argument("--rmax", type=int, default=4)
    p.set_defaults(func=_cmd_selftest)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "human")
    try:
        result = args.func(args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"torus-theta: error: {exc}", file=stderr)
        return 2
    except ThetaError as exc:
        name = type(exc).__name__
        if fmt == "json":
            print(json.dumps({"schema": SCHEMA, "error": name, "message": str(exc)}), file=stderr)
        else:
            print(f"{name}: {exc}", file=stderr)
        return 1
    data, human = result[0], result[1]
    status = result[2] if len(result) > 2 else 0
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **data}, ensure_ascii=False), file=stdout)
    else:
        print("\n".join(human), file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
