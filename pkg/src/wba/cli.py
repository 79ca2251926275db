"""Command-line interface.

Subcommands: tableaux, idempotent, verify, bratteli, jm, mul.  Output is
machine-readable JSON with deterministic ordering; --pretty on `idempotent`
switches to a human display that is not meant to be parsed.  Usage and input
errors exit with 2, computation failures (uncancelled poles, non-generic h,
non-semisimple parameter) with 1, both carrying a structured error object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import (
    element_from_json,
    element_to_json,
    element_to_text,
    iota,
    jm_element,
)
from .diagrams import Shape
from .errors import (
    IllegalMove,
    IndexOutOfRange,
    ParseError,
    ShapeMismatch,
    WbaError,
)
from .fusion import (
    DEFAULT_H,
    FusionConfig,
    fusion_idempotent,
    idempotent_by,
    second_fusion_idempotent,
)
from .scalars import parse_scalar
from .tableaux import bratteli, enumerate_tableaux, is_semisimple, parse_tableau
from .verify import full_report, interp_idempotent

_USAGE_ERRORS = (ParseError, IllegalMove, IndexOutOfRange, ShapeMismatch)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _error_json(exc: Exception) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


def _shape(args) -> Shape:
    return Shape(args.r, args.s)


def cmd_tableaux(args) -> int:
    shape = _shape(args)
    tableaux = enumerate_tableaux(shape)
    if args.count:
        print(len(tableaux))
        return 0
    _emit(
        {
            "r": shape.r,
            "s": shape.s,
            "count": len(tableaux),
            "tableaux": [
                {
                    "moves": t.moves_str(),
                    "contents": [str(c) for c in t.contents()],
                    "final": {
                        "left": list(t.final.left.parts),
                        "right": list(t.final.right.parts),
                    },
                }
                for t in tableaux
            ],
        }
    )
    return 0


def cmd_idempotent(args) -> int:
    shape = _shape(args)
    if args.delta_rational is not None:
        value = Fraction(args.delta_rational)
        if not is_semisimple(shape.r, shape.s, value):
            raise WbaError(
                f"refusing fusion: the algebra is not semisimple at d = {value}"
            )
    t = parse_tableau(args.tableau, shape)
    h = parse_scalar(args.h) if args.h else DEFAULT_H
    cfg = FusionConfig(method=args.method, variant=args.variant, h=h)
    element = idempotent_by(t, cfg)
    if args.pretty:
        print(element_to_text(element))
        return 0
    payload = {"element": element_to_json(element)}
    if args.check:
        contents = t.contents()
        jm_ok = all(
            jm_element(shape, k) * element
            == element * jm_element(shape, k)
            == element.scale(contents[k - 1])
            for k in range(1, shape.n + 1)
        )
        payload["certification"] = {
            "idempotent": element * element == element,
            "jm_spectrum": jm_ok,
            "iota_fixed": iota(element) == element,
            "methods_agree": {
                "first": fusion_idempotent(t) == element,
                "interp": interp_idempotent(t) == element,
                "second_fwd": second_fusion_idempotent(t, h) == element,
                "second_mirror": second_fusion_idempotent(t, h, mirror=True) == element,
            },
        }
    _emit(payload)
    return 0


def cmd_verify(args) -> int:
    shape = _shape(args)
    seed = int(os.environ.get("WBA_SEED", args.seed))
    report = full_report(shape, seed=seed, suite=args.suite)
    obj = report.to_json()
    if args.delta_rational is not None:
        obj["semisimple_at_delta"] = is_semisimple(
            shape.r, shape.s, Fraction(args.delta_rational)
        )
    _emit(obj)
    return 0 if report.ok else 1


def cmd_bratteli(args) -> int:
    graph = bratteli(_shape(args))
    if args.format == "dot":
        print(graph.to_dot())
    else:
        _emit(graph.to_json())
    return 0


def cmd_jm(args) -> int:
    _emit(element_to_json(jm_element(_shape(args), args.k)))
    return 0


def cmd_mul(args) -> int:
    if args.files and args.files != ["-"]:
        if len(args.files) != 2:
            raise ParseError("mul expects exactly two element files or '-'")
        docs = [json.load(open(path)) for path in args.files]
    else:
        docs = json.load(sys.stdin)
        if not isinstance(docs, list) or len(docs) != 2:
            raise ParseError("stdin must carry a JSON array of two elements")
    a = element_from_json(docs[0])
    b = element_from_json(docs[1])
    _emit(element_to_json(a * b))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wba",
        description="Exact idempotent systems for the walled Brauer algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape(p):
        p.add_argument("r", type=int)
        p.add_argument("s", type=int)

    p = sub.add_parser("tableaux", help="enumerate walled tableaux")
    add_shape(p)
    p.add_argument("--count", action="store_true", help="print only the count")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("idempotent", help="fuse the idempotent of a path")
    add_shape(p)
    p.add_argument("--tableau", required=True, help="move list, e.g. 'L+1,1;L-1,1'")
    p.add_argument("--method", choices=["first", "second", "interp"], default="first")
    p.add_argument("--variant", choices=["fwd", "mirror"], default="fwd")
    p.add_argument("--h", help="free parameter for the second procedure, e.g. '3*d+1/2'")
    p.add_argument("--check", action="store_true", help="append a certification block")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.add_argument("--pretty", action="store_true", help="human display, not parseable")
    p.add_argument("--delta-rational", help="refuse fusion unless semisimple at this d")
    p.set_defaults(func=cmd_idempotent)

    p = sub.add_parser("verify", help="certify a shape")
    add_shape(p)
    p.add_argument(
        "--suite",
        choices=["all", "system", "lemmas", "yang-baxter", "exponents"],
        default="all",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.add_argument("--delta-rational", help="also report semisimplicity at this d")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bratteli", help="emit the branching graph")
    add_shape(p)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(func=cmd_bratteli)

    p = sub.add_parser("jm", help="emit a Jucys-Murphy element")
    add_shape(p)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_jm)

    p = sub.add_parser("mul", help="multiply two elements (files or stdin array)")
    p.add_argument("files", nargs="*", help="two element JSON files, or '-' for stdin")
    p.set_defaults(func=cmd_mul)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        _emit(_error_json(exc))
        return 2
    except WbaError as exc:
        _emit(_error_json(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
