"""Command-line front end.

Every capability of the library is a subcommand over map files.  Exit
codes make the tool scriptable: 0 is an affirmative answer (conjugate,
valid, found), 1 a definite negative (not conjugate, no such
conjugator, no root, certificate invalid), 2 a usage or input error.
Output is exact rational text; maps are printed in the same format the
tool reads, with '#' status lines in front, so results can be fed
straight back in.  --json switches any subcommand to a machine-readable
document with the same content.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    ClassMismatch,
    PLConjError,
    SlopeMismatch,
)
from .files import parse_map_file, serialize_map, write_map_file
from .mather import mather_invariant
from .plmap import BumpKind, PLMap, classify, compose, invert, power
from .rational import format_rat, parse_rat, rational_nth_root
from .solver import (
    Conjugate,
    are_conjugate,
    centralizer_generator,
    nth_root,
)
from .stair import conjugator_with_slope, linearity_boxes, verify_conjugator
from .svg import plot

__all__ = ["console_entry", "main", "run"]


def _rat_arg(token: str):
    try:
        return parse_rat(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plconj",
        description="Exact conjugacy tools for one-bump PL homeomorphisms of [0,1].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, maps=(), out=False):
        p = sub.add_parser(name, help=help_text)
        for metavar in maps:
            p.add_argument(metavar, help=f"breakpoint file for {metavar}")
        if out:
            p.add_argument("-o", "--output", help="also write the resulting map here")
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        return p

    p = add("eval", "evaluate a map at a rational point", maps=("map",))
    p.add_argument("t", type=_rat_arg, help="argument in [0,1], written p/q")

    add("compose", "compose two maps (outer inner)", maps=("outer", "inner"), out=True)
    add("invert", "invert a map", maps=("map",), out=True)

    p = add("power", "integer power of a map", maps=("map",), out=True)
    p.add_argument("-n", type=int, required=True, help="exponent, any integer")

    add("classify", "position of a map relative to the diagonal", maps=("map",))
    add("boxes", "common linearity boxes of a below-diagonal pair", maps=("y", "z"))
    add("mather", "Mather germ of an above-diagonal map", maps=("map",))
    add("conjugate", "decide conjugacy and print a certificate", maps=("y", "z"), out=True)

    p = add(
        "conjugator-with-slope",
        "the unique conjugator with a prescribed initial slope, if any",
        maps=("y", "z"),
        out=True,
    )
    p.add_argument("-q", type=_rat_arg, required=True, help="initial slope, p/q")

    add("centralizer", "generator of the centralizer", maps=("map",), out=True)

    p = add("root", "n-th root of a map, if one exists", maps=("map",), out=True)
    p.add_argument("-n", type=int, required=True, help="root degree, n >= 1")

    add("verify", "check a conjugacy certificate g y z", maps=("g", "y", "z"))

    p = add("plot", "render a map as a deterministic SVG", maps=("map",))
    p.add_argument("-o", "--output", required=True, help="SVG file to write")
    return parser


def _bp_list(f: PLMap) -> list:
    return [[format_rat(x), format_rat(y)] for x, y in f.breakpoints]


def _emit(args, doc: dict, map_out: PLMap | None = None) -> None:
    """Print a result document; optionally attach and/or save a map."""
    if map_out is not None and args.output:
        write_map_file(map_out, args.output)
    if args.json:
        if map_out is not None:
            doc["map"] = _bp_list(map_out)
        print(json.dumps(doc, indent=2))
        return
    for key, value in doc.items():
        if key == "status":
            print(f"# {value}")
        else:
            print(f"# {key} {value}")
    if map_out is not None:
        sys.stdout.write(serialize_map(map_out))


def _cmd_eval(args) -> int:
    f = parse_map_file(args.map)
    value = f(args.t)
    if args.json:
        print(json.dumps({"status": "ok", "value": format_rat(value)}, indent=2))
    else:
        print(format_rat(value))
    return 0


def _cmd_compose(args) -> int:
    f = compose(parse_map_file(args.outer), parse_map_file(args.inner))
    _emit(args, {"status": "ok"}, f)
    return 0


def _cmd_invert(args) -> int:
    _emit(args, {"status": "ok"}, invert(parse_map_file(args.map)))
    return 0


def _cmd_power(args) -> int:
    _emit(args, {"status": "ok"}, power(parse_map_file(args.map), args.n))
    return 0


def _cmd_classify(args) -> int:
    cls = classify(parse_map_file(args.map))
    if args.json:
        fixed = [
            [format_rat(w[0]), format_rat(w[1])]
            if isinstance(w, tuple)
            else format_rat(w)
            for w in cls.fixed
        ]
        doc = {"status": "ok", "class": cls.kind.value}
        if cls.kind is BumpKind.CROSSING:
            doc["fixed"] = fixed
        print(json.dumps(doc, indent=2))
        return 0
    if cls.kind is BumpKind.CROSSING:
        parts = [
            f"[{format_rat(w[0])}, {format_rat(w[1])}]"
            if isinstance(w, tuple)
            else format_rat(w)
            for w in cls.fixed
        ]
        print(f"crossing: fixed at {', '.join(parts)}")
    else:
        print(cls.kind.value)
    return 0


def _cmd_boxes(args) -> int:
    boxes = linearity_boxes(parse_map_file(args.y), parse_map_file(args.z))
    doc = {
        "status": "ok",
        "alpha": format_rat(boxes.alpha),
        "beta": format_rat(boxes.beta),
        "initial-slope": format_rat(boxes.initial_slope),
        "final-slope": format_rat(boxes.final_slope),
    }
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for key in ("alpha", "beta", "initial-slope", "final-slope"):
            print(f"{key} {doc[key]}")
    return 0


def _cmd_mather(args) -> int:
    germ = mather_invariant(parse_map_file(args.map))
    profile = [[format_rat(x), format_rat(v)] for x, v in germ.profile]
    if args.json:
        doc = {
            "status": "ok",
            "m0": format_rat(germ.m0),
            "m1": format_rat(germ.m1),
            "anchor": format_rat(germ.anchor),
            "steps": germ.steps,
            "profile": profile,
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"# m0 {format_rat(germ.m0)}")
    print(f"# m1 {format_rat(germ.m1)}")
    print(f"# anchor {format_rat(germ.anchor)}")
    print(f"# steps {germ.steps}")
    for x, v in profile:
        print(f"{x} {v}")
    return 0


def _cmd_conjugate(args) -> int:
    outcome = are_conjugate(parse_map_file(args.y), parse_map_file(args.z))
    if isinstance(outcome, Conjugate):
        doc = {
            "status": "conjugate",
            "rot0": format_rat(outcome.rotation.rot0),
            "rot1": format_rat(outcome.rotation.rot1),
        }
        _emit(args, doc, outcome.conjugator)
        return 0
    doc = {
        "status": "not-conjugate",
        "reason": outcome.reason.value,
        "witness": outcome.witness,
    }
    _emit(args, doc)
    return 1


def _cmd_conjugator_with_slope(args) -> int:
    y = parse_map_file(args.y)
    z = parse_map_file(args.z)
    try:
        g = conjugator_with_slope(y, z, args.q)
    except (SlopeMismatch, ClassMismatch) as exc:
        # A definite no: maps with these mismatches have no conjugator at all.
        _emit(args, {"status": "absent", "reason": str(exc)})
        return 1
    if g is None:
        doc = {
            "status": "absent",
            "reason": f"no conjugator with initial slope {format_rat(args.q)}",
        }
        _emit(args, doc)
        return 1
    _emit(args, {"status": "found"}, g)
    return 0


def _cmd_centralizer(args) -> int:
    desc = centralizer_generator(parse_map_file(args.map))
    doc = {
        "status": "ok",
        "slope": format_rat(desc.slope),
        "exponent": desc.exponent,
    }
    _emit(args, doc, desc.generator)
    return 0


def _ordinal(n: int) -> str:
    return {2: "square", 3: "cube"}.get(n, f"{n}th")


def _cmd_root(args) -> int:
    z = parse_map_file(args.map)
    root = nth_root(z, args.n)
    if root is not None:
        _emit(args, {"status": "found"}, root)
        return 0
    if args.n > 1 and rational_nth_root(z.initial_slope, args.n) is None:
        reason = (
            f"initial slope {format_rat(z.initial_slope)} has no rational"
            f" {_ordinal(args.n)} root"
        )
    elif args.n > 1 and rational_nth_root(z.final_slope, args.n) is None:
        reason = (
            f"final slope {format_rat(z.final_slope)} has no rational"
            f" {_ordinal(args.n)} root"
        )
    else:
        reason = f"{args.n} does not divide the centralizer exponent"
    _emit(args, {"status": "absent", "reason": reason})
    return 1


def _cmd_verify(args) -> int:
    ok = verify_conjugator(
        parse_map_file(args.g), parse_map_file(args.y), parse_map_file(args.z)
    )
    _emit(args, {"status": "valid" if ok else "invalid"})
    return 0 if ok else 1


def _cmd_plot(args) -> int:
    plot(parse_map_file(args.map), args.output)
    return 0


_HANDLERS = {
    "eval": _cmd_eval,
    "compose": _cmd_compose,
    "invert": _cmd_invert,
    "power": _cmd_power,
    "classify": _cmd_classify,
    "boxes": _cmd_boxes,
    "mather": _cmd_mather,
    "conjugate": _cmd_conjugate,
    "conjugator-with-slope": _cmd_conjugator_with_slope,
    "centralizer": _cmd_centralizer,
    "root": _cmd_root,
    "verify": _cmd_verify,
    "plot": _cmd_plot,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its code.
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except PLConjError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run(argv=None) -> int:
    """Alias of main; kept so scripted callers read naturally."""
    return main(argv)


def console_entry() -> None:
    sys.exit(main(argv=None))


if __name__ == "__main__":
    console_entry()
