"""Command line interface.

Three subcommands:

    khbound kh      — Khovanov homology table and tb bounds
    khbound alt-tb  — maximal tb of an alternating link, with a
                      constructed maximal front and certificates
    khbound front   — invariants of a front given as JSON

Inputs come from --pd / --braid / --name / --front; output is JSON on
stdout (sorted keys, deterministic), errors go to stderr with exit
code 1.  --svg renders the relevant figure to a file.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import table
from .classical import (
    alternating_tb,
    alternating_tb_via_crossings,
    is_reduced_alternating,
    jones_hat,
    signature,
)
from .fronts import (
    FrontDiagram,
    FrontError,
    desingularize,
    is_admissible,
    rotation_number,
    tb,
    validate_front,
)
from .khovanov import (
    ResourceLimit,
    graded_euler,
    khovanov_homology,
    strong_bound,
    weak_bound,
)
from .links import DiagramError, braid_closure, parse_pd, writhe
from .mondrian import MondrianError, build_max_tb_front
from .planar import GraphError


def _load_diagram(args):
    sources = [s for s in (args.pd, args.braid, args.name) if s is not None]
    if len(sources) != 1:
        raise DiagramError("give exactly one of --pd, --braid, --name")
    if args.pd is not None:
        text = args.pd.strip()
        if text.startswith("{"):
            from .links import diagram_from_json

            return diagram_from_json(json.loads(text))
        return parse_pd(text)
    if args.braid is not None:
        word = [int(tok) for tok in args.braid.replace(",", " ").split()]
        return braid_closure(word)
    return table.lookup(args.name)


def _homology_json(H):
    return {
        "homology": H.to_json(),
        "strong_bound": strong_bound(H),
        "weak_bound": weak_bound(H),
    }


def _emit(payload, args):
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        sys.stdout.write("\n")
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2))
        sys.stdout.write("\n")


def cmd_kh(args):
    d = _load_diagram(args)
    H = khovanov_homology(
        d,
        max_crossings=args.max_crossings,
        reduce_first=not args.no_reduce,
        parallel=args.parallel,
    )
    payload = _homology_json(H)
    payload["crossings"] = d.crossing_count
    payload["components"] = d.component_count
    payload["writhe"] = writhe(d)
    payload["graded_euler"] = graded_euler(H).to_json()
    _emit(payload, args)


def cmd_alt_tb(args):
    d = _load_diagram(args)
    if not is_reduced_alternating(d):
        raise DiagramError("input is not a reduced alternating diagram")
    value = alternating_tb(d)
    via_crossings = alternating_tb_via_crossings(d)
    front = build_max_tb_front(d)
    front_tb = tb(front)
    H = khovanov_homology(
        d,
        max_crossings=args.max_crossings,
        reduce_first=not args.no_reduce,
        parallel=args.parallel,
    )
    payload = {
        "alt_tb": value,
        "alt_tb_via_crossings": via_crossings,
        "jones_hat": jones_hat(d).to_json(),
        "signature": signature(d),
        "strong_bound": strong_bound(H),
        "weak_bound": weak_bound(H),
        "front": front.to_json(),
        "front_tb": front_tb,
        "certificates": {
            "admissible": is_admissible(front),
            "formula_equals_front_tb": front_tb == value,
            "formula_equals_strong_bound": value == strong_bound(H),
            "formulas_agree": value == via_crossings,
        },
    }
    if args.svg:
        from .render import render_front

        render_front(front, args.svg)
        payload["svg"] = args.svg
    _emit(payload, args)


def cmd_front(args):
    if args.front is None:
        raise FrontError("front command needs --front <file>")
    with open(args.front) as fh:
        front = FrontDiagram.from_json(json.load(fh))
    problems = validate_front(front)
    if problems:
        raise FrontError("; ".join(problems))
    reverse = frozenset(int(k) for k in args.reverse.split(",") if k) if args.reverse else ()
    d = desingularize(front, reverse)
    H = khovanov_homology(
        d,
        max_crossings=args.max_crossings,
        reduce_first=not args.no_reduce,
        parallel=args.parallel,
    )
    front_tb = tb(front, reverse)
    bound = strong_bound(H)
    payload = {
        "tb": front_tb,
        "rotation": rotation_number(front, reverse),
        "admissible": is_admissible(front),
        "strong_bound": bound,
        "weak_bound": weak_bound(H),
        "bound_minus_tb": bound - front_tb,
        "inequality_holds": front_tb <= bound,
    }
    if args.svg:
        from .render import render_front

        render_front(front, args.svg)
        payload["svg"] = args.svg
    _emit(payload, args)


def make_parser():
    parser = argparse.ArgumentParser(
        prog="khbound",
        description="Khovanov homology and Thurston-Bennequin bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (("kh", cmd_kh), ("alt-tb", cmd_alt_tb), ("front", cmd_front)):
        p = sub.add_parser(name)
        p.add_argument("--pd", help="PD code, e.g. \"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\"")
        p.add_argument("--braid", help="braid word, e.g. \"1,1,1\" or \"-1 -2 -3\"")
        p.add_argument("--name", help="bundled table name, e.g. 6_3 or m9_42")
        p.add_argument("--front", help="front JSON file")
        p.add_argument("--svg", help="render a figure to this file")
        p.add_argument("--max-crossings", type=int, default=16)
        p.add_argument("--parallel", type=int, default=None)
        p.add_argument("--json", action="store_true", help="compact single-line JSON")
        p.add_argument("--no-reduce", action="store_true",
                       help="skip the complex-level Gaussian pre-reduction")
        p.add_argument("--reverse", help="front only: comma list of components to reverse")
        p.set_defaults(fn=fn)
    return parser


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    # let --braid take values starting with a dash
    for k in range(len(argv) - 1):
        if argv[k] in ("--braid", "--reverse") and argv[k + 1].startswith("-"):
            argv[k] = f"{argv[k]}={argv[k + 1]}"
            del argv[k + 1]
            break
    args = make_parser().parse_args(argv)
    try:
        args.fn(args)
    except (DiagramError, FrontError, MondrianError, GraphError, ResourceLimit, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
