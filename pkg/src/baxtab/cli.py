"""Command-line front end: ``baxtab {count,enumerate,biject,tree,series,verify}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any, TextIO

from baxtab.arcs import DiagramKind, OpenArcDiagram, generate_diagrams
from baxtab.bijections import diagram_to_tableau, format_walk, tableau_to_diagram, tableau_to_walk, walk_to_tableau
from baxtab.errors import BaxtabError
from baxtab.series.baxter import shifted_baxter_series
from baxtab.series.bessel import bessel_series, osc_boundary_egf, syt_egf_det
from baxtab.series.core import UniSeries
from baxtab.series.diagonals import oscillating_diagonal, syt_diagonal_conjecture
from baxtab.series.kernel import fallback_W, kernel_W
from baxtab.series.operators import BAXTER_OPERATOR, apply_operator
from baxtab.tableaux import TableauKind, TableauSequence, enumerate_tableaux, validate_sequence
from baxtab.trees import builtin_rule, expand_levels
from baxtab.verify import PROFILES, run_profile
from baxtab.walks import BOUNDARY, Chamber, CountTable, LatticeWalk, Model, StepRule, count_walks, delta, enumerate_walks

log = logging.getLogger("baxtab")

TABLEAU_OF_MODEL = {
    Model.OSCILLATING: TableauKind.OSCILLATING,
    Model.HESITATING: TableauKind.HESITATING,
    Model.POSITIVE: TableauKind.STANDARD_YOUNG,
}
DIAGRAM_OF_MODEL = {Model.HESITATING: DiagramKind.PARTITION, Model.OSCILLATING: DiagramKind.MATCHING}


class UsageError(Exception):
    """Bad flag combination; reported with exit code 2."""


def _point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _dump(obj: Any, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


# -- count ------------------------------------------------------------------


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    model = Model(args.model)
    rule = StepRule(model, args.k)
    chamber = Chamber(args.chamber)
    start = args.start or delta(args.k)
    if args.format == "csv":
        out.write(CountTable.build(rule, chamber, start, args.n).to_csv())
        return 0
    end = _end_of(args)
    count = count_walks(rule, chamber, start, args.n, end)
    if args.format == "json":
        label = "boundary" if end is BOUNDARY else ("anywhere" if end is None else list(end))
        _dump({"model": model.value, "k": args.k, "n": args.n, "chamber": chamber.value, "start": list(start), "end": label, "count": count}, out)
    else:
        out.write(f"{count}\n")
    return 0


def _end_of(args: argparse.Namespace):
    chosen = [flag for flag, on in (("--boundary", args.boundary), ("-m", args.m is not None), ("--end", args.end is not None)) if on]
    if len(chosen) > 1:
        raise UsageError(f"{chosen[0]} and {chosen[1]} are mutually exclusive")
    if args.boundary:
        return BOUNDARY
    if args.m is not None:
        return (args.k + args.m,) + delta(args.k)[1:]
    return args.end


# -- enumerate --------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    model = Model(args.model)
    guard = {} if args.guard is None else {"guard": args.guard}
    if args.object == "tableaux":
        if args.m is not None:
            m = args.m
            final = lambda s: s.is_row() and s.row_length() == m  # noqa: E731
        else:
            final = (lambda s: s.is_row()) if args.boundary else None
        items = enumerate_tableaux(TABLEAU_OF_MODEL[model], args.n, args.k, final, **guard)
        payload = [s.to_json() for s in items]
        lines = [" ".join("(" + ",".join(map(str, sh.parts)) + ")" for sh in s.shapes) for s in items]
    elif args.object == "walks":
        end = _end_of(args)
        items = enumerate_walks(StepRule(model, args.k), Chamber(args.chamber), delta(args.k), args.n, end, **guard)
        payload = [w.to_json() for w in items]
        lines = [format_walk(w) for w in items]
    else:
        if model not in DIAGRAM_OF_MODEL:
            raise UsageError("--model positive has no diagram class")
        items = generate_diagrams(DIAGRAM_OF_MODEL[model], args.n, args.k, args.m, **guard)
        payload = [d.to_json() for d in items]
        lines = [json.dumps(d.to_json()) for d in items]
    if args.format == "json":
        _dump({"count": len(payload), "items": payload}, out)
    else:
        out.write("".join(line + "\n" for line in lines))
        log.info("%d objects", len(lines))
    return 0


# -- biject -----------------------------------------------------------------


def _read_object(args: argparse.Namespace) -> dict:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--input is not valid JSON: {exc}") from None


def cmd_biject(args: argparse.Namespace, out: TextIO) -> int:
    data = _read_object(args)
    if "shapes" in data:
        seq = TableauSequence.from_json(data)
    elif "closed" in data or "open" in data:
        d = OpenArcDiagram.from_json(data)
        if args.to == "diagram":
            _dump(d.to_json(), out)
            return 0
        seq = diagram_to_tableau(d, args.k)
    elif "steps" in data or "points" in data:
        seq = walk_to_tableau(LatticeWalk.from_json(data))
    else:
        raise UsageError("--input must encode a tableau, a walk or a diagram")
    info = validate_sequence(seq)
    k = args.k if args.k is not None else max(info.max_height, 1)
    if args.to == "tableau":
        _dump(seq.to_json(), out)
    elif args.to == "walk":
        walk = tableau_to_walk(seq, k)
        payload = walk.to_json()
        payload["points"] = [list(p) for p in walk.points()]
        if args.format == "text":
            out.write(format_walk(walk) + "\n")
        else:
            _dump(payload, out)
    else:
        kind = {TableauKind.HESITATING: DiagramKind.PARTITION, TableauKind.OSCILLATING: DiagramKind.MATCHING}.get(seq.kind)
        if kind is None:
            raise UsageError("standard Young tableaux have no diagram image")
        _dump(tableau_to_diagram(seq, k, kind).to_json(), out)
    return 0


# -- tree -------------------------------------------------------------------


def cmd_tree(args: argparse.Namespace, out: TextIO) -> int:
    rule = builtin_rule(args.rule)
    guard = {} if args.guard is None else {"guard": args.guard}
    levels = expand_levels(rule, args.depth, **guard)
    sizes = [size for size, _ in levels]
    if args.format == "csv":
        out.write(",".join(map(str, sizes)) + "\n")
    elif args.format == "text":
        out.write(" ".join(map(str, sizes)) + "\n")
    else:
        payload: dict[str, Any] = {"rule": rule.name, "root": list(rule.root), "sizes": sizes}
        if args.labels:
            payload["labels"] = [
                [[a, b, c] for (a, b), c in sorted(hist.items())] for _, hist in levels
            ]
        _dump(payload, out)
    return 0


# -- series -----------------------------------------------------------------


def _need_k(args: argparse.Namespace) -> int:
    if args.k is None:
        raise UsageError(f"series {args.name} needs -k")
    return args.k


SERIES: dict[str, Callable[[argparse.Namespace], UniSeries]] = {
    "baxter": lambda a: shifted_baxter_series(a.order),
    "bessel": lambda a: bessel_series(a.j, a.order),
    "syt-det": lambda a: syt_egf_det(_need_k(a), a.order),
    "osc-boundary": lambda a: osc_boundary_egf(_need_k(a), a.order),
    "kernel-W": lambda a: kernel_W(a.order).W,
    "fallback-W": lambda a: fallback_W(a.order),
    "osc-diagonal": lambda a: oscillating_diagonal(_need_k(a), a.order),
    "syt-diagonal": lambda a: syt_diagonal_conjecture(_need_k(a), a.order),
    "operator-residual": lambda a: apply_operator(BAXTER_OPERATOR, shifted_baxter_series(a.order)),
}


def cmd_series(args: argparse.Namespace, out: TextIO) -> int:
    s = SERIES[args.name](args)
    doc = s.to_json(args.name)
    if args.format == "json":
        _dump(doc, out)
    elif args.format == "csv":
        out.write(",".join(doc["coeffs"]) + "\n")
    else:
        out.write(" ".join(doc["coeffs"]) + "\n")
    return 0


# -- verify -----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    report = run_profile(args.profile)
    if args.format == "json":
        _dump(report, out)
    else:
        for c in report["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            params = " ".join(f"{k}={v}" for k, v in c["params"].items())
            out.write(f"{status} {c['id']} {params}\n")
        out.write(("PASS" if report["pass"] else "FAIL") + "\n")
    return 0 if report["pass"] else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="baxtab", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="suppress log messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    models = [m.value for m in Model]

    def walk_flags(p: argparse.ArgumentParser, default_model: str = "hesitating") -> None:
        p.add_argument("--model", choices=models, default=default_model)
        p.add_argument("-k", type=int, default=2, help="dimension / height bound")
        p.add_argument("-n", type=int, required=True, help="length (pairs for hesitating walks)")
        p.add_argument("-m", type=int, help="end at delta + m e_1")
        p.add_argument("--boundary", action="store_true", help="end anywhere on delta + m e_1")
        p.add_argument("--chamber", choices=[c.value for c in Chamber], default="W")
        p.add_argument("--guard", type=int)

    p = sub.add_parser("count", help="count walks by dynamic programming")
    walk_flags(p)
    p.add_argument("--start", type=_point, help="start point, default delta")
    p.add_argument("--end", type=_point, help="exact end point")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list tableaux, walks or diagrams")
    p.add_argument("object", choices=["tableaux", "walks", "diagrams"])
    walk_flags(p)
    p.add_argument("--end", type=_point, help="exact end point (walks)")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("biject", help="map a tableau, walk or diagram (JSON) to another class")
    p.add_argument("--input", default="-", help="JSON file, '-' for stdin")
    p.add_argument("--to", choices=["tableau", "walk", "diagram"], required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("tree", help="expand a Baxter generating tree")
    p.add_argument("--rule", choices=["A", "B", "C"], required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--labels", action="store_true", help="include label histograms (json)")
    p.add_argument("--guard", type=int)
    p.add_argument("--format", choices=["text", "json", "csv"], default="json")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("series", help="print a truncated series")
    p.add_argument("name", choices=sorted(SERIES))
    p.add_argument("--order", type=int, default=12)
    p.add_argument("-k", type=int)
    p.add_argument("-j", type=int, default=0, help="Bessel index")
    p.add_argument("--format", choices=["text", "json", "csv"], default="json")
    p.set_defaults(func=cmd_series)

    for p in sub.choices.values():
        p.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    p = sub.add_parser("verify", help="run a verification profile")
    p.add_argument("--profile", choices=sorted(PROFILES), default="quick")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args, out)
    except (UsageError, BaxtabError, ValueError, KeyError) as exc:
        print(f"baxtab {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
