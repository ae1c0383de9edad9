"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 parse error, 3 negative
predicate (the witness, if any, goes to stdout).  ``--stdin`` switches to a
batch mode reading one JSON object per line (``{"cmd": ..., "args": {...}}``)
and writing one JSON result per line without aborting on per-line errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional

from . import verify as verify_mod
from .arcs import Arc, CyclicArcDiagram, a_numbering, build_diagram, c_sequence, ncad_c, tito_c
from .core import (
    CoxeterElement,
    ParseError,
    Reflection,
    coxeter_from_partition,
    format_cycles,
    format_window,
    parse_window,
)
from .noncrossing import NotNoncrossing, is_c_noncrossing, nc_tilde
from .render import render_annulus_svg, render_ascii, render_svg
from .sortable import forbidden_inversion_witness, is_c_sortable_def, is_c_sortable_pattern
from .roots import omega_reflections
from .tito import NotSortableTito, parse_tito

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_NEGATIVE = 3


def _parse_coxeter(text: str, n: int) -> CoxeterElement:
    stripped = text.strip()
    if stripped.startswith("L="):
        stripped = stripped[2:]
    try:
        parts = {int(p) for p in stripped.split(",") if p.strip()}
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}") from exc
    return coxeter_from_partition(n, parts)


_REFL_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*(?:_\s*(-?\d+))?$")


def _parse_reflection(text: str, n: int) -> Reflection:
    m = _REFL_RE.match(text.strip())
    if m is None:
        raise ParseError(f"expected (i,j) or (i,j)_p, got {text!r}")
    i, j = int(m.group(1)), int(m.group(2))
    if m.group(3) is not None:
        return Reflection.from_codec(n, i, j, int(m.group(3)))
    return Reflection.from_pair(n, i, j)


def _parse_arcs(text: str, n: int) -> list[Arc]:
    arcs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "->" not in chunk:
            raise ParseError(f"expected p->q, got {chunk!r}")
        p_text, q_text = chunk.split("->", 1)
        try:
            p, q = int(p_text), int(q_text)
        except ValueError as exc:
            raise ParseError(f"bad integer in arc {chunk!r}") from exc
        arcs.append(Arc.normalized(n, p, q))
    return arcs


def _diagram_from_args(args) -> CyclicArcDiagram:
    c = _parse_coxeter(args.coxeter, args.n)
    return build_diagram(args.n, c, _parse_arcs(args.arcs, args.n))


def cmd_sortable(args, out) -> int:
    c = _parse_coxeter(args.coxeter, args.n)
    w = parse_window(args.window, args.n)
    verdicts = {}
    witness_text = None
    if args.method in ("def", "all"):
        verdicts["def"] = is_c_sortable_def(w, c)
    if args.method in ("pattern", "all"):
        ok, witness = is_c_sortable_pattern(w, c)
        verdicts["pattern"] = ok
        if witness is not None:
            kind, x, y, z = witness
            witness_text = f"pattern {kind}: {x} {y} {z}"
    if args.method in ("inversions", "all"):
        tag = forbidden_inversion_witness(w, c)
        verdicts["inversions"] = tag is None
        if tag is not None and witness_text is None:
            witness_text = f"condition {tag[0]} at {tag[1]}"
    values = set(verdicts.values())
    if len(values) > 1:
        out(f"methods disagree: {verdicts}")
        return EXIT_INVALID
    sortable = values.pop()
    out(f"{format_window(w)} is {'sortable' if sortable else 'not sortable'} for {c}")
    if witness_text:
        out(witness_text)
    return EXIT_OK if sortable else EXIT_NEGATIVE


def cmd_omega(args, out) -> int:
    c = _parse_coxeter(args.coxeter, args.n)
    t1 = _parse_reflection(args.t1, args.n)
    t2 = _parse_reflection(args.t2, args.n)
    value = omega_reflections(c, t1, t2)
    sign = "0" if value == 0 else ("+" if value > 0 else "-")
    out(f"{value} {sign}")
    return EXIT_OK


def cmd_ncad(args, out) -> int:
    c = _parse_coxeter(args.coxeter, args.n)
    t = parse_tito(args.tito, args.n)
    d = ncad_c(t, c)
    out(str(d))
    return EXIT_OK


def cmd_titoc(args, out) -> int:
    d = _diagram_from_args(args)
    t = tito_c(d, args.anchor)
    out("".join(str(b) for b in t.blocks))
    return EXIT_OK


def cmd_cseq(args, out) -> int:
    d = _diagram_from_args(args)
    cs = c_sequence(d, args.anchor)
    out(str(cs))
    if not cs.finite:
        out("period: " + " ".join(str(t) for t in cs.period))
    return EXIT_OK


def cmd_numbering(args, out) -> int:
    d = _diagram_from_args(args)
    num = a_numbering(d, args.anchor)
    out(", ".join(str(g) for g in num.chains))
    return EXIT_OK


def cmd_ncc(args, out) -> int:
    c = _parse_coxeter(args.coxeter, args.n)
    t = parse_tito(args.tito, args.n)
    x = nc_tilde(t, c)
    out(format_cycles(x.cycles))
    out(format_window(x.perm))
    return EXIT_OK


def cmd_isnc(args, out) -> int:
    c = _parse_coxeter(args.coxeter, args.n)
    w = parse_window(args.perm, args.n)
    if is_c_noncrossing(w, c):
        out(f"{format_window(w)} is noncrossing for {c}")
        return EXIT_OK
    out(f"{format_window(w)} is not noncrossing for {c}")
    return EXIT_NEGATIVE


def cmd_render(args, out) -> int:
    d = _diagram_from_args(args)
    out(render_svg(d) if args.format == "svg" else render_ascii(d))
    return EXIT_OK


def cmd_annulus(args, out) -> int:
    from .noncrossing import NoncrossingPartition

    c = _parse_coxeter(args.coxeter, args.n)
    w = parse_window(args.perm, args.n)
    out(render_annulus_svg(NoncrossingPartition.from_perm(w, c)))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ok = verify_mod.run_all(args.level, out=out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_bench(args, out) -> int:
    ok, detail = verify_mod.bench_report(args.count)
    out(detail)
    out("window scan faster: " + ("yes" if ok else "no"))
    return EXIT_OK if ok else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affine-catalan",
        description="sortable affine permutations, cyclic arc diagrams, noncrossing partitions",
    )
    parser.add_argument("--stdin", action="store_true", help="batch mode: JSON lines on stdin")
    sub = parser.add_subparsers(dest="cmd")

    def common(p, coxeter=True):
        p.add_argument("--n", type=int, required=True)
        if coxeter:
            p.add_argument("--coxeter", required=True, help="up-part residues, e.g. L=1,4,6,9")

    p = sub.add_parser("sortable", help="test a window for sortability")
    common(p)
    p.add_argument("--window", required=True)
    p.add_argument("--method", choices=("def", "pattern", "inversions", "all"), default="all")
    p.set_defaults(func=cmd_sortable)

    p = sub.add_parser("omega", help="skew form on two reflections")
    common(p)
    p.add_argument("--t1", required=True, help='reflection, e.g. "(3,11)_12"')
    p.add_argument("--t2", required=True)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("ncad", help="cover arcs of a sortable order")
    common(p)
    p.add_argument("--tito", required=True, help='blocks, e.g. "[9,6]~[18,11,5,10,4][3,2,7]"')
    p.set_defaults(func=cmd_ncad)

    p = sub.add_parser("titoc", help="order rebuilt from an arc diagram")
    common(p)
    p.add_argument("--arcs", required=True, help='comma-separated, e.g. "1->6,6->8"')
    p.add_argument("--anchor", type=int, default=1)
    p.set_defaults(func=cmd_titoc)

    p = sub.add_parser("cseq", help="climb-and-jump walk from an anchor")
    common(p)
    p.add_argument("--arcs", required=True)
    p.add_argument("--anchor", type=int, default=1)
    p.set_defaults(func=cmd_cseq)

    p = sub.add_parser("numbering", help="canonical chain transversal")
    common(p)
    p.add_argument("--arcs", required=True)
    p.add_argument("--anchor", type=int, default=1)
    p.set_defaults(func=cmd_numbering)

    p = sub.add_parser("ncc", help="noncrossing partition of a sortable order")
    common(p)
    p.add_argument("--tito", required=True)
    p.set_defaults(func=cmd_ncc)

    p = sub.add_parser("isnc", help="noncrossing membership of a window")
    common(p)
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_isnc)

    p = sub.add_parser("render", help="draw a diagram")
    common(p)
    p.add_argument("--arcs", required=True)
    p.add_argument("--format", choices=("svg", "ascii"), default="ascii")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("annulus-render", help="draw a noncrossing partition on the annulus")
    common(p)
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_annulus)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="pattern scan vs sorting-word timing")
    p.add_argument("--count", type=int, default=10_000)
    p.set_defaults(func=cmd_bench)

    return parser


def _run_argv(argv: list[str], out) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    if args.cmd is None:
        parser.print_usage()
        return EXIT_PARSE
    try:
        return args.func(args, out)
    except ParseError as exc:
        out(f"parse error: {exc}")
        return EXIT_PARSE
    except (NotSortableTito, NotNoncrossing) as exc:
        out(f"negative: {exc}")
        return EXIT_NEGATIVE
    except ValueError as exc:
        out(f"invalid input: {exc}")
        return EXIT_INVALID


def _batch(stream, out) -> int:
    worst = EXIT_OK
    for index, line in enumerate(stream):
        line = line.strip()
        if not line:
            continue
        try:
            request = json.loads(line)
            argv = [str(request["cmd"])]
            for key, value in request.get("args", {}).items():
                argv.append(f"--{key}")
                if value is not True:
                    argv.append(str(value))
            captured: list[str] = []
            code = _run_argv(argv, captured.append)
            out(json.dumps({"line": index, "exit": code, "output": captured}))
        except Exception as exc:
            out(json.dumps({"line": index, "exit": EXIT_PARSE, "error": str(exc)}))
            code = EXIT_PARSE
        worst = max(worst, code)
    return worst


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] == "--stdin":
        return _batch(sys.stdin, print)
    return _run_argv(argv, print)


if __name__ == "__main__":
    raise SystemExit(main())
