"""Command-line front end.  Report lines go to stdout, diagnostics to stderr.

Exit status: 0 when every check passed, 1 when a theorem, oracle or
conservation violation was found, 2 on input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus, reducible, report
from .discharge import RuleSet
from .plane_graph import GraphError, PlanarCodeError, write_planar_code
from .solver import ColoringError, parse_coloring, parse_profile

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _graphs(source: str):
    try:
        return corpus.load(source)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {exc.filename}")
    except (PlanarCodeError, GraphError, corpus.CorpusError) as exc:
        raise InputError(str(exc))


def _profiles(text: str):
    if text == "both":
        return [(1, 1, 0), (3, 0, 0)]
    try:
        return [parse_profile(text)]
    except (ColoringError, ValueError):
        raise InputError(f"bad profile {text!r}")


def _emit(rep: report.Report, kind: str) -> int:
    out = sys.stdout
    for line in rep.lines():
        out.write(line + "\n")
    out.write(report.dumps(rep.summary(kind)) + "\n")
    if not rep.ok:
        print(f"{kind}: {rep.violations} violation(s)", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_solve(args) -> int:
    graphs = _graphs(args.file)
    opts = {"profiles": _profiles(args.profile), "timing": args.timing}
    if args.precolor:
        try:
            opts["precolor"] = parse_coloring(args.precolor)
        except (ColoringError, ValueError) as exc:
            raise InputError(str(exc))
    try:
        rep = report.run("solve", graphs, opts)
    except ColoringError as exc:
        raise InputError(str(exc))
    return _emit(rep, "solve")


def cmd_verify(args) -> int:
    graphs = _graphs(args.file)
    try:
        text = Path(args.coloring).read_text()
    except FileNotFoundError:
        raise InputError(f"no such file: {args.coloring}")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        colorings = [parse_coloring(ln) for ln in lines]
    except (ColoringError, ValueError) as exc:
        raise InputError(str(exc))
    opts = {"profiles": _profiles(args.profile), "colorings": colorings, "timing": args.timing}
    return _emit(report.run("verify", graphs, opts), "verify")


def cmd_discharge(args) -> int:
    graphs = _graphs(args.file)
    try:
        rs = RuleSet.parse(args.rules)
    except KeyError:
        raise InputError(f"bad rule set {args.rules!r}")
    opts = {"ruleset": rs, "audit": args.audit, "log_transfers": args.log_transfers, "timing": args.timing}
    return _emit(report.run("discharge", graphs, opts), "discharge")


def _scan_profile(text: str):
    return None if text == "both" else _profiles(text)[0]


def cmd_scan(args) -> int:
    graphs = _graphs(args.file)
    opts = {"scan_profile": _scan_profile(args.profile), "timing": args.timing}
    return _emit(report.run("scan", graphs, opts), "scan")


def cmd_oracle(args) -> int:
    graphs = _graphs(args.file)
    opts = {"scan_profile": _scan_profile(args.profile), "cap": args.cap, "timing": args.timing}
    return _emit(report.run("oracle", graphs, opts), "oracle")


def cmd_theorem(args) -> int:
    graphs = _graphs(args.corpus)
    opts = {"profiles": _profiles(args.profile), "timing": args.timing}
    return _emit(report.run("theorem", graphs, opts), "theorem")


def cmd_gen(args) -> int:
    try:
        spec = corpus.CorpusSpec(
            n_min=args.n_min, n_max=args.n_max, count=args.count, seed=args.seed,
            class_filter=not args.no_filter, maximal=args.maximal,
        )
        graphs = list(corpus.generate(spec))
    except corpus.CorpusError as exc:
        raise InputError(str(exc))
    data = write_planar_code(graphs)
    if args.out:
        Path(args.out).write_bytes(data)
        for i, g in enumerate(graphs):
            print(report.dumps({"graph": i, "digest": corpus.digest(g), "n": g.vertex_count, "m": g.edge_count}))
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="discharge-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        sp.add_argument("--timing", action="store_true", help="include wall_ms in records")
        return sp

    sp = add("solve", cmd_solve, "find colorings")
    sp.add_argument("file")
    sp.add_argument("--profile", default="110")
    sp.add_argument("--precolor", help="v:c,v:c,...")

    sp = add("verify", cmd_verify, "check colorings, one line per graph")
    sp.add_argument("file")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--profile", default="110")

    sp = add("discharge", cmd_discharge, "apply a rule set and check conservation")
    sp.add_argument("file")
    sp.add_argument("--rules", default="110")
    sp.add_argument("--audit", action="store_true")
    sp.add_argument("--log-transfers", action="store_true")

    sp = add("scan", cmd_scan, "list reducible configurations")
    sp.add_argument("file")
    sp.add_argument("--profile", default="both")

    sp = add("oracle", cmd_oracle, "brute-force every scan match")
    sp.add_argument("file")
    sp.add_argument("--profile", default="both")
    sp.add_argument("--cap", type=int, default=reducible.ORACLE_CAP)

    sp = add("theorem", cmd_theorem, "solve and re-verify every in-class graph")
    sp.add_argument("--corpus", required=True, help="planar_code file or gen:n=A..B,count=K,seed=S")
    sp.add_argument("--profile", default="both")

    sp = add("gen", cmd_gen, "generate a planar_code corpus")
    sp.add_argument("--n-min", type=int, default=3)
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--no-filter", action="store_true")
    sp.add_argument("--maximal", type=float, default=0.0)
    sp.add_argument("--out")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
