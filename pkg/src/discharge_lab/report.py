"""Per-graph report records and the batch drivers behind the CLI.

A record is a flat JSON-serialisable dict; rationals are ``"p/q"`` strings.
Records embed the graph's planar_code body (hex) so any line can be re-run on
its own.  Wall time is included only on request, keeping report bodies
byte-identical across runs.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import discharge, reducible
from .corpus import digest
from .discharge import RuleSet, fmt_q
from .plane_graph import PlaneGraph, in_class, read_planar_code
from .solver import ColoringError, format_coloring, parse_coloring, solve, verify

WORKERS_ENV = "DISCHARGE_LAB_WORKERS"


def profile_name(profile: Sequence[int]) -> str:
    return "".join(str(c) for c in profile)


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


@dataclass
class Report:
    records: list[dict] = field(default_factory=list)
    violations: int = 0

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def lines(self) -> list[str]:
        return [dumps(r) for r in self.records]

    def summary(self, kind: str) -> dict:
        return {"summary": kind, "graphs": len(self.records), "violations": self.violations}


def _base(g: PlaneGraph, index: int) -> dict:
    return {
        "graph": index,
        "digest": digest(g),
        "n": g.vertex_count,
        "m": g.edge_count,
        "in_class": in_class(g),
        "encoding": g.encode_body().hex(),
    }


# per-graph tasks ------------------------------------------------------------------
#
# Each task takes (index, graph, options) and returns (record, violation
# count).  They are module-level so a process pool can pickle them.


def task_solve(index: int, g: PlaneGraph, opts: dict) -> tuple[dict, int]:
    rec = _base(g, index)
    bad = 0
    for profile in opts["profiles"]:
        key = profile_name(profile)
        sol = solve(g, profile, opts.get("precolor"))
        rec[f"sat_{key}"] = sol is not None
        if sol is None:
            bad += 1
            continue
        if verify(g, profile, sol):
            raise AssertionError(f"solver returned an invalid coloring for graph {index}")
        rec[f"coloring_{key}"] = format_coloring(sol)
    return rec, bad


def task_theorem(index: int, g: PlaneGraph, opts: dict) -> tuple[dict, int]:
    if not in_class(g):
        rec = _base(g, index)
        rec["skipped"] = "out of class"
        return rec, 0
    rec, bad = task_solve(index, g, opts)
    for profile in opts["profiles"]:
        key = profile_name(profile)
        # independent re-check of the returned coloring
        if rec.get(f"sat_{key}"):
            col = parse_coloring(rec[f"coloring_{key}"])
            rec[f"verified_{key}"] = _independent_check(g, profile, col)
            bad += not rec[f"verified_{key}"]
    return rec, bad


def _independent_check(g: PlaneGraph, profile, col: dict[int, int]) -> bool:
    """Check a coloring edge by edge, without the solver's helpers."""
    if set(col) != set(g.vertices):
        return False
    same = {v: 0 for v in g.vertices}
    for u, v in g.edges:
        if col[u] == col[v]:
            same[u] += 1
            same[v] += 1
    return all(1 <= col[v] <= len(profile) and same[v] <= profile[col[v] - 1] for v in g.vertices)


def task_verify(index: int, g: PlaneGraph, opts: dict) -> tuple[dict, int]:
    rec = _base(g, index)
    coloring = opts["colorings"][index] if index < len(opts["colorings"]) else None
    if coloring is None:
        rec["error"] = "no coloring supplied"
        return rec, 1
    try:
        bad = verify(g, opts["profiles"][0], coloring)
    except ColoringError as exc:
        rec["error"] = str(exc)
        return rec, 1
    rec["valid"] = not bad
    rec["violations"] = [
        {"vertex": x.vertex, "color": x.color, "same": x.same, "bound": x.bound} for x in bad
    ]
    return rec, int(bool(bad))


def task_discharge(index: int, g: PlaneGraph, opts: dict) -> tuple[dict, int]:
    ruleset: RuleSet = opts["ruleset"]
    rec = _base(g, index)
    ledger = discharge.apply_rules(g, ruleset)
    total = ledger.total()
    rec["rules"] = ruleset.value
    rec["total"] = fmt_q(total)
    rec["conserved"] = total == -12
    rec["negative"] = ledger.negative_elements()
    bad = int(total != -12)
    if ruleset is RuleSet.R110:
        rec["bank"] = fmt_q(ledger.bank)
    if opts.get("log_transfers"):
        rec["transfers"] = [t.to_line() for t in ledger.transfers]
    if opts.get("audit"):
        rep = discharge.audit(g, ruleset, ledger)
        labels: dict[str, int] = {}
        for e in rep.entries:
            labels[e.label] = labels.get(e.label, 0) + 1
        rec["audit_labels"] = dict(sorted(labels.items()))
        rec["audit_failures"] = [
            {"element": e.element, "label": e.label, "final": fmt_q(e.final), "bound": fmt_q(e.bound)}
            for e in rep.failures
        ]
        profile = (1, 1, 0) if ruleset is RuleSet.R110 else (3, 0, 0)
        matches = reducible.scan(g, profile)
        rec["matches"] = len(matches)
        # a failing bound only matters where the proof claims it: in class,
        # and with no reducible configuration present
        if rec["in_class"] and not matches and not rep.all_bounds_hold:
            bad += 1
    return rec, bad


def task_scan(index: int, g: PlaneGraph, opts: dict) -> tuple[dict, int]:
    rec = _base(g, index)
    matches = reducible.scan(g, opts.get("scan_profile"))
    rec["matches"] = [m.to_dict() for m in matches]
    rec["lemmas"] = sorted({m.lemma.value for m in matches})
    # every in-class graph must contain something reducible
    bad = int(rec["in_class"] and not matches)
    return rec, bad


def task_oracle(index: int, g: PlaneGraph, opts: dict) -> tuple[dict, int]:
    rec = _base(g, index)
    cap = opts.get("cap", reducible.ORACLE_CAP)
    verdicts = []
    refuted = 0
    skipped = None
    if g.vertex_count > cap:
        skipped = f"{g.vertex_count} vertices exceeds cap {cap}"
    for m in reducible.scan(g, opts.get("scan_profile")):
        entry = {"lemma": m.lemma.value, "deletion": sorted(m.deletion)}
        if skipped:
            entry["skipped"] = skipped
        else:
            for profile in m.lemma.profiles:
                if opts.get("scan_profile") not in (None, "both") and tuple(profile) != tuple(opts["scan_profile"]):
                    continue
                v = reducible.test_reducibility(g, m, profile, cap)
                entry[f"verdict_{profile_name(profile)}"] = v.value
                refuted += v is reducible.Verdict.REFUTED
        verdicts.append(entry)
    rec["oracle"] = verdicts
    rec["refuted"] = refuted
    return rec, refuted


TASKS: dict[str, Callable] = {
    "solve": task_solve,
    "theorem": task_theorem,
    "verify": task_verify,
    "discharge": task_discharge,
    "scan": task_scan,
    "oracle": task_oracle,
}


# driver -----------------------------------------------------------------------------


def _worker(args):
    kind, index, body, opts = args
    g = read_planar_code(body)[0]
    t = time.perf_counter()
    rec, bad = TASKS[kind](index, g, opts)
    if opts.get("timing"):
        rec["wall_ms"] = round((time.perf_counter() - t) * 1000, 3)
    return rec, bad


def worker_count(default: int = 1) -> int:
    raw = os.environ.get(WORKERS_ENV)
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}")


def run(kind: str, graphs: Iterable[PlaneGraph], opts: dict, workers: int | None = None) -> Report:
    """Run one task over a corpus; records come back in input order."""
    workers = worker_count() if workers is None else workers
    report = Report()
    if workers <= 1:
        for i, g in enumerate(graphs):
            t = time.perf_counter()
            rec, bad = TASKS[kind](i, g, opts)
            if opts.get("timing"):
                rec["wall_ms"] = round((time.perf_counter() - t) * 1000, 3)
            report.records.append(rec)
            report.violations += bad
        return report
    jobs = [(kind, i, g.to_planar_code(header=False), opts) for i, g in enumerate(graphs)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rec, bad in pool.map(_worker, jobs, chunksize=16):
            report.records.append(rec)
            report.violations += bad
    return report


def run_theorem(corpus: Iterable[PlaneGraph], profiles=((1, 1, 0), (3, 0, 0)), **kw) -> Report:
    return run("theorem", corpus, {"profiles": [tuple(p) for p in profiles]}, **kw)


def run_discharge(corpus: Iterable[PlaneGraph], ruleset, audit: bool = True, **kw) -> Report:
    rs = ruleset if isinstance(ruleset, RuleSet) else RuleSet.parse(ruleset)
    return run("discharge", corpus, {"ruleset": rs, "audit": audit}, **kw)


def run_oracle(corpus: Iterable[PlaneGraph], profile=None, cap: int = reducible.ORACLE_CAP, **kw) -> Report:
    return run("oracle", corpus, {"scan_profile": profile, "cap": cap}, **kw)


def run_scan(corpus: Iterable[PlaneGraph], profile=None, **kw) -> Report:
    return run("scan", corpus, {"scan_profile": profile}, **kw)
