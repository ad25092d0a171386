"""Run the theorem, conservation, scanner and oracle checks over a generated
corpus and print one summary line per check.

    python scripts/sweep.py --count 2000 --n-max 12 --seed 3
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from discharge_lab import report
from discharge_lab.corpus import CorpusSpec, generate


@dataclass(frozen=True)
class SweepConfig:
    corpus: CorpusSpec
    checks: tuple[str, ...] = ("theorem", "conservation", "scan", "oracle")
    workers: int = 1


def run(cfg: SweepConfig) -> bool:
    t = time.perf_counter()
    graphs = list(generate(cfg.corpus))
    print(f"corpus: {len(graphs)} graphs in {time.perf_counter() - t:.1f}s ({cfg.corpus})")
    jobs = {
        "theorem": lambda: report.run_theorem(graphs, workers=cfg.workers),
        "conservation": lambda: _both_rulesets(graphs, cfg.workers),
        "scan": lambda: report.run_scan(graphs, workers=cfg.workers),
        "oracle": lambda: report.run_oracle(graphs, workers=cfg.workers),
    }
    ok = True
    for name in cfg.checks:
        t = time.perf_counter()
        rep = jobs[name]()
        ok &= rep.ok
        print(f"{name:>12}: {rep.violations} violation(s) in {time.perf_counter() - t:.1f}s")
    return ok


def _both_rulesets(graphs, workers):
    a = report.run_discharge(graphs, "110", audit=False, workers=workers)
    b = report.run_discharge(graphs, "300", audit=False, workers=workers)
    a.records += b.records
    a.violations += b.violations
    return a


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--n-min", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--maximal", type=float, default=0.25)
    ap.add_argument("--no-filter", action="store_true")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--checks", default="theorem,conservation,scan,oracle")
    a = ap.parse_args()
    spec = CorpusSpec(n_min=a.n_min, n_max=a.n_max, count=a.count, seed=a.seed,
                      class_filter=not a.no_filter, maximal=a.maximal)
    cfg = SweepConfig(spec, tuple(a.checks.split(",")), a.workers)
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
