"""Dump every named fixture as a planar_code file under fixtures/."""

import argparse
from pathlib import Path

from discharge_lab import fixtures


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="fixtures", type=Path)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in sorted(fixtures.FIXTURES):
        (args.out / f"{name}.pc").write_bytes(fixtures.graph(name).to_planar_code())
    g, _ = fixtures.negative_control()
    (args.out / "NEGATIVE-CONTROL.pc").write_bytes(g.to_planar_code())
    print(f"wrote {len(fixtures.FIXTURES) + 1} files to {args.out}")


if __name__ == "__main__":
    main()
