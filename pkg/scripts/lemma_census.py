"""How often each reducible configuration fires on a generated corpus."""

import argparse
from collections import Counter

from discharge_lab.corpus import CorpusSpec, generate
from discharge_lab.reducible import LemmaId, scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--n-max", type=int, default=14)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--maximal", type=float, default=0.5)
    a = ap.parse_args()
    graphs = Counter()
    hits = Counter()
    for g in generate(CorpusSpec(n_min=3, n_max=a.n_max, count=a.count, seed=a.seed, maximal=a.maximal)):
        found = Counter(m.lemma for m in scan(g))
        hits.update(found)
        graphs.update(found.keys())
    for lem in LemmaId:
        print(f"{lem.value:>14}  graphs={graphs[lem]:6d}  matches={hits[lem]:7d}")


if __name__ == "__main__":
    main()
