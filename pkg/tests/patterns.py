"""Small local patterns for exhaustive checks of the extension procedures.

Each pattern is a plain adjacency dict plus the vertex to be colored and the
set of vertices the boundary coloring covers.  Private leaves ("phantoms")
let a boundary vertex be saturated by a same-colored neighbour outside the
pattern, which is all that matters for defect bounds up to 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from discharge_lab.solver import violations


@dataclass(frozen=True)
class Pattern:
    name: str
    adj: dict
    target: int
    colored: tuple[int, ...]


class _Builder:
    def __init__(self):
        self.adj: dict[int, set[int]] = {}

    def v(self) -> int:
        n = len(self.adj) + 1
        self.adj[n] = set()
        return n

    def e(self, a: int, b: int) -> None:
        self.adj[a].add(b)
        self.adj[b].add(a)

    def frozen(self) -> dict:
        return {v: tuple(sorted(ns)) for v, ns in self.adj.items()}


def vertex_patterns(max_vertices: int = 8) -> list[Pattern]:
    """v with 3 or 4 colored neighbours, an optional uncolored neighbour,
    a phantom behind any subset of the colored neighbours and optionally
    one edge between two colored neighbours."""
    out = []
    for k in (3, 4):
        for spare in (0, 1):
            for phantoms in range(k + 1):
                for chord in (False, True):
                    if 1 + k + spare + phantoms > max_vertices:
                        continue
                    b = _Builder()
                    v = b.v()
                    nbrs = [b.v() for _ in range(k)]
                    for u in nbrs:
                        b.e(v, u)
                    if spare:
                        b.e(v, b.v())
                    extra = []
                    for u in nbrs[:phantoms]:
                        p = b.v()
                        b.e(u, p)
                        extra.append(p)
                    if chord:
                        b.e(nbrs[0], nbrs[1])
                    name = f"k{k}-spare{spare}-ph{phantoms}-chord{int(chord)}"
                    out.append(Pattern(name, b.frozen(), v, tuple(nbrs + extra)))
    return out


def nicely_patterns(max_vertices: int = 8) -> list[Pattern]:
    """v with two colored neighbours a, b (optionally adjacent) carrying
    ea and eb further colored neighbours, plus an optional uncolored one."""
    out = []
    for ea in range(0, 6):
        for eb in range(0, 6):
            for spare in (0, 1):
                for link in (False, True):
                    if 3 + ea + eb + spare > max_vertices:
                        continue
                    b = _Builder()
                    v, a, w = b.v(), b.v(), b.v()
                    b.e(v, a)
                    b.e(v, w)
                    if link:
                        b.e(a, w)
                    extra = []
                    for _ in range(ea):
                        x = b.v()
                        b.e(a, x)
                        extra.append(x)
                    for _ in range(eb):
                        x = b.v()
                        b.e(w, x)
                        extra.append(x)
                    if spare:
                        b.e(v, b.v())
                    name = f"ea{ea}-eb{eb}-spare{spare}-link{int(link)}"
                    out.append(Pattern(name, b.frozen(), v, (a, w, *extra)))
    return out


def boundary_colorings(p: Pattern, profile):
    """Every violation-free coloring of the pattern's colored set."""
    k = len(profile)
    for combo in itertools.product(range(1, k + 1), repeat=len(p.colored)):
        col = dict(zip(p.colored, combo))
        if not violations(p.adj, profile, col):
            yield col


def chain1_pattern():
    """Local n=1 chain: T0 = (u, x0, t0), T1 = (t0, t1, x1), d(t1) = 4.

    Returns (adj, roles) with roles naming the vertices.
    """
    b = _Builder()
    r = {n: b.v() for n in ("u", "x0", "t0", "t1", "x1", "w", "p", "q", "z", "zz", "y")}
    E = [
        ("u", "x0"), ("u", "t0"), ("x0", "t0"), ("u", "w"), ("x0", "p"), ("x0", "q"),
        ("t0", "t1"), ("t0", "x1"), ("t1", "x1"), ("t1", "z"), ("t1", "zz"), ("x1", "y"),
    ]
    for a, c in E:
        b.e(r[a], r[c])
    for n in ("w", "p", "q", "z", "zz", "y"):
        r[n + "'"] = ph = b.v()
        b.e(r[n], ph)
    return b.frozen(), r
