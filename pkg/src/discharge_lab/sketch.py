"""Build plane graphs from named vertices and declared faces.

Writing rotation systems by hand is error prone, so fixtures are described
as edges plus a few oriented faces that must appear in the embedding.  Each
declared face ``(a, b, c, ...)`` forces ``succ_b(a) = c`` and so on around
the walk; the remaining freedom at every vertex is searched until the
rotation is spherical.

>>> s = Sketch()
>>> s.tri("a", "b", "c")
>>> s.pad("a", 3)
>>> g = s.build()
>>> g.vertex_count, g.degree(s["a"])
(4, 3)
"""

from __future__ import annotations

import itertools
from typing import Hashable

from .plane_graph import GraphError, PlaneGraph


class Sketch:
    def __init__(self) -> None:
        self.ids: dict[Hashable, int] = {}
        self.adj: dict[int, list[int]] = {}
        self.faces: list[tuple[int, ...]] = []
        self._leaf = 0

    def __getitem__(self, name: Hashable) -> int:
        return self.ids[name]

    def vertex(self, name: Hashable) -> int:
        if name not in self.ids:
            v = len(self.ids) + 1
            self.ids[name] = v
            self.adj[v] = []
        return self.ids[name]

    def edge(self, a: Hashable, b: Hashable) -> None:
        u, v = self.vertex(a), self.vertex(b)
        if u == v:
            raise GraphError(f"loop at {a!r}")
        if v not in self.adj[u]:
            self.adj[u].append(v)
            self.adj[v].append(u)

    def path(self, *names: Hashable) -> None:
        for a, b in zip(names, names[1:]):
            self.edge(a, b)

    def face(self, *names: Hashable) -> None:
        """Declare an oriented face; its edges are added."""
        for a, b in zip(names, names[1:] + names[:1]):
            self.edge(a, b)
        self.faces.append(tuple(self.ids[x] for x in names))

    def tri(self, a: Hashable, b: Hashable, c: Hashable) -> None:
        self.face(a, b, c)

    def leaf(self, name: Hashable) -> Hashable:
        self._leaf += 1
        new = ("leaf", self._leaf)
        self.edge(name, new)
        return new

    def pad(self, name: Hashable, degree: int) -> None:
        """Attach leaves until ``name`` has the given degree."""
        v = self.vertex(name)
        while len(self.adj[v]) < degree:
            self.leaf(name)
        if len(self.adj[v]) > degree:
            raise GraphError(f"{name!r} already has degree {len(self.adj[v])} > {degree}")

    def degree(self, name: Hashable) -> int:
        return len(self.adj[self.ids[name]])

    # ------------------------------------------------------------------

    def _blocks(self) -> dict[int, list[list[int]]]:
        succ: dict[int, dict[int, int]] = {v: {} for v in self.adj}
        for walk in self.faces:
            k = len(walk)
            for i in range(k):
                a, b, c = walk[i - 1], walk[i], walk[(i + 1) % k]
                if succ[b].get(a, c) != c:
                    raise GraphError(f"conflicting face constraints at vertex {b}")
                succ[b][a] = c
        blocks = {}
        for v, nbrs in self.adj.items():
            s = succ[v]
            if len(set(s.values())) != len(s):
                raise GraphError(f"conflicting face constraints at vertex {v}")
            preds = set(s.values())
            chains = []
            used: set[int] = set()
            for start in nbrs:
                if start in preds:
                    continue
                chain = [start]
                while chain[-1] in s:
                    chain.append(s[chain[-1]])
                chains.append(chain)
                used.update(chain)
            rest = [u for u in nbrs if u not in used]
            if rest:
                # constraints close into a full cycle around v
                if len(chains) or len(rest) != len(nbrs):
                    raise GraphError(f"face constraints at vertex {v} form a partial cycle")
                chain = [rest[0]]
                while s[chain[-1]] != rest[0]:
                    chain.append(s[chain[-1]])
                chains.append(chain)
            blocks[v] = chains
        return blocks

    def _bridges(self) -> set[frozenset[int]]:
        """Bridges via DFS low-links (iterative)."""
        index: dict[int, int] = {}
        low: dict[int, int] = {}
        out: set[frozenset[int]] = set()
        for root in self.adj:
            if root in index:
                continue
            index[root] = low[root] = len(index)
            stack = [(root, 0, iter(self.adj[root]))]
            while stack:
                v, parent, it = stack[-1]
                for u in it:
                    if u == parent:
                        continue
                    if u in index:
                        low[v] = min(low[v], index[u])
                    else:
                        index[u] = low[u] = len(index)
                        stack.append((u, v, iter(self.adj[u])))
                    break
                else:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        low[p] = min(low[p], low[v])
                        if low[v] > index[p]:
                            out.add(frozenset((p, v)))
        return out

    def build(self, max_tries: int = 200_000) -> PlaneGraph:
        blocks = self._blocks()
        bridges = self._bridges()
        verts = sorted(self.adj)
        options = []
        tails = {}
        for v in verts:
            # bridges never change the genus, so they go last in fixed order
            loose = [b for b in blocks[v] if len(b) == 1 and frozenset((v, b[0])) in bridges]
            tied = [b for b in blocks[v] if b not in loose]
            tails[v] = [u for b in loose for u in b]
            if not tied:
                options.append([[]])
                continue
            first, *others = tied
            options.append([
                [first] + list(p) for p in itertools.permutations(others)
            ])
        last_error: Exception | None = None
        for n, choice in enumerate(itertools.product(*options)):
            if n >= max_tries:
                break
            rotation = {
                v: [u for block in c for u in block] + tails[v]
                for v, c in zip(verts, choice)
            }
            try:
                g = PlaneGraph(rotation)
            except GraphError as exc:
                last_error = exc
                continue
            if self._faces_present(g):
                return g
        raise GraphError(f"no spherical rotation found: {last_error}")

    def _faces_present(self, g: PlaneGraph) -> bool:
        have = set()
        for f in g.faces:
            b = f.boundary
            have.update(b[i:] + b[:i] for i in range(len(b)))
        return all(walk in have for walk in self.faces)
