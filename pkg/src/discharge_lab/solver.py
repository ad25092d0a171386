"""Exact (c1,...,ck)-coloring: verification, search and enumeration.

Colors are the integers ``1..k``; a coloring is a ``dict`` from vertex to
color.  Color class ``i`` may induce a subgraph of maximum degree
``profile[i-1]``.

Search is plain backtracking with per-vertex defect counters; it is exact
and deterministic but exponential in the worst case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .plane_graph import PlaneGraph

Profile = tuple[int, ...]
Coloring = dict[int, int]

P110: Profile = (1, 1, 0)
P300: Profile = (3, 0, 0)
P000: Profile = (0, 0, 0)

PROFILES = {"110": P110, "300": P300, "000": P000}

ENUMERATE_CAP = 20


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    vertex: int
    color: int
    same: int
    bound: int


def adjacency_of(graph) -> Mapping[int, Iterable[int]]:
    if isinstance(graph, PlaneGraph):
        return graph.adjacency
    return graph


def check_profile(profile) -> Profile:
    profile = tuple(int(c) for c in profile)
    if not 1 <= len(profile) <= 4 or any(c < 0 for c in profile):
        raise ColoringError(f"invalid defect profile {profile}")
    return profile


def parse_profile(text: str) -> Profile:
    if text in PROFILES:
        return PROFILES[text]
    return check_profile(int(c) for c in text.replace(",", "").strip("()"))


def _check_colors(coloring: Mapping[int, int], profile: Profile, adj) -> None:
    k = len(profile)
    for v, c in coloring.items():
        if v not in adj:
            raise ColoringError(f"unknown vertex {v}")
        if not 1 <= c <= k:
            raise ColoringError(f"color {c} of vertex {v} outside 1..{k}")


def _consistent(precolored, profile: Profile, adj) -> Coloring:
    precolored = dict(precolored or {})
    bad = violations(adj, profile, precolored)
    if bad:
        raise ColoringError(f"precoloring already violates the profile at vertex {bad[0].vertex}")
    return precolored


def violations(graph, profile, coloring: Mapping[int, int]) -> list[Violation]:
    """Violations among the colored vertices of a (possibly partial) coloring."""
    adj = adjacency_of(graph)
    profile = check_profile(profile)
    _check_colors(coloring, profile, adj)
    out = []
    for v in sorted(coloring):
        c = coloring[v]
        same = sum(1 for u in adj[v] if coloring.get(u) == c)
        if same > profile[c - 1]:
            out.append(Violation(v, c, same, profile[c - 1]))
    return out


def verify(graph, profile, coloring: Mapping[int, int]) -> list[Violation]:
    """All violations of a total coloring; empty iff the coloring is valid."""
    adj = adjacency_of(graph)
    missing = [v for v in adj if v not in coloring]
    if missing:
        raise ColoringError(f"coloring is partial, uncolored: {missing[:5]}")
    return violations(graph, profile, coloring)


def same_color_count(graph, coloring: Mapping[int, int], v: int) -> int:
    adj = adjacency_of(graph)
    c = coloring[v]
    return sum(1 for u in adj[v] if coloring.get(u) == c)


def is_properly_colored(graph, coloring: Mapping[int, int], v: int) -> bool:
    return same_color_count(graph, coloring, v) == 0


def is_nicely_colored(graph, profile, coloring: Mapping[int, int], v: int) -> bool:
    if v not in coloring:
        raise ColoringError(f"vertex {v} is uncolored")
    profile = check_profile(profile)
    bound = max(profile[coloring[v] - 1] - 1, 0)
    return same_color_count(graph, coloring, v) <= bound


def degeneracy_order(adj: Mapping[int, Iterable[int]]) -> list[int]:
    """Vertices in reverse degeneracy order (ties broken by id)."""
    deg = {v: len(tuple(adj[v])) for v in adj}
    removed: set[int] = set()
    order = []
    while len(order) < len(deg):
        v = min((u for u in deg if u not in removed), key=lambda u: (deg[u], u))
        order.append(v)
        removed.add(v)
        for u in adj[v]:
            if u not in removed:
                deg[u] -= 1
    return order[::-1]


class _Search:
    def __init__(self, adj, profile: Profile, precolored: Mapping[int, int]):
        self.adj = {v: tuple(adj[v]) for v in adj}
        self.profile = profile
        self.k = len(profile)
        self.color: dict[int, int] = {}
        self.same: dict[int, int] = {v: 0 for v in self.adj}
        for v, c in precolored.items():
            if not self.fits(v, c):
                raise ColoringError(f"precoloring is inconsistent at vertex {v}")
            self.assign(v, c)
        self.order = [v for v in degeneracy_order(self.adj) if v not in self.color]

    def fits(self, v: int, c: int) -> bool:
        bound = self.profile[c - 1]
        same = 0
        for u in self.adj[v]:
            if self.color.get(u) == c:
                if self.same[u] >= bound:
                    return False
                same += 1
        return same <= bound

    def assign(self, v: int, c: int) -> None:
        self.color[v] = c
        n = 0
        for u in self.adj[v]:
            if self.color.get(u) == c:
                self.same[u] += 1
                n += 1
        self.same[v] = n

    def unassign(self, v: int) -> None:
        c = self.color.pop(v)
        for u in self.adj[v]:
            if self.color.get(u) == c:
                self.same[u] -= 1
        self.same[v] = 0

    def solutions(self, i: int = 0) -> Iterator[Coloring]:
        if i == len(self.order):
            yield dict(self.color)
            return
        v = self.order[i]
        for c in range(1, self.k + 1):
            if self.fits(v, c):
                self.assign(v, c)
                yield from self.solutions(i + 1)
                self.unassign(v)


def solve(graph, profile, precolored: Mapping[int, int] | None = None) -> Coloring | None:
    """A valid total coloring extending ``precolored``, or None if none exists."""
    adj = adjacency_of(graph)
    profile = check_profile(profile)
    precolored = _consistent(precolored, profile, adj)
    search = _Search(adj, profile, precolored)
    for sol in search.solutions():
        return sol
    return None


def is_colorable(graph, profile, precolored: Mapping[int, int] | None = None) -> bool:
    return solve(graph, profile, precolored) is not None


def enumerate_colorings(
    graph, profile, precolored: Mapping[int, int] | None = None, cap: int = ENUMERATE_CAP
) -> Iterator[Coloring]:
    """Yield every valid total coloring extending ``precolored`` once."""
    adj = adjacency_of(graph)
    if len(adj) > cap:
        raise ColoringError(f"{len(adj)} vertices exceeds the enumeration cap {cap}")
    profile = check_profile(profile)
    precolored = _consistent(precolored, profile, adj)
    yield from _Search(adj, profile, precolored).solutions()


def induced(adj: Mapping[int, Iterable[int]], keep: Iterable[int]) -> dict[int, tuple[int, ...]]:
    keep = set(keep)
    return {v: tuple(u for u in adj[v] if u in keep) for v in adj if v in keep}


def format_coloring(coloring: Mapping[int, int]) -> str:
    return " ".join(f"{v}:{coloring[v]}" for v in sorted(coloring))


def parse_coloring(text: str) -> Coloring:
    out = {}
    for tok in text.replace(",", " ").split():
        v, _, c = tok.partition(":")
        if not _:
            raise ColoringError(f"bad coloring token {tok!r}")
        out[int(v)] = int(c)
    return out
