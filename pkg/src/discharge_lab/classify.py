"""Structural classification of vertices and 3-faces.

Every predicate the reducibility lemmas and discharging rules rely on lives
here: bad 3-vertices, pendant 3-faces, degree signatures of 3-faces,
special and good 4-vertices, bad (3,4,5+)-faces, chains of triangles and
the poor / semi-poor / non-poor taxonomy.

Results are memoised per graph in a :class:`Structure`, obtained with
:func:`structure`.  All functions are pure: the graph is immutable.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .plane_graph import PlaneGraph


class PoorClass(str, enum.Enum):
    POOR = "poor"
    SEMI_POOR = "semi_poor"
    NON_POOR = "non_poor"
    NOT_APPLICABLE = "not_applicable"


class FourKind(str, enum.Enum):
    SPECIAL = "special"
    GOOD = "good"
    NEITHER = "neither"


@dataclass(frozen=True)
class PendantIncidence:
    host: int
    bad: int
    face: int


@dataclass(frozen=True)
class TriangleChain:
    """A chain T0..Tn of 3-faces from a (3,4,4)-face.

    ``connectors[i]`` is the 4-vertex shared by ``triangles[i]`` and
    ``triangles[i+1]``; ``others[i]`` is the non-connecting vertex of
    ``triangles[i]`` for ``i < n``.  On the last triangle, ``tip`` is its
    highest-degree vertex besides the final connector and ``tail`` the
    remaining one.
    """

    triangles: tuple[int, ...]
    connectors: tuple[int, ...]
    others: tuple[int, ...]
    tip: int
    tail: int
    apex: int  # the 3-vertex of T0
    terminal: str

    @property
    def length(self) -> int:
        return len(self.triangles) - 1

    @property
    def interior_vertices(self) -> frozenset[int]:
        """Vertices of T0..T(n-1), i.e. the apex plus every t_i and x_i."""
        return frozenset((self.apex, *self.connectors, *self.others))


@dataclass(frozen=True)
class ChainAnomaly:
    """A chain ending at a structure forbidden by the chain lemmas.

    ``kind`` is ``"i"``, ``"ii"``, ``"iii"`` (chain into a special
    (4,4,4)-face, a (3,4,k)-face, or directly into another (3,4,4)-face) or
    ``"self"`` (the chain returns to ``triangles[loop_index]``).
    """

    kind: str
    triangles: tuple[int, ...]
    connectors: tuple[int, ...]
    others: tuple[int, ...]
    apex: int
    loop_index: int | None = None


class ClassifyError(ValueError):
    pass


# signature patterns --------------------------------------------------------

_TOKEN = re.compile(r"^\s*(\*|\d+)([+-]?)\s*$")


@lru_cache(maxsize=None)
def parse_pattern(pattern: str) -> tuple[tuple[int, int], ...]:
    """Parse ``"(3,4-,5+)"`` into inclusive degree ranges."""
    body = pattern.strip().strip("()")
    out = []
    for tok in body.split(","):
        tok = tok.replace("⁺", "+").replace("⁻", "-")
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad pattern token {tok!r} in {pattern!r}")
        num, mod = m.groups()
        if num == "*":
            out.append((0, 10**9))
        elif mod == "+":
            out.append((int(num), 10**9))
        elif mod == "-":
            out.append((0, int(num)))
        else:
            out.append((int(num), int(num)))
    return tuple(out)


def match_roles(degrees, pattern: str) -> tuple[int, ...] | None:
    """Index permutation assigning ``degrees`` to pattern slots, or None."""
    slots = parse_pattern(pattern)
    if len(slots) != len(degrees):
        return None
    for perm in itertools.permutations(range(len(degrees))):
        if all(lo <= degrees[i] <= hi for i, (lo, hi) in zip(perm, slots)):
            return perm
    return None


def signature_matches(signature, pattern: str) -> bool:
    return match_roles(tuple(signature), pattern) is not None


# per-graph structure --------------------------------------------------------


class Structure:
    """Memoised classifications of one plane graph."""

    def __init__(self, g: PlaneGraph):
        self.g = g
        self.deg = {v: g.degree(v) for v in g.vertices}

    # faces ---------------------------------------------------------------

    @cached_property
    def triangles(self) -> tuple[int, ...]:
        return self.g.triangles

    @cached_property
    def tris_at(self) -> dict[int, tuple[int, ...]]:
        return {v: self.g.triangles_at(v) for v in self.g.vertices}

    def tri_vertices(self, f: int) -> tuple[int, ...]:
        return self.g.face(f).boundary

    @cached_property
    def signature(self) -> dict[int, tuple[int, int, int]]:
        return {
            f: tuple(sorted(self.deg[v] for v in self.tri_vertices(f)))
            for f in self.triangles
        }

    def is_tri(self, f: int) -> bool:
        return self.g.face(f).degree == 3

    def sig_is(self, f: int, pattern: str) -> bool:
        return self.is_tri(f) and signature_matches(self.signature[f], pattern)

    def roles(self, f: int, pattern: str) -> tuple[int, ...] | None:
        """Vertices of 3-face ``f`` ordered to fit ``pattern`` slot by slot."""
        vs = self.tri_vertices(f)
        perm = match_roles(tuple(self.deg[v] for v in vs), pattern)
        return None if perm is None else tuple(vs[i] for i in perm)

    def with_degree(self, f: int, d: int) -> tuple[int, ...]:
        return tuple(v for v in self.tri_vertices(f) if self.deg[v] == d)

    # bad 3-vertices and pendants -----------------------------------------

    @cached_property
    def bad3(self) -> frozenset[int]:
        return frozenset(v for v in self.g.vertices if self.deg[v] == 3 and self.tris_at[v])

    def pendant_neighbor(self, u: int, f: int) -> int | None:
        """The neighbour of 3-vertex ``u`` not on 3-face ``f``."""
        on = self.g.face(f).vertices
        off = [w for w in self.g.neighbors(u) if w not in on]
        return off[0] if len(off) == 1 else None

    @cached_property
    def pendant_incidences(self) -> dict[int, tuple[PendantIncidence, ...]]:
        out = {}
        for v in self.g.vertices:
            inc = []
            for u in self.g.neighbors(v):
                if u not in self.bad3:
                    continue
                for f in self.tris_at[u]:
                    if v not in self.g.face(f).vertices:
                        inc.append(PendantIncidence(v, u, f))
            out[v] = tuple(inc)
        return out

    @cached_property
    def pendant_faces(self) -> dict[int, tuple[int, ...]]:
        return {
            v: tuple(sorted({p.face for p in inc}))
            for v, inc in self.pendant_incidences.items()
        }

    # 4-vertices ----------------------------------------------------------

    @cached_property
    def four_kind(self) -> dict[int, FourKind]:
        out = {}
        for v in self.g.vertices:
            if self.deg[v] != 4:
                continue
            alpha = len(self.tris_at[v])
            p = len(self.pendant_faces[v])
            if alpha == 1 and p == 2:
                out[v] = FourKind.SPECIAL
            elif alpha == 1 and p <= 1:
                out[v] = FourKind.GOOD
            else:
                out[v] = FourKind.NEITHER
        return out

    def has_good4(self, f: int) -> bool:
        return any(self.four_kind.get(v) is FourKind.GOOD for v in self.tri_vertices(f))

    def has_special4(self, f: int) -> bool:
        return any(self.four_kind.get(v) is FourKind.SPECIAL for v in self.tri_vertices(f))

    # bad (3,4,5+)-faces ----------------------------------------------------

    @cached_property
    def bad_345p(self) -> frozenset[int]:
        out = set()
        for f in self.triangles:
            r = self.roles(f, "(3,4,5+)")
            if r is None:
                continue
            four = r[1]
            if any(h != f and self.sig_is(h, "(3,4,4)") for h in self.tris_at[four]):
                out.add(f)
        return frozenset(out)

    def is_bad(self, f: int, pattern: str = "(3,4,5+)") -> bool:
        return f in self.bad_345p and self.sig_is(f, pattern)

    # chains ----------------------------------------------------------------

    def chain_search(self, t0_face: int) -> tuple[tuple[TriangleChain, ...], tuple[ChainAnomaly, ...]]:
        return self._chain_results[t0_face]

    @cached_property
    def _chain_results(self) -> dict[int, tuple[tuple[TriangleChain, ...], tuple[ChainAnomaly, ...]]]:
        return {f: self._search(f) for f in self.triangles if self.sig_is(f, "(3,4,4)")}

    def _search(self, start: int):
        chains: list[TriangleChain] = []
        anomalies: list[ChainAnomaly] = []
        apex = self.with_degree(start, 3)[0]
        fours = self.with_degree(start, 4)
        depth_cap = len(self.g.faces)

        def walk(tris, conns, xs, current, via):
            n = len(tris)
            if n > depth_cap:
                return
            for nxt in self.tris_at[via]:
                if nxt == current:
                    continue
                c = conns + (via,)
                if nxt in tris:
                    anomalies.append(
                        ChainAnomaly("self", tris + (nxt,), c, xs, apex, tris.index(nxt))
                    )
                    continue
                rest = [w for w in self.tri_vertices(nxt) if w != via]
                d = sorted(self.deg[w] for w in rest)
                if not (d[0] >= 3 and d[1] >= 4):
                    continue  # not a (3+,4,4+)-face through a 4-vertex
                seq = tris + (nxt,)
                tip, tail = sorted(rest, key=lambda w: (-self.deg[w], w))
                if d[0] == 3:
                    if n >= 2:
                        anomalies.append(ChainAnomaly("ii", seq, c, xs, apex))
                    elif d[1] == 4:
                        anomalies.append(ChainAnomaly("iii", seq, c, xs, apex))
                    else:
                        chains.append(TriangleChain(seq, c, xs, tip, tail, apex, "bad-345+"))
                    continue
                if d == [4, 4]:
                    if self.has_special4(nxt):
                        anomalies.append(ChainAnomaly("i", seq, c, xs, apex))
                    if self.has_good4(nxt):
                        chains.append(TriangleChain(seq, c, xs, tip, tail, apex, "444-good"))
                    for j, r in enumerate(rest):
                        walk(seq, c, xs + (rest[1 - j],), nxt, r)
                else:
                    chains.append(TriangleChain(seq, c, xs, tip, tail, apex, "44+5+"))

        for i, t0 in enumerate(fours):
            walk((start,), (), (fours[1 - i],), start, t0)
        return tuple(chains), tuple(anomalies)

    @cached_property
    def chain_terminals(self) -> frozenset[int]:
        return frozenset(
            ch.triangles[-1] for chains, _ in self._chain_results.values() for ch in chains
        )

    # poorness (used by the (3,0,0) argument) ----------------------------

    @cached_property
    def poor_class(self) -> dict[int, PoorClass]:
        out = {}
        for f in self.triangles:
            threes = self.with_degree(f, 3)
            if not threes:
                out[f] = PoorClass.NOT_APPLICABLE
                continue
            low = 0
            for u in threes:
                p = self.pendant_neighbor(u, f)
                # no off-face neighbour counts like a 6+ pendant neighbour
                if p is not None and self.deg[p] <= 5:
                    low += 1
            if low >= 2:
                out[f] = PoorClass.POOR
            elif low == 1:
                out[f] = PoorClass.SEMI_POOR
            else:
                out[f] = PoorClass.NON_POOR
        return out

    def poor_3vertices(self, f: int) -> tuple[int, ...]:
        if self.poor_class.get(f) not in (PoorClass.POOR, PoorClass.SEMI_POOR):
            return ()
        out = []
        for u in self.with_degree(f, 3):
            p = self.pendant_neighbor(u, f)
            if p is not None and self.deg[p] <= 5:
                out.append(u)
        return tuple(out)

    def poor_faces_at(self, v: int) -> tuple[int, ...]:
        return tuple(f for f in self.tris_at[v] if self.poor_class[f] is PoorClass.POOR)

    def is_loaded_7vertex(self, v: int) -> bool:
        """7-vertex on exactly two poor 3-faces with exactly one pendant 3-face."""
        return (
            self.deg[v] == 7
            and len(self.poor_faces_at(v)) == 2
            and len(self.pendant_faces[v]) == 1
        )

    def special_semipoor_givers(self, f: int) -> tuple[int, ...]:
        """7-vertices of semi-poor (3,7,7+)-face ``f`` that make it special."""
        if self.poor_class.get(f) is not PoorClass.SEMI_POOR or not self.sig_is(f, "(3,7,7+)"):
            return ()
        return tuple(v for v in self.with_degree(f, 7) if self.is_loaded_7vertex(v))


def structure(g: PlaneGraph) -> Structure:
    s = g.__dict__.get("_structure")
    if s is None:
        s = g.__dict__["_structure"] = Structure(g)
    return s


# public functional API -----------------------------------------------------


def _require_tri(g: PlaneGraph, f: int) -> Structure:
    s = structure(g)
    if not s.is_tri(f):
        raise ClassifyError(f"face {f} is not a 3-face")
    return s


def face_signature(g: PlaneGraph, f: int) -> tuple[int, int, int]:
    s = _require_tri(g, f)
    if len(g.face(f).vertices) != 3:
        raise ClassifyError(f"face {f} has a degenerate boundary")
    return s.signature[f]


def bad_3vertices(g: PlaneGraph) -> frozenset[int]:
    return structure(g).bad3


def pendant_incidences(g: PlaneGraph, v: int) -> tuple[PendantIncidence, ...]:
    g.degree(v)
    return structure(g).pendant_incidences[v]


def pendant_faces(g: PlaneGraph, v: int) -> tuple[int, ...]:
    g.degree(v)
    return structure(g).pendant_faces[v]


def special_or_good_4vertex(g: PlaneGraph, v: int) -> FourKind:
    if g.degree(v) != 4:
        raise ClassifyError(f"vertex {v} has degree {g.degree(v)}, not 4")
    return structure(g).four_kind[v]


def is_bad_345p_face(g: PlaneGraph, f: int) -> bool:
    return f in _require_tri(g, f).bad_345p


def find_chains(g: PlaneGraph, t0: int) -> tuple[TriangleChain, ...]:
    s = _require_tri(g, t0)
    if not s.sig_is(t0, "(3,4,4)"):
        raise ClassifyError(f"face {t0} is not a (3,4,4)-face")
    return s.chain_search(t0)[0]


def chain_anomalies(g: PlaneGraph, t0: int) -> tuple[ChainAnomaly, ...]:
    s = _require_tri(g, t0)
    if not s.sig_is(t0, "(3,4,4)"):
        raise ClassifyError(f"face {t0} is not a (3,4,4)-face")
    return s.chain_search(t0)[1]


def poor_class(g: PlaneGraph, f: int) -> PoorClass:
    return _require_tri(g, f).poor_class[f]


def is_special_semipoor_377(g: PlaneGraph, f: int) -> bool:
    s = _require_tri(g, f)
    if s.poor_class[f] is not PoorClass.SEMI_POOR:
        raise ClassifyError(f"face {f} is not semi-poor")
    return bool(s.special_semipoor_givers(f))
