"""Reducible configurations: scanner, brute-force oracle, and extensions.

:func:`scan` locates every occurrence of every forbidden configuration used
by the two discharging arguments.  :func:`test_reducibility` checks one
match by exact search: deleting the configuration's vertex set ``H`` must
not turn an uncolorable graph into a colorable one, i.e.
``colorable(G - H)`` implies ``colorable(G)``.

The constructive pieces are :func:`extend_vertex` and :func:`extend_nicely`
(single-vertex extensions for the two profiles) and :func:`extend_chain`, an
exact frontier dynamic program over the interior of a chain of triangles.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .classify import ChainAnomaly, FourKind, PoorClass, Structure, TriangleChain, structure
from .plane_graph import PlaneGraph
from .solver import (
    P110,
    P300,
    ColoringError,
    Profile,
    adjacency_of,
    check_profile,
    induced,
    is_colorable,
    violations,
)

ORACLE_CAP = 64


class LemmaId(str, enum.Enum):
    P2A = "P2a"
    P2B = "P2b"
    L334 = "L-334"
    L5VERTEX = "L-5vertex"
    L333 = "L-333"
    L344PENDANT = "L-344pendant"
    LSPECIAL344 = "L-special344"
    LCHAIN344 = "L-chain-344"
    LCHAINSELF = "L-chain-self"
    LEXISTCHAIN = "L-exist-chain"
    LBAD345S = "L-bad345s"
    L35K = "L-35k"
    L355 = "L-355"
    L345_45K = "L-345-45k"
    L346 = "L-346"
    LCHAINUNIQUE = "L-chain-unique"
    L3TO6 = "L-3to6"
    L336 = "L-336"
    LPOORHALF = "L-poor-half"
    L8VERTEX = "L-8vertex"
    L7VERTEX = "L-7vertex"
    L377 = "L-377"

    @property
    def profiles(self) -> tuple[Profile, ...]:
        if self in (LemmaId.P2A, LemmaId.P2B):
            return (P110, P300)
        if self in _LEMMAS_300:
            return (P300,)
        return (P110,)


_LEMMAS_300 = {
    LemmaId.L3TO6, LemmaId.L336, LemmaId.LPOORHALF,
    LemmaId.L8VERTEX, LemmaId.L7VERTEX, LemmaId.L377,
}


@dataclass(frozen=True)
class ConfigMatch:
    lemma: LemmaId
    bindings: dict = field(hash=False)
    deletion: frozenset[int] = frozenset()

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma.value,
            "bindings": {k: _jsonable(v) for k, v in sorted(self.bindings.items())},
            "deletion": sorted(self.deletion),
        }


def _jsonable(x):
    if isinstance(x, (tuple, list, frozenset, set)):
        seq = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(y) for y in seq]
    return x


class HypothesisError(ValueError):
    """The caller's situation does not satisfy a lemma's hypothesis."""


class LemmaFalsified(AssertionError):
    """A lemma's hypothesis held but its promised extension does not exist."""


# scanner -----------------------------------------------------------------------


def _profiles_for(profile) -> set[Profile]:
    if profile is None or profile == "both":
        return {P110, P300}
    if isinstance(profile, str):
        from .solver import parse_profile

        profile = parse_profile(profile)
    return {check_profile(profile)}


def scan(g: PlaneGraph, profile=None) -> list[ConfigMatch]:
    """Every located configuration for the given profile (or both)."""
    s = structure(g)
    wanted = _profiles_for(profile)
    out: list[ConfigMatch] = []
    out += _scan_prop2(s)
    if P110 in wanted:
        for scanner in _SCANNERS_110:
            out += scanner(s)
    if P300 in wanted:
        for scanner in _SCANNERS_300:
            out += scanner(s)
    return out


def _m(lemma: LemmaId, deletion: Iterable[int], **bindings) -> ConfigMatch:
    return ConfigMatch(lemma, bindings, frozenset(deletion))


def _scan_prop2(s: Structure) -> list[ConfigMatch]:
    out = []
    for v in s.g.vertices:
        k = s.deg[v]
        if k <= 2:
            out.append(_m(LemmaId.P2A, [v], v=v))
            continue
        alpha = len(s.tris_at[v])
        p = len(s.pendant_faces[v])
        if alpha > k // 2 or p > k - 2 * alpha:
            out.append(_m(LemmaId.P2B, [v], v=v, incident=alpha, pendant=p))
    return out


def _verts(s: Structure, *faces: int) -> set[int]:
    out: set[int] = set()
    for f in faces:
        out.update(s.tri_vertices(f))
    return out


def _partner_344(s: Structure, f: int) -> int | None:
    """A (3,4,4)-face sharing a 4-vertex with 3-face ``f``."""
    for w in s.with_degree(f, 4):
        for h in s.tris_at[w]:
            if h != f and s.sig_is(h, "(3,4,4)"):
                return h
    return None


def _scan_334(s: Structure) -> list[ConfigMatch]:
    out = []
    for f in s.triangles:
        r = s.roles(f, "(3,3,4-)")
        if r is not None:
            out.append(_m(LemmaId.L334, r, face=f, u=r[0], v=r[1], w=r[2]))
    return out


def _scan_5vertex(s: Structure) -> list[ConfigMatch]:
    out = []
    for v in s.g.vertices:
        if s.deg[v] != 5:
            continue
        faces = [f for f in s.tris_at[v] if s.sig_is(f, "(3,4-,5)")]
        for f1, f2 in itertools.combinations(faces, 2):
            on = _verts(s, f1, f2)
            for u in s.g.neighbors(v):
                if s.deg[u] == 3 and u not in on:
                    out.append(_m(LemmaId.L5VERTEX, on | {u}, v=v, u=u, faces=(f1, f2)))
    return out


def _scan_333(s: Structure) -> list[ConfigMatch]:
    out = []
    for v in s.g.vertices:
        if s.deg[v] != 3:
            continue
        threes = [u for u in s.g.neighbors(v) if s.deg[u] == 3]
        for x, y in itertools.combinations(sorted(threes), 2):
            out.append(_m(LemmaId.L333, [v, x, y], v=v, x=x, y=y))
    return out


def _scan_344(s: Structure) -> list[ConfigMatch]:
    out = []
    for f in s.triangles:
        if not s.sig_is(f, "(3,4,4)"):
            continue
        u = s.with_degree(f, 3)[0]
        p = s.pendant_neighbor(u, f)
        if p is not None and s.deg[p] <= 3:
            out.append(_m(LemmaId.L344PENDANT, [u, p], face=f, v=u, u=p))
        for w in s.with_degree(f, 4):
            if s.four_kind[w] is FourKind.SPECIAL:
                pend = sorted({inc.bad for inc in s.pendant_incidences[w]})
                other = next(x for x in s.with_degree(f, 4) if x != w)
                out.append(_m(
                    LemmaId.LSPECIAL344, {u, w, other, *pend},
                    face=f, u=u, v=w, w=other, pendant=tuple(pend),
                ))
    return out


def _chain_delete(ch) -> set[int]:
    return {ch.apex, *ch.connectors, *ch.others}


def _scan_chains(s: Structure) -> list[ConfigMatch]:
    out = []
    seen: set = set()
    by_end: dict[tuple[int, int], list[TriangleChain]] = {}
    for t0 in s.triangles:
        if not s.sig_is(t0, "(3,4,4)"):
            continue
        chains, anomalies = s.chain_search(t0)
        for a in anomalies:
            key = (a.kind, frozenset(a.triangles), a.loop_index is None)
            if a.kind != "self" and key in seen:
                continue
            seen.add(key)
            out.append(_anomaly_match(s, a))
        if not s.has_good4(t0):
            ends = sorted({ch.triangles[-1] for ch in chains})
            if len(ends) < 2:
                out.append(_m(
                    LemmaId.LEXISTCHAIN, s.tri_vertices(t0),
                    face=t0, terminals=tuple(ends),
                ))
        for ch in chains:
            by_end.setdefault((ch.triangles[-1], ch.connectors[-1]), []).append(ch)
    for (end, conn), chains in sorted(by_end.items()):
        origins = {}
        for ch in chains:
            origins.setdefault(ch.triangles[0], ch)
        if len(origins) > 1:
            first, second = list(origins.values())[:2]
            out.append(_m(
                LemmaId.LCHAINUNIQUE, _chain_delete(first) | _chain_delete(second),
                terminal=end, connector=conn,
                chains=(first.triangles, second.triangles),
            ))
    return out


def _anomaly_match(s: Structure, a: ChainAnomaly) -> ConfigMatch:
    S = {a.apex, *a.connectors[:-1], *a.others}
    last = a.triangles[-1]
    if a.kind == "self":
        return _m(
            LemmaId.LCHAINSELF, S | {a.connectors[-1]},
            triangles=a.triangles, loop_index=a.loop_index,
        )
    S.add(a.connectors[-1])
    if a.kind == "i":
        special = [w for w in s.tri_vertices(last) if s.four_kind.get(w) is FourKind.SPECIAL]
        v = special[0]
        H = S | {v, *s.g.neighbors(v)}
    elif a.kind == "ii":
        v = s.with_degree(last, 3)[0]
        H = S | {v}
    else:
        H = S | set(s.tri_vertices(last))
    return _m(LemmaId.LCHAIN344, H, case=a.kind, triangles=a.triangles)


def _bad345_at(s: Structure, v: int) -> list[int]:
    return [f for f in s.tris_at[v] if s.is_bad(f, "(3,4,5)")]


def _pendant_low(s: Structure, v: int) -> list[int]:
    return [f for f in s.pendant_faces[v] if s.sig_is(f, "(3,4-,4-)")]


def _three_of(s: Structure, f: int) -> int:
    return s.with_degree(f, 3)[0]


def _scan_bad345(s: Structure) -> list[ConfigMatch]:
    out = []
    for v in s.g.vertices:
        if s.deg[v] != 5:
            continue
        bads = _bad345_at(s, v)
        if not bads:
            continue
        seconds = bads + [f for f in s.tris_at[v] if s.sig_is(f, "(3,3,5)")]
        for f1, f2 in itertools.combinations(sorted(set(seconds)), 2):
            if f1 not in bads and f2 not in bads:
                continue
            H = _verts(s, f1, f2)
            for f in (f1, f2):
                p = _partner_344(s, f) if f in bads else None
                if p is not None:
                    H |= _verts(s, p)
            out.append(_m(LemmaId.LBAD345S, H, v=v, faces=(f1, f2)))
    return out


def _scan_35k(s: Structure) -> list[ConfigMatch]:
    out = []
    for v in s.g.vertices:
        if s.deg[v] != 5:
            continue
        bads, lows = _bad345_at(s, v), _pendant_low(s, v)
        if not bads or not lows:
            continue
        f2, f4 = bads[0], lows[0]
        f3 = _partner_344(s, f2)
        for f1 in s.tris_at[v]:
            if f1 in bads or not s.sig_is(f1, "(3,5,*)"):
                continue
            threes = s.with_degree(f1, 3)
            pn = [s.pendant_neighbor(u, f1) for u in threes]
            if any(p is not None and s.deg[p] >= 4 for p in pn):
                continue
            u, u2 = threes[0], pn[0]
            H = _verts(s, f2, *( [f3] if f3 is not None else [])) | {u, _three_of(s, f4)}
            if u2 is not None:
                H.add(u2)
            out.append(_m(LemmaId.L35K, H, face=f1, v=v, u=u, bad=f2, pendant=f4))
    return out


def _loaded_5vertex(s: Structure, v: int) -> bool:
    return s.deg[v] == 5 and bool(_bad345_at(s, v)) and bool(_pendant_low(s, v))


def _scan_355(s: Structure) -> list[ConfigMatch]:
    out = []
    for f in s.triangles:
        r = s.roles(f, "(3,5,5)")
        if r is None:
            continue
        u, v, w = r
        if _loaded_5vertex(s, v) and _loaded_5vertex(s, w):
            H = set(r)
            for x in (v, w):
                b = _bad345_at(s, x)[0]
                H |= _verts(s, b)
                p = _partner_344(s, b)
                if p is not None:
                    H |= _verts(s, p)
                H.add(_three_of(s, _pendant_low(s, x)[0]))
            out.append(_m(LemmaId.L355, H, face=f, u=u, v=v, w=w))
    return out


def _scan_345_45k(s: Structure) -> list[ConfigMatch]:
    out = []
    ends: dict[int, TriangleChain] = {}
    for t0 in s.triangles:
        if s.sig_is(t0, "(3,4,4)"):
            for ch in s.chain_search(t0)[0]:
                ends.setdefault(ch.triangles[-1], ch)
    for v in s.g.vertices:
        if not _loaded_5vertex(s, v):
            continue
        f1 = _bad345_at(s, v)[0]
        f2 = _partner_344(s, f1)
        x = _three_of(s, _pendant_low(s, v)[0])
        for T in s.tris_at[v]:
            if T in ends and s.sig_is(T, "(4,4+,5)"):
                ch = ends[T]
                H = _chain_delete(ch) | _verts(s, f1) | {x}
                if f2 is not None:
                    H |= _verts(s, f2)
                out.append(_m(LemmaId.L345_45K, H, v=v, bad=f1, terminal=T, chain=ch.triangles))
    return out


def _scan_346(s: Structure) -> list[ConfigMatch]:
    out = []
    for v in s.g.vertices:
        if s.deg[v] != 6:
            continue
        bads = [f for f in s.tris_at[v] if s.is_bad(f, "(3,4,6)")]
        if not bads:
            continue
        lows = [f for f in s.tris_at[v] if s.sig_is(f, "(3,4-,6)")]
        if len(lows) >= 3:
            H = _verts(s, *lows)
            p = _partner_344(s, bads[0])
            if p is not None:
                H |= _verts(s, p)
            out.append(_m(LemmaId.L346, H, v=v, bad=bads[0], faces=tuple(lows)))
    return out


_SCANNERS_110 = [
    _scan_334, _scan_5vertex, _scan_333, _scan_344, _scan_chains,
    _scan_bad345, _scan_35k, _scan_355, _scan_345_45k, _scan_346,
]


def _scan_3to6(s: Structure) -> list[ConfigMatch]:
    return [
        _m(LemmaId.L3TO6, [v], v=v)
        for v in s.g.vertices
        if s.deg[v] == 3 and all(s.deg[u] <= 5 for u in s.g.neighbors(v))
    ]


def _scan_336(s: Structure) -> list[ConfigMatch]:
    out = []
    for f in s.triangles:
        if s.sig_is(f, "(3,3,6-)") and s.poor_class[f] in (PoorClass.POOR, PoorClass.SEMI_POOR):
            threes = s.with_degree(f, 3)
            out.append(_m(LemmaId.L336, threes, face=f, cls=s.poor_class[f].value))
    return out


def _poor_threes(s: Structure, faces: Iterable[int]) -> set[int]:
    return {u for f in faces for u in s.with_degree(f, 3)}


def _scan_poor(s: Structure) -> list[ConfigMatch]:
    out = []
    for v in s.g.vertices:
        d = s.deg[v]
        if d < 4:
            continue
        poor = s.poor_faces_at(v)
        if len(poor) >= d // 2:
            out.append(_m(LemmaId.LPOORHALF, {v} | _poor_threes(s, poor), v=v, poor=poor))
        semis = [f for f in s.tris_at[v] if s.poor_class[f] is PoorClass.SEMI_POOR]
        pend = s.pendant_incidences[v]
        pend_faces = s.pendant_faces[v]
        if d == 8 and len(poor) == 3 and s.sig_is(poor[0], "(3,3,8)"):
            base = {v} | _poor_threes(s, poor)
            if semis:
                u7 = s.poor_3vertices(semis[0])[0]
                out.append(_m(LemmaId.L8VERTEX, base | {u7}, v=v, case="i", face=semis[0]))
            if len(pend_faces) >= 2:
                bads = _distinct_bads(pend, 2)
                out.append(_m(LemmaId.L8VERTEX, base | bads, v=v, case="ii", pendant=pend_faces))
        if d == 7 and len(poor) == 2 and all(s.sig_is(f, "(3,3,7)") for f in poor):
            base = {v} | _poor_threes(s, poor)
            low = [f for f in semis if s.sig_is(f, "(3,6-,7)")]
            if low and pend_faces:
                u5 = s.poor_3vertices(low[0])[0]
                out.append(_m(
                    LemmaId.L7VERTEX, base | {u5} | _distinct_bads(pend, 1),
                    v=v, case="i", face=low[0],
                ))
            if len(pend_faces) >= 3:
                out.append(_m(
                    LemmaId.L7VERTEX, base | _distinct_bads(pend, 3),
                    v=v, case="ii", pendant=pend_faces,
                ))
    return out


def _distinct_bads(incidences, k: int) -> set[int]:
    faces: dict[int, int] = {}
    for inc in incidences:
        faces.setdefault(inc.face, inc.bad)
    return set(list(faces.values())[:k])


def _scan_377(s: Structure) -> list[ConfigMatch]:
    out = []
    for f in s.triangles:
        if s.poor_class[f] is not PoorClass.SEMI_POOR:
            continue
        r = s.roles(f, "(3,7,7)")
        if r is None:
            continue
        u, v, w = r
        if s.is_loaded_7vertex(v) and s.is_loaded_7vertex(w):
            H = {u, v, w, *s.g.neighbors(v), *s.g.neighbors(w)}
            out.append(_m(LemmaId.L377, H, face=f, u=u, v=v, w=w))
    return out


_SCANNERS_300 = [_scan_3to6, _scan_336, _scan_poor, _scan_377]


# oracle ----------------------------------------------------------------------


class Verdict(str, enum.Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"


def _colorable_cached(g: PlaneGraph, profile: Profile) -> bool:
    cache = g.__dict__.setdefault("_colorable", {})
    if profile not in cache:
        cache[profile] = is_colorable(g, profile)
    return cache[profile]


def test_reducibility(g: PlaneGraph, match: ConfigMatch, profile, cap: int = ORACLE_CAP) -> Verdict:
    """Check ``colorable(g - H) => colorable(g)`` exactly."""
    profile = check_profile(profile)
    if g.vertex_count > cap:
        raise ColoringError(f"{g.vertex_count} vertices exceeds the oracle cap {cap}")
    if not match.deletion:
        raise ValueError("match has an empty deletion set")
    if _colorable_cached(g, profile):
        return Verdict.CONFIRMED
    rest = induced(g.adjacency, set(g.vertices) - set(match.deletion))
    return Verdict.REFUTED if is_colorable(rest, profile) else Verdict.CONFIRMED


test_reducibility.__test__ = False  # keep pytest from collecting it


# extensions ----------------------------------------------------------------


def _fits(adj, profile: Profile, coloring: Mapping[int, int], v: int, c: int) -> bool:
    bound = profile[c - 1]
    same = [u for u in adj[v] if coloring.get(u) == c]
    if len(same) > bound:
        return False
    for u in same:
        if sum(1 for x in adj[u] if coloring.get(x) == c and x != v) + 1 > bound:
            return False
    return True


def _require_clean(adj, profile, partial, v) -> None:
    if v in partial:
        raise HypothesisError(f"vertex {v} is already colored")
    bad = violations(adj, profile, partial)
    if bad:
        raise ColoringError(f"partial coloring has violations: {bad[:3]}")


def _proper(adj, coloring, u) -> bool:
    return all(coloring.get(x) != coloring[u] for x in adj[u])


def extend_vertex(graph, partial: Mapping[int, int], v: int, profile=P110) -> dict[int, int]:
    """Color ``v`` under the hypotheses of the (1,1,0) extension lemma.

    Hypothesis (i): exactly three colored neighbours, at least two of them
    properly colored; (ii): exactly four colored neighbours, all properly
    colored.
    """
    adj = adjacency_of(graph)
    profile = check_profile(profile)
    _require_clean(adj, profile, partial, v)
    colored = [u for u in adj[v] if u in partial]
    proper = sum(1 for u in colored if _proper(adj, partial, u))
    if not ((len(colored) == 3 and proper >= 2) or (len(colored) == 4 and proper == 4)):
        raise HypothesisError(
            f"vertex {v}: {len(colored)} colored neighbours, {proper} properly colored"
        )
    for c in range(1, len(profile) + 1):
        if _fits(adj, profile, partial, v, c):
            return {**partial, v: c}
    raise LemmaFalsified(f"no color for vertex {v} although the hypothesis holds")


def extend_nicely(graph, partial: Mapping[int, int], v: int, profile=P300) -> dict[int, int]:
    """Color ``v`` by 1, nicely, under the (3,0,0) extension lemma.

    Hypothesis: exactly two colored neighbours, one of degree at most 5 and
    the other nicely colored.  The low-degree neighbour may be recolored
    away from 1 when it is saturated.
    """
    adj = adjacency_of(graph)
    profile = check_profile(profile)
    _require_clean(adj, profile, partial, v)
    colored = [u for u in adj[v] if u in partial]
    if len(colored) != 2:
        raise HypothesisError(f"vertex {v} has {len(colored)} colored neighbours, need 2")
    a, b = colored
    pairs = [
        (u, w) for u, w in ((a, b), (b, a))
        if len(tuple(adj[u])) <= 5 and _nice(adj, profile, partial, w)
    ]
    if not pairs:
        raise HypothesisError(f"vertex {v}: no 5- neighbour paired with a nicely colored one")
    for u, _w in pairs:
        result = _color_by_one(adj, profile, dict(partial), v, u)
        if result is not None:
            return result
    raise LemmaFalsified(f"vertex {v} cannot be nicely colored by 1")


def _nice(adj, profile, coloring, w) -> bool:
    c = coloring[w]
    same = sum(1 for x in adj[w] if coloring.get(x) == c)
    return same <= max(profile[c - 1] - 1, 0)


def _color_by_one(adj, profile, coloring, v, u):
    if not _fits(adj, profile, coloring, v, 1):
        if coloring[u] != 1:
            return None
        del coloring[u]
        for c in range(2, len(profile) + 1):
            if _fits(adj, profile, coloring, u, c):
                coloring[u] = c
                break
        else:
            return None
        if not _fits(adj, profile, coloring, v, 1):
            return None
    coloring[v] = 1
    return coloring if _nice(adj, profile, coloring, v) else None


def frontier_extend(adj, profile: Profile, fixed: Mapping[int, int], order: list[int]) -> dict[int, int] | None:
    """Exact extension of ``fixed`` to the vertices in ``order``.

    A path-decomposition style dynamic program: the state after placing a
    prefix of ``order`` records the (color, same-color count) of every
    vertex that still has an unplaced neighbour.  Returns one extension, or
    None if none exists.
    """
    k = len(profile)
    todo = set(order)
    pos = {v: i for i, v in enumerate(order)}
    last = {}
    for v in order:
        for u in adj[v]:
            if u in todo:
                last[v] = max(last.get(v, pos[v]), pos[u])
            elif u in fixed:
                last[u] = max(last.get(u, -1), pos[v])
        last.setdefault(v, pos[v])
    init = {}
    for u in last:
        if u in fixed and u not in todo:
            init[u] = (fixed[u], sum(1 for x in adj[u] if x in fixed and x not in todo and fixed[x] == fixed[u]))
    for u, (c, n) in init.items():
        if n > profile[c - 1]:
            return None
    layers: list[dict] = []
    states = {tuple(sorted(init.items())): None}
    for i, v in enumerate(order):
        nxt: dict = {}
        for key in states:
            fr = dict(key)
            for c in range(1, k + 1):
                bound = profile[c - 1]
                ok = True
                cnt = sum(1 for u in adj[v] if u not in todo and u in fixed and u not in fr and fixed[u] == c)
                upd = {}
                for u in adj[v]:
                    if u in fr and fr[u][0] == c:
                        if fr[u][1] + 1 > bound:
                            ok = False
                            break
                        upd[u] = (c, fr[u][1] + 1)
                        cnt += 1
                if not ok or cnt > bound:
                    continue
                new = dict(fr)
                new.update(upd)
                new[v] = (c, cnt)
                for u in list(new):
                    if last.get(u, -1) <= i:
                        del new[u]
                nk = tuple(sorted(new.items()))
                if nk not in nxt:
                    nxt[nk] = (key, c)
        layers.append(nxt)
        states = nxt
        if not states:
            return None
    key = next(iter(states))
    result = dict(fixed)
    for i in range(len(order) - 1, -1, -1):
        key, c = layers[i][key]
        result[order[i]] = c
    return result


def chain_order(chain: TriangleChain) -> list[int]:
    """Interior vertices from the far end of the chain back to the apex."""
    order = []
    for t, x in zip(reversed(chain.connectors), reversed(chain.others)):
        order += [t, x]
    order.append(chain.apex)
    seen: set[int] = set()
    return [v for v in order if not (v in seen or seen.add(v))]


def chain_hypothesis(graph, chain: TriangleChain, boundary: Mapping[int, int]) -> int | None:
    """The 4- vertex t_n of the last triangle if the chain-extension premise holds.

    The last triangle must be a (4,4-,k)-face through its connector, and its
    k-vertex x_n must be properly colored or share its color with t_n.
    Returns None when the premise fails.
    """
    adj = adjacency_of(graph)
    a, b = chain.tip, chain.tail
    for xn, tn in ((a, b), (b, a)):
        if len(tuple(adj[tn])) > 4:
            continue
        if xn not in boundary or tn not in boundary:
            continue
        if boundary[xn] == boundary[tn] or _proper(adj, boundary, xn):
            return tn
    return None


def extend_chain(graph, chain: TriangleChain, boundary: Mapping[int, int], profile=P110) -> dict[int, int] | None:
    """Extend a coloring of everything outside the chain interior across it.

    The boundary is kept fixed when that suffices.  Otherwise, if the
    chain-extension premise holds, t_n is released as well (the lemma's
    argument recolors it), and the returned coloring may differ from
    ``boundary`` at t_n only.  None means no extension of either kind.
    """
    adj = adjacency_of(graph)
    profile = check_profile(profile)
    interior = chain.interior_vertices
    missing = [v for v in adj if v not in interior and v not in boundary]
    if missing:
        raise ColoringError(f"boundary leaves vertices uncolored: {missing[:5]}")
    clash = [v for v in boundary if v in interior]
    if clash:
        raise ColoringError(f"boundary colors chain-interior vertices {clash}")
    if violations(adj, profile, boundary):
        raise ColoringError("boundary coloring violates the profile")
    order = chain_order(chain)
    result = frontier_extend(adj, profile, boundary, order)
    if result is not None or len(chain.triangles) < 2:
        return result
    tn = chain_hypothesis(adj, chain, boundary)
    if tn is None:
        return None
    released = {v: c for v, c in boundary.items() if v != tn}
    result = frontier_extend(adj, profile, released, [tn, *order])
    if result is None:
        raise LemmaFalsified("chain extension promised by the lemma does not exist")
    return result
