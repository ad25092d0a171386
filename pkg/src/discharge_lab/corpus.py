"""Random plane-graph corpora grown by embedding-preserving local moves.

Two moves are used, both acting inside a single face so the rotation system
stays spherical by construction:

* vertex-in-face insertion: a new vertex is placed in a face and joined to
  one or more distinct corners of it;
* face splitting: a chord is drawn between two corners of a face.

With the class filter on, a move is rejected when it would close a 4- or
5-cycle; only cycles through the new edges need checking.  Output is a pure
function of the :class:`CorpusSpec` (``random.Random(seed)``) and graphs are
deduplicated up to orientation-reversing isomorphism via :func:`canonical_code`.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .plane_graph import PlaneGraph, iter_planar_code_file, trace_faces

MAX_N = 255


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    n_min: int = 3
    n_max: int = 12
    count: int = 100
    seed: int = 0
    class_filter: bool = True
    # probability that a graph is saturated with chords before it is emitted
    maximal: float = 0.0
    max_attach: int = 3
    dedupe: bool = True
    attempts_per_graph: int = 200

    def __post_init__(self) -> None:
        if not 1 <= self.n_min <= self.n_max <= MAX_N:
            raise CorpusError(f"need 1 <= n_min <= n_max <= {MAX_N}, got {self.n_min}..{self.n_max}")
        if self.count < 0:
            raise CorpusError("count must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise CorpusError("seed must be a 64-bit unsigned integer")
        if not 0.0 <= self.maximal <= 1.0:
            raise CorpusError("maximal is a probability")

    @classmethod
    def parse(cls, text: str) -> "CorpusSpec":
        """``gen:n=3..12,count=500,seed=7,filter=on,maximal=0.2``"""
        body = text.split(":", 1)[1] if text.startswith("gen:") else text
        kw: dict = {}
        for item in filter(None, (t.strip() for t in body.split(","))):
            key, _, val = item.partition("=")
            if key == "n":
                lo, _, hi = val.partition("..")
                kw["n_min"], kw["n_max"] = int(lo), int(hi or lo)
            elif key in ("count", "seed", "max_attach"):
                kw[key] = int(val)
            elif key == "filter":
                kw["class_filter"] = val.lower() in ("on", "1", "true", "yes")
            elif key == "maximal":
                kw["maximal"] = float(val)
            else:
                raise CorpusError(f"unknown corpus key {key!r}")
        return cls(**kw)


# short-cycle bookkeeping ------------------------------------------------------


def _has_path(adj: dict[int, list[int]], a: int, b: int, length: int, avoid: frozenset = frozenset()) -> bool:
    """Is there a simple a-b path with exactly ``length`` edges?"""

    def go(x: int, left: int, seen: set[int]) -> bool:
        if left == 0:
            return x == b
        for y in adj[x]:
            if y in seen or y in avoid or (y == b and left != 1):
                continue
            seen.add(y)
            if go(y, left - 1, seen):
                return True
            seen.discard(y)
        return False

    return go(a, length, {a})


def _chord_ok(adj, a: int, b: int) -> bool:
    return not (_has_path(adj, a, b, 3) or _has_path(adj, a, b, 4))


def _attach_ok(adj, corners: list[int]) -> bool:
    # a cycle through the new vertex uses two attachments and an old path
    for i, a in enumerate(corners):
        for b in corners[i + 1:]:
            if _has_path(adj, a, b, 2) or _has_path(adj, a, b, 3):
                return False
    return True


# moves ------------------------------------------------------------------------


def _corners(rotation, boundary: tuple[int, ...]) -> list[tuple[int, int]]:
    """(vertex, incoming neighbour) for each corner of a face walk."""
    m = len(boundary)
    return [(boundary[i], boundary[i - 1]) for i in range(m)]


def _insert_after(rot: list[int], anchor: int, new: int) -> None:
    rot.insert(rot.index(anchor) + 1, new)


class _Grower:
    def __init__(self, spec: CorpusSpec, rng: random.Random):
        self.spec = spec
        self.rng = rng

    def grow(self, n: int) -> dict[int, list[int]] | None:
        rot: dict[int, list[int]] = {1: []}
        if n == 1:
            return rot
        rot = {1: [2], 2: [1]}
        stuck = 0
        while len(rot) < n:
            if self._add_vertex(rot):
                stuck = 0
            else:
                stuck += 1
                if stuck > 50:
                    return None
        if self.rng.random() < self.spec.maximal:
            self._saturate(rot)
        else:
            for _ in range(self.rng.randint(0, n)):
                self._add_chord(rot, tries=8)
        return rot

    def _faces(self, rot):
        return [f for f in trace_faces(rot)]

    def _add_vertex(self, rot) -> bool:
        faces = self._faces(rot)
        face = self.rng.choice(faces)
        corners = _corners(rot, face)
        distinct: dict[int, tuple[int, int]] = {}
        order = list(range(len(corners)))
        self.rng.shuffle(order)
        for i in order:
            distinct.setdefault(corners[i][0], (i, corners[i][1]))
        k = self.rng.randint(1, min(self.spec.max_attach, len(distinct)))
        picks = sorted(self.rng.sample(sorted(distinct.values()), k))
        chosen = [corners[i][0] for i, _ in picks]
        if self.spec.class_filter and not _attach_ok(rot, chosen):
            return False
        w = len(rot) + 1
        for (i, incoming), c in zip(picks, chosen):
            _insert_after(rot[c], incoming, w)
        rot[w] = list(reversed(chosen))
        return True

    def _chord_candidates(self, rot, face) -> list[tuple[int, int, int, int]]:
        corners = _corners(rot, face)
        out = []
        for i in range(len(corners)):
            for j in range(i + 1, len(corners)):
                a, pa = corners[i]
                b, pb = corners[j]
                if a != b and b not in rot[a]:
                    out.append((a, pa, b, pb))
        return out

    def _add_chord(self, rot, tries: int) -> bool:
        for _ in range(tries):
            face = self.rng.choice(self._faces(rot))
            cand = self._chord_candidates(rot, face)
            if not cand:
                continue
            a, pa, b, pb = self.rng.choice(cand)
            if self.spec.class_filter and not _chord_ok(rot, a, b):
                continue
            _insert_after(rot[a], pa, b)
            _insert_after(rot[b], pb, a)
            return True
        return False

    def _saturate(self, rot) -> None:
        while True:
            options = []
            for face in self._faces(rot):
                for a, pa, b, pb in self._chord_candidates(rot, face):
                    if not self.spec.class_filter or _chord_ok(rot, a, b):
                        options.append((a, pa, b, pb))
            if not options:
                return
            a, pa, b, pb = self.rng.choice(options)
            _insert_after(rot[a], pa, b)
            _insert_after(rot[b], pb, a)


def generate(spec: CorpusSpec) -> Iterator[PlaneGraph]:
    """Yield ``spec.count`` plane graphs; deterministic in ``spec``."""
    rng = random.Random(spec.seed)
    grower = _Grower(spec, rng)
    seen: set[bytes] = set()
    produced = 0
    failures = 0
    while produced < spec.count:
        n = rng.randint(spec.n_min, spec.n_max)
        rot = grower.grow(n)
        g = PlaneGraph(rot) if rot is not None else None
        key = canonical_code(g) if g is not None and spec.dedupe else None
        if g is None or (key is not None and key in seen):
            failures += 1
            if failures > spec.attempts_per_graph * max(spec.count, 1):
                raise CorpusError(
                    f"could not produce {spec.count} distinct graphs with "
                    f"n in {spec.n_min}..{spec.n_max} (got {produced})"
                )
            continue
        failures = 0 if key is None else failures
        if key is not None:
            seen.add(key)
        produced += 1
        yield g


# canonical form -------------------------------------------------------------------


def _code_from(rotation, v0: int, w0: int, mirror: bool) -> tuple[int, ...]:
    number = {v0: 1}
    ref = {v0: w0}
    queue = [v0]
    code: list[int] = []
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        rot = rotation[x]
        if mirror:
            rot = rot[::-1]
        if rot:
            start = rot.index(ref[x])
            rot = rot[start:] + rot[:start]
        for y in rot:
            if y not in number:
                number[y] = len(number) + 1
                ref[y] = x
                queue.append(y)
            code.append(number[y])
        code.append(0)
    return tuple(code)


def canonical_code(g: PlaneGraph) -> bytes:
    """Smallest BFS code over all starting darts and both orientations."""
    rotation = g.rotation
    if g.edge_count == 0:
        return bytes([g.vertex_count, 0])
    best = None
    for v in g.vertices:
        for w in rotation[v]:
            for mirror in (False, True):
                code = _code_from(rotation, v, w, mirror)
                if best is None or code < best:
                    best = code
    return bytes([g.vertex_count]) + bytes(best)


def digest(g: PlaneGraph) -> str:
    return hashlib.sha256(canonical_code(g)).hexdigest()[:16]


# ingestion ----------------------------------------------------------------------


def load(source: str | Path) -> list[PlaneGraph]:
    """Graphs from a planar_code file or a ``gen:`` corpus spec."""
    text = str(source)
    if text.startswith("gen:"):
        return list(generate(CorpusSpec.parse(text)))
    return list(iter_planar_code_file(Path(text)))
