"""Plane graphs given by rotation systems.

A :class:`PlaneGraph` is a simple connected graph together with a cyclic
order of neighbours around every vertex.  Faces are traced from the rotation
and the embedding is rejected unless it lives on the sphere (V - E + F = 2).
There is no distinguished outer face.

Vertex ids are dense 1-based integers, matching planar_code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

PLANAR_CODE_HEADER = b">>planar_code<<"


class GraphError(ValueError):
    """Raised when a rotation system does not describe a valid plane graph."""


class PlanarCodeError(ValueError):
    """Raised on malformed planar_code input."""


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.boundary)


def trace_faces(rotation: Mapping[int, Sequence[int]]) -> list[tuple[int, ...]]:
    """Trace the face boundaries of a rotation system.

    The successor of the dart ``u -> v`` is ``v -> w`` where ``w`` follows
    ``u`` in the rotation at ``v``.  Boundaries are returned as vertex walks,
    faces ordered by their smallest starting dart.
    """
    position = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()}
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in sorted(rotation):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                nbrs = rotation[b]
                c = nbrs[(position[b][a] + 1) % len(nbrs)]
                a, b = b, c
            if (a, b) != (u, v):
                raise GraphError("face traversal did not close")
            faces.append(tuple(walk))
    return faces


class PlaneGraph:
    """Immutable simple connected plane graph.

    ``rotation`` maps each vertex ``1..n`` to its neighbours in cyclic order.
    """

    __slots__ = ("_rotation", "_faces", "_faces_at", "__dict__")

    def __init__(self, rotation: Mapping[int, Iterable[int]] | Sequence[Iterable[int]]):
        if not isinstance(rotation, Mapping):
            rotation = {i + 1: nbrs for i, nbrs in enumerate(rotation)}
        rot = {int(v): tuple(int(u) for u in nbrs) for v, nbrs in rotation.items()}
        n = len(rot)
        if n == 0:
            raise GraphError("graph has no vertices")
        if set(rot) != set(range(1, n + 1)):
            raise GraphError("vertex ids must be 1..n")
        for v, nbrs in rot.items():
            if v in nbrs:
                raise GraphError(f"loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"repeated neighbour at vertex {v}")
            for u in nbrs:
                if u not in rot:
                    raise GraphError(f"vertex {v} names unknown neighbour {u}")
                if v not in rot[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
        _check_connected(rot)
        self._rotation = rot
        if n == 1:
            # a lone vertex embeds on the sphere with one empty face
            self._faces = (Face(0, ()),)
        else:
            self._faces = tuple(Face(i, b) for i, b in enumerate(trace_faces(rot)))
        e = self.edge_count
        if n - e + len(self._faces) != 2:
            raise GraphError(
                f"rotation is not spherical: V-E+F = {n}-{e}+{len(self._faces)} != 2"
            )
        faces_at: dict[int, list[int]] = {v: [] for v in rot}
        for f in self._faces:
            for v in f.boundary:
                faces_at[v].append(f.id)
        self._faces_at = {v: tuple(fs) for v, fs in faces_at.items()}

    # basic structure -------------------------------------------------------

    @property
    def rotation(self) -> Mapping[int, tuple[int, ...]]:
        return self._rotation

    @property
    def vertex_count(self) -> int:
        return len(self._rotation)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._rotation.values()) // 2

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in self.vertices for v in self._rotation[u] if u < v)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(nbrs) for v, nbrs in self._rotation.items()}

    # incidence queries -----------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if v not in self._rotation:
            raise KeyError(f"unknown vertex {v}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._rotation[v]

    def face(self, f: int) -> Face:
        if not 0 <= f < len(self._faces):
            raise KeyError(f"unknown face {f}")
        return self._faces[f]

    def faces_at(self, v: int) -> tuple[int, ...]:
        """Face ids around ``v``, one entry per occurrence on a boundary walk."""
        self._check_vertex(v)
        return self._faces_at[v]

    def vertices_on(self, f: int) -> tuple[int, ...]:
        return self.face(f).boundary

    def face_degree(self, f: int) -> int:
        return self.face(f).degree

    @cached_property
    def triangles(self) -> tuple[int, ...]:
        """Ids of the 3-faces."""
        return tuple(f.id for f in self._faces if f.degree == 3)

    def triangles_at(self, v: int) -> tuple[int, ...]:
        return tuple(f for f in self.faces_at(v) if self._faces[f].degree == 3)

    def is_on_3face(self, v: int) -> bool:
        return bool(self.triangles_at(v))

    # comparisons and display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlaneGraph) and self._rotation == other._rotation

    def __hash__(self) -> int:
        return hash(tuple(self._rotation[v] for v in self.vertices))

    def __repr__(self) -> str:
        return (
            f"PlaneGraph(V={self.vertex_count}, E={self.edge_count}, "
            f"F={len(self._faces)})"
        )

    # planar_code ------------------------------------------------------------

    @classmethod
    def from_planar_code(cls, data: bytes) -> "PlaneGraph":
        graphs = read_planar_code(data)
        if len(graphs) != 1:
            raise PlanarCodeError(f"expected exactly one graph, found {len(graphs)}")
        return graphs[0]

    def to_planar_code(self, header: bool = True) -> bytes:
        return write_planar_code([self], header=header)

    def encode_body(self) -> bytes:
        """planar_code bytes of this graph without the file header."""
        n = self.vertex_count
        if n > 255:
            raise PlanarCodeError("graphs with more than 255 vertices are not supported")
        out = bytearray([n])
        for v in self.vertices:
            out.extend(self._rotation[v])
            out.append(0)
        return bytes(out)


def _check_connected(rot: Mapping[int, Sequence[int]]) -> None:
    start = next(iter(rot))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in rot[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(rot):
        raise GraphError("graph is disconnected")


def read_planar_code(data: bytes) -> list[PlaneGraph]:
    """Decode every graph in a planar_code byte string (header optional)."""
    pos = len(PLANAR_CODE_HEADER) if data.startswith(PLANAR_CODE_HEADER) else 0
    graphs = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise PlanarCodeError("vertex count 0 (big-graph encoding is not supported)")
        rotation: dict[int, list[int]] = {}
        for v in range(1, n + 1):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise PlanarCodeError(f"truncated neighbour list of vertex {v}")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise PlanarCodeError(f"vertex {v} names neighbour {b} > n={n}")
                nbrs.append(b)
            rotation[v] = nbrs
        graphs.append(PlaneGraph(rotation))
    return graphs


def write_planar_code(graphs: Iterable[PlaneGraph], header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for g in graphs:
        out.extend(g.encode_body())
    return bytes(out)


def iter_planar_code_file(path) -> Iterator[PlaneGraph]:
    with open(path, "rb") as fh:
        yield from read_planar_code(fh.read())


# cycles ---------------------------------------------------------------------


def _has_cycle(adj: Mapping[int, Iterable[int]], length: int) -> bool:
    # a length-L cycle is found from its smallest vertex s, walking only
    # through larger vertices
    for s in adj:
        path = [s]
        on_path = {s}

        def extend(v: int) -> bool:
            if len(path) == length:
                return s in adj[v]
            for u in adj[v]:
                if u > s and u not in on_path:
                    path.append(u)
                    on_path.add(u)
                    if extend(u):
                        return True
                    path.pop()
                    on_path.discard(u)
            return False

        if extend(s):
            return True
    return False


def has_cycle_of_length(g: PlaneGraph | Mapping[int, Iterable[int]], length: int) -> bool:
    """True iff ``g`` contains a simple cycle on exactly ``length`` vertices."""
    if length not in (3, 4, 5):
        raise ValueError(f"cycle length must be 3, 4 or 5, got {length}")
    adj = g.adjacency if isinstance(g, PlaneGraph) else g
    return _has_cycle(adj, length)


def in_class(g: PlaneGraph) -> bool:
    """Planar graph without 4-cycles and 5-cycles."""
    return not has_cycle_of_length(g, 4) and not has_cycle_of_length(g, 5)
