"""Combinatorial maps: simple graphs cellularly embedded via signed rotation systems.

Darts are numbered per edge: edge ``i`` owns darts ``2*i`` (leaving the
lower-numbered endpoint) and ``2*i + 1`` (leaving the higher one), so the
twin of a dart is ``d ^ 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class MapError(ValueError):
    """Raised when a rotation system does not describe a valid embedded graph."""


class Dart(NamedTuple):
    id: int
    vertex: int
    edge: int
    twin: int


@dataclass(frozen=True)
class SurfaceClass:
    orientable: bool = True
    genus: int = 0

    def __post_init__(self):
        if self.genus < 0:
            raise MapError(f"surface genus must be >= 0, got {self.genus}")
        if not self.orientable and self.genus == 0:
            raise MapError("nonorientable surface needs at least one crosscap")

    @property
    def euler_genus(self) -> int:
        return 2 * self.genus if self.orientable else self.genus

    @classmethod
    def sphere(cls) -> SurfaceClass:
        return cls(True, 0)

    def __str__(self) -> str:
        return f"{'S' if self.orientable else 'N'}_{self.genus}"


@dataclass(frozen=True)
class FaceRecord:
    """One boundary walk.

    ``walk[i]`` is the dart traversed at step ``i`` and ``orientations[i]`` the
    local orientation (+1/-1) in force when leaving its tail. Corner ``i`` is
    the angle at ``vertices[i]`` between ``walk[i-1]`` and ``walk[i]``.
    """

    walk: tuple[int, ...]
    orientations: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.walk)

    @property
    def is_facial_cycle(self) -> bool:
        return self.degree >= 3 and len(set(self.vertices)) == self.degree

    def corner_of(self, vertex: int) -> int:
        """Position of the first corner at ``vertex``."""
        return self.vertices.index(vertex)


@dataclass(frozen=True, eq=False)
class EmbeddedGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]
    surface: SurfaceClass

    def __eq__(self, other):
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.vertex_count, self.edges, self.rotation, self.signs, self.surface)

    # -- dart helpers -----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def tail(self, dart: int) -> int:
        return self.edges[dart >> 1][dart & 1]

    def head(self, dart: int) -> int:
        return self.edges[dart >> 1][1 - (dart & 1)]

    @property
    def darts(self) -> list[Dart]:
        return [Dart(d, self.tail(d), d >> 1, d ^ 1) for d in range(2 * self.edge_count)]

    @cached_property
    def _position(self) -> dict[int, int]:
        return {d: i for rot in self.rotation for i, d in enumerate(rot)}

    def rotate(self, dart: int, step: int) -> int:
        """Dart ``step`` places after ``dart`` in the rotation at its tail."""
        rot = self.rotation[self.tail(dart)]
        return rot[(self._position[dart] + step) % len(rot)]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour lists."""
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(n)) for n in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    # -- faces ------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[FaceRecord, ...]:
        return tuple(_trace(self))

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def euler_genus(self) -> int:
        return 2 - self.vertex_count + self.edge_count - self.face_count

    @cached_property
    def is_orientable(self) -> bool:
        return _orientation_switches(self) is not None

    @property
    def fmax(self) -> int:
        return max((f.degree for f in self.faces if f.is_facial_cycle), default=0)

    def with_surface(self, surface: SurfaceClass) -> EmbeddedGraph:
        return build_map(self.vertex_count, self.edges, self.rotation, self.signs, surface)

    def __repr__(self):
        return (
            f"EmbeddedGraph(v={self.vertex_count}, e={self.edge_count}, "
            f"f={self.face_count}, surface={self.surface})"
        )


def _trace(G: EmbeddedGraph) -> list[FaceRecord]:
    # States are (dart, orientation). Each face is a pair of mutually reverse
    # orbits; keep the one met first from the lowest unused dart at +1.
    used: set[tuple[int, int]] = set()
    faces = []
    for start in range(2 * G.edge_count):
        if (start, 1) in used:
            continue
        walk, orients, verts = [], [], []
        d, s = start, 1
        while True:
            used.add((d, s))
            sign = G.signs[d >> 1]
            used.add((d ^ 1, -s * sign))
            walk.append(d)
            orients.append(s)
            verts.append(G.tail(d))
            s *= sign
            d = G.rotate(d ^ 1, s)
            if (d, s) == (start, 1):
                break
        faces.append(FaceRecord(tuple(walk), tuple(orients), tuple(verts)))
    if not G.edges:
        faces.append(FaceRecord((), (), (0,)))
    return faces


def _orientation_switches(G: EmbeddedGraph) -> list[int] | None:
    """Per-vertex flips turning every sign positive, or None if nonorientable."""
    flip = [0] * G.vertex_count
    seen = [False] * G.vertex_count
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for d in G.rotation[u]:
            v = G.head(d)
            want = flip[u] ^ (G.signs[d >> 1] < 0)
            if not seen[v]:
                seen[v] = True
                flip[v] = want
                queue.append(v)
            elif flip[v] != want:
                return None
    return flip


def _connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def build_map(
    vertex_count: int,
    edges: Iterable[Sequence[int]],
    rotation: Iterable[Iterable[int]],
    signs: Iterable[int] | None = None,
    surface: SurfaceClass | None = None,
) -> EmbeddedGraph:
    """Validate and assemble an :class:`EmbeddedGraph`.

    Edges may be given in either endpoint order; they are stored as
    ``(min, max)`` and the even dart of edge ``i`` sits at the smaller end.
    ``signs`` defaults to all ``+1`` and ``surface`` to the sphere.
    """
    if vertex_count < 1:
        raise MapError(f"vertex_count must be >= 1, got {vertex_count}")
    norm: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for i, e in enumerate(edges):
        if len(e) != 2:
            raise MapError(f"edge {i} must have two endpoints, got {list(e)}")
        u, v = int(e[0]), int(e[1])
        for x in (u, v):
            if not 0 <= x < vertex_count:
                raise MapError(f"edge {i} endpoint {x} out of range")
        if u == v:
            raise MapError(f"loop at vertex {u} (edge {i})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise MapError(f"duplicate edge {list(key)} (edges {seen[key]} and {i})")
        seen[key] = i
        norm.append(key)
    rot = tuple(tuple(int(d) for d in r) for r in rotation)
    if len(rot) != vertex_count:
        raise MapError(f"rotation lists {len(rot)} vertices, expected {vertex_count}")
    ndarts = 2 * len(norm)
    owner: dict[int, int] = {}
    for v, r in enumerate(rot):
        for d in r:
            if not 0 <= d < ndarts:
                raise MapError(f"dart {d} at vertex {v} does not exist")
            if d in owner:
                raise MapError(f"dart {d} listed twice (vertices {owner[d]} and {v})")
            tail = norm[d >> 1][d & 1]
            if tail != v:
                raise MapError(f"dart {d} belongs to vertex {tail}, listed at vertex {v}")
            owner[d] = v
    for d in range(ndarts):
        if d not in owner:
            raise MapError(f"dart {d} not covered by the rotation at vertex {norm[d >> 1][d & 1]}")
    sg = tuple(int(s) for s in signs) if signs is not None else (1,) * len(norm)
    if len(sg) != len(norm):
        raise MapError(f"signs has {len(sg)} entries, expected {len(norm)}")
    for i, s in enumerate(sg):
        if s not in (1, -1):
            raise MapError(f"sign of edge {i} must be +1 or -1, got {s}")
    if not _connected(vertex_count, norm):
        raise MapError("graph is disconnected")
    surface = surface or SurfaceClass.sphere()
    G = EmbeddedGraph(vertex_count, tuple(norm), rot, sg, surface)
    if surface.orientable and not G.is_orientable:
        raise MapError(f"rotation system is nonorientable but declared surface {surface} is orientable")
    if G.euler_genus > surface.euler_genus:
        raise MapError(
            f"rotation system has Euler genus {G.euler_genus}, "
            f"declared surface {surface} only {surface.euler_genus}"
        )
    return G


def trace_faces(G: EmbeddedGraph) -> list[FaceRecord]:
    """Faces in canonical order: by smallest dart, walks starting there."""
    return list(G.faces)


def euler_genus(G: EmbeddedGraph) -> int:
    return G.euler_genus


def fmax_of(G: EmbeddedGraph) -> int:
    """Length of a longest facial cycle, 0 if no face is bounded by a cycle."""
    return G.fmax


def normalize_signs(G: EmbeddedGraph) -> EmbeddedGraph:
    """Equivalent map with all signs +1 (flipping rotations along a spanning tree)."""
    flip = _orientation_switches(G)
    if flip is None:
        raise MapError("rotation system is nonorientable; signs cannot be normalized")
    rot = tuple(tuple(reversed(r)) if flip[v] else r for v, r in enumerate(G.rotation))
    return EmbeddedGraph(G.vertex_count, G.edges, rot, (1,) * G.edge_count, G.surface)


def insert_edge_in_face(G: EmbeddedGraph, face: FaceRecord | int, corner_x: int, corner_y: int) -> EmbeddedGraph:
    """Draw a new edge inside ``face`` joining two of its corners.

    The face is split in two; vertex count and Euler genus are unchanged.
    """
    if isinstance(face, int):
        face = G.faces[face]
    elif face not in G.faces:
        raise MapError("face does not belong to this graph")
    n = face.degree
    if n == 0:
        raise MapError("face has no corners")
    for c in (corner_x, corner_y):
        if not 0 <= c < n:
            raise MapError(f"corner {c} not on face of degree {n}")
    x, y = face.vertices[corner_x], face.vertices[corner_y]
    if x == y:
        raise MapError(f"endpoints equal (vertex {x})")
    if G.adjacent(x, y):
        raise MapError(f"vertices {x} and {y} already adjacent")
    e = G.edge_count
    new_edges = G.edges + ((min(x, y), max(x, y)),)
    dx = 2 * e if x < y else 2 * e + 1
    dy = dx ^ 1
    rot = [list(r) for r in G.rotation]
    for v, dart, corner in ((x, dx, corner_x), (y, dy, corner_y)):
        out = face.walk[corner]
        r = rot[v]
        if face.orientations[corner] > 0:
            # out follows twin(prev) in the rotation: insert just before out
            r.insert(r.index(out), dart)
        else:
            r.insert(r.index(out) + 1, dart)
    sign = face.orientations[corner_x] * face.orientations[corner_y]
    H = EmbeddedGraph(
        G.vertex_count,
        new_edges,
        tuple(tuple(r) for r in rot),
        G.signs + (sign,),
        G.surface,
    )
    assert H.face_count == G.face_count + 1, "face split failed"
    return H


def cofacial_corners(face: FaceRecord, x: int, y: int) -> tuple[int, int] | None:
    """First corners of ``x`` and ``y`` on ``face``, or None if either is absent."""
    try:
        return face.vertices.index(x), face.vertices.index(y)
    except ValueError:
        return None


def rotation_from_layout(vertex_count, edges, positions) -> list[list[int]]:
    """Counter-clockwise rotation of a straight-line plane drawing."""
    import math

    norm = [(min(u, v), max(u, v)) for u, v in edges]
    out: list[list[tuple[float, int]]] = [[] for _ in range(vertex_count)]
    for i, (u, v) in enumerate(norm):
        (ux, uy), (vx, vy) = positions[u], positions[v]
        out[u].append((math.atan2(vy - uy, vx - ux), 2 * i))
        out[v].append((math.atan2(uy - vy, ux - vx), 2 * i + 1))
    return [[d for _, d in sorted(r)] for r in out]


def cycle_map(length: int, surface: SurfaceClass | None = None) -> EmbeddedGraph:
    """The cycle ``0-1-...-(length-1)-0`` drawn on the sphere."""
    if length < 3:
        raise MapError(f"cycle length must be >= 3, got {length}")
    edges = [(i, (i + 1) % length) for i in range(length)]
    # edge i joins i and i+1; the wrap edge is stored as (0, length-1)
    rot = [[2 * i, 2 * ((i - 1) % length) + 1] for i in range(length)]
    rot[0] = [0, 2 * (length - 1)]
    rot[length - 1] = [2 * (length - 2) + 1, 2 * (length - 1) + 1]
    return build_map(length, edges, rot, surface=surface)


def edge_order_map(vertex_count: int, edges, surface: SurfaceClass | None = None) -> EmbeddedGraph:
    """Any graph with rotation in edge order; cellular genus 0 only for trees."""
    norm = [(min(u, v), max(u, v)) for u, v in edges]
    rot: list[list[int]] = [[] for _ in range(vertex_count)]
    for i, (u, v) in enumerate(norm):
        rot[u].append(2 * i)
        rot[v].append(2 * i + 1)
    return build_map(vertex_count, norm, rot, surface=surface)


def add_pendant_vertex(G: EmbeddedGraph, face: FaceRecord | int, corner: int) -> EmbeddedGraph:
    """Attach a new degree-one vertex inside ``face`` at ``corner``.

    The new vertex gets id ``vertex_count``; face count is unchanged.
    """
    if isinstance(face, int):
        face = G.faces[face]
    if not 0 <= corner < max(face.degree, 1):
        raise MapError(f"corner {corner} not on face of degree {face.degree}")
    v = face.vertices[corner]
    w = G.vertex_count
    e = G.edge_count
    rot = [list(r) for r in G.rotation] + [[2 * e + 1]]
    if face.degree:
        out = face.walk[corner]
        r = rot[v]
        r.insert(r.index(out) + (0 if face.orientations[corner] > 0 else 1), 2 * e)
    else:
        rot[v].append(2 * e)
    return EmbeddedGraph(
        w + 1,
        G.edges + ((v, w),),
        tuple(tuple(r) for r in rot),
        G.signs + (1,),
        G.surface,
    )


def face_with_dart(G: EmbeddedGraph, dart: int, orientation: int | None = None) -> tuple[int, int]:
    """``(face index, position)`` of the step traversing ``dart``."""
    for fi, f in enumerate(G.faces):
        for i, d in enumerate(f.walk):
            if d == dart and (orientation is None or f.orientations[i] == orientation):
                return fi, i
    raise MapError(f"dart {dart} not found on any face")
