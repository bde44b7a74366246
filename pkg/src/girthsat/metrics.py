"""Distances, girth, shortest-path certificates and lenses on embedded graphs."""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .maps import EmbeddedGraph, FaceRecord

INF = math.inf


class MetricError(ValueError):
    pass


class LemmaViolation(RuntimeError):
    """A structural guarantee failed; the input was not what it claimed to be."""


@dataclass(frozen=True)
class PathRecord:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)


@dataclass
class WwTree:
    root: int
    terminals: frozenset[int]
    parent: dict[int, int | None] = field(default_factory=dict)

    def path_to(self, v: int) -> list[int]:
        """Tree path from the root to ``v``."""
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out[::-1]

    @property
    def vertices(self) -> set[int]:
        return set(self.parent)

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {(min(v, p), max(v, p)) for v, p in self.parent.items() if p is not None}

    def leaves(self) -> set[int]:
        nonleaf = {p for p in self.parent.values() if p is not None}
        if len(self.parent) == 1:
            return set(self.parent)
        out = set(self.parent) - nonleaf
        # the root is a leaf of the tree if it has a single child
        if sum(1 for p in self.parent.values() if p == self.root) == 1:
            out.add(self.root)
        return out


@dataclass(frozen=True)
class SegmentRef:
    cycle: tuple[int, ...]
    vertices: tuple[int, ...]

    def __post_init__(self):
        n, k = len(self.cycle), len(self.vertices)
        if not 1 <= k <= n:
            raise MetricError(f"segment of order {k} does not fit a cycle of length {n}")
        if k > 1:
            pos = {v: i for i, v in enumerate(self.cycle)}
            steps = {(pos[b] - pos[a]) % n for a, b in zip(self.vertices, self.vertices[1:])}
            if steps not in ({1}, {n - 1}):
                raise MetricError("segment vertices are not a consecutive run of the cycle")

    @classmethod
    def run(cls, cycle: Sequence[int], start: int, order: int) -> SegmentRef:
        cyc = tuple(cycle)
        return cls(cyc, tuple(cyc[(start + i) % len(cyc)] for i in range(order)))


@dataclass(frozen=True)
class LensCertificate:
    x: int
    y: int
    path_a: PathRecord
    path_b: PathRecord

    @property
    def total_length(self) -> int:
        return self.path_a.length + self.path_b.length

    @property
    def cycle(self) -> tuple[int, ...]:
        return self.path_a.vertices + tuple(reversed(self.path_b.vertices[1:-1]))

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "path_a": list(self.path_a.vertices),
            "path_b": list(self.path_b.vertices),
        }


def _vertices_of(C) -> tuple[int, ...]:
    if isinstance(C, FaceRecord):
        return C.vertices
    return tuple(C)


def bfs_distances(G: EmbeddedGraph, source: int) -> list[float]:
    adj = G.adjacency
    dist: list[float] = [INF] * G.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_distances(G: EmbeddedGraph) -> list[list[float]]:
    return [bfs_distances(G, s) for s in range(G.vertex_count)]


def girth_of(G: EmbeddedGraph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    cyc = shortest_cycle(G)
    return INF if cyc is None else len(cyc)


def shortest_cycle(G: EmbeddedGraph) -> list[int] | None:
    """Vertices of some shortest cycle, or None for a forest."""
    adj = G.adjacency
    best: list[int] | None = None
    for s in range(G.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < len(best):
                        a, b = [u], [w]
                        while parent[a[-1]] != -1:
                            a.append(parent[a[-1]])
                        while parent[b[-1]] != -1:
                            b.append(parent[b[-1]])
                        # walk both branches up to their meeting point
                        common = set(a) & set(b)
                        a = a[: next(i for i, v in enumerate(a) if v in common) + 1]
                        b = b[: next(i for i, v in enumerate(b) if v in common)]
                        cyc = a[::-1] + b
                        if len(cyc) == length and len(set(cyc)) == length:
                            best = cyc
    return best


def shortest_path(G: EmbeddedGraph, x: int, y: int, rng: random.Random | None = None) -> PathRecord:
    """Lexicographically smallest shortest ``x,y``-path.

    With ``rng`` the next vertex is drawn uniformly among the valid choices
    instead, giving a random shortest path.
    """
    dist = bfs_distances(G, y)
    if dist[x] == INF:
        raise MetricError(f"vertices {x} and {y} lie in different components")
    path = [x]
    adj = G.adjacency
    while path[-1] != y:
        u = path[-1]
        options = [w for w in adj[u] if dist[w] == dist[u] - 1]
        path.append(rng.choice(options) if rng else options[0])
    return PathRecord(tuple(path))


def build_ww_tree(G: EmbeddedGraph, W: Iterable[int], w: int) -> WwTree:
    """Tree containing ``W`` whose root paths from ``w`` are shortest paths in G."""
    terminals = frozenset(W)
    if w not in terminals:
        raise MetricError(f"root {w} is not a terminal")
    tree = WwTree(w, terminals, {w: None})
    for t in sorted(terminals):
        if t in tree.parent:
            continue
        q = shortest_path(G, w, t).vertices
        last = max(i for i, v in enumerate(q) if v in tree.parent)
        for i in range(last + 1, len(q)):
            tree.parent[q[i]] = q[i - 1]
    return tree


def _cycle_edges(cyc: Sequence[int]) -> set[frozenset[int]]:
    n = len(cyc)
    return {frozenset((cyc[i], cyc[(i + 1) % n])) for i in range(n)}


def count_ears(C, P) -> int:
    """Number of ears of cycle ``C`` used by the path ``P``."""
    cyc = _vertices_of(C)
    verts = tuple(P)
    on_c = set(cyc)
    for end in (verts[0], verts[-1]):
        if end not in on_c:
            raise MetricError(f"path endpoint {end} is not on the cycle")
    cedges = _cycle_edges(cyc)
    hits = [i for i, v in enumerate(verts) if v in on_c]
    ears = 0
    for a, b in zip(hits, hits[1:]):
        if b - a > 1 or frozenset((verts[a], verts[b])) not in cedges:
            ears += 1
    return ears


def is_c_convex(C, P) -> bool:
    """A path is C-convex when it leaves the cycle ``C`` at most once."""
    return count_ears(C, P) <= 1


def cycle_distance(C, x: int, y: int) -> int:
    cyc = _vertices_of(C)
    i, j = cyc.index(x), cyc.index(y)
    d = abs(i - j)
    return min(d, len(cyc) - d)


def _paths_up_to(G: EmbeddedGraph, x: int, y: int, limit: int, dist_y: list[float]):
    adj = G.adjacency
    path = [x]
    on = {x}

    def extend():
        u = path[-1]
        if u == y:
            yield tuple(path)
            return
        for w in adj[u]:
            if w not in on and len(path) + dist_y[w] <= limit:
                path.append(w)
                on.add(w)
                yield from extend()
                path.pop()
                on.discard(w)

    yield from extend()


def find_lens(G: EmbeddedGraph, C, x: int, y: int, ell: int) -> LensCertificate | None:
    """Shortest C-convex cycle of length at most ``2*ell - 2`` through x and y.

    The cycle ``C`` itself is never returned. Candidates are ordered by total length, then lexicographically by the two
    ``x,y``-paths (``path_a`` is the smaller one).
    """
    cyc = _vertices_of(C)
    if x == y:
        raise MetricError(f"endpoints equal (vertex {x})")
    for v in (x, y):
        if v not in cyc:
            raise MetricError(f"vertex {v} is not on the cycle")
    budget = 2 * ell - 2
    dist_y = bfs_distances(G, y)
    if dist_y[x] == INF or 2 * dist_y[x] > budget:
        return None
    paths = sorted(
        _paths_up_to(G, x, y, budget - dist_y[x], dist_y), key=lambda p: (len(p), p)
    )
    convex = [p for p in paths if is_c_convex(cyc, p)]
    own = _cycle_edges(cyc)
    best = None
    for i, a in enumerate(convex):
        inner_a = set(a[1:-1])
        for b in convex[i + 1 :]:
            total = len(a) + len(b) - 2
            if total > budget:
                break
            if best is not None and (total, a, b) >= best[0]:
                break
            if inner_a.isdisjoint(b[1:-1]) and _cycle_edges(a + b[-2:0:-1]) != own:
                key = (total, a, b)
                if best is None or key < best[0]:
                    best = (key, a, b)
                break
    if best is None:
        return None
    _, a, b = best
    return LensCertificate(x, y, PathRecord(a), PathRecord(b))


def center_avoiding_vertex(G: EmbeddedGraph, S: SegmentRef | Sequence[int], z: int, ell: int) -> int:
    """Smallest vertex of the order-``ell`` segment S farther than ``ell/2 - 1`` from z."""
    verts = S.vertices if isinstance(S, SegmentRef) else tuple(S)
    if len(verts) != ell:
        raise MetricError(f"segment order mismatch: {len(verts)} vertices, expected {ell}")
    dist = bfs_distances(G, z)
    for v in sorted(verts):
        if 2 * dist[v] > ell - 2:
            return v
    raise LemmaViolation(f"lemma violated: every vertex of {list(verts)} is within {ell / 2 - 1} of {z}")
