"""Greedy saturation, bounded exhaustive refutation and lower-bound search."""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import constructions as cons
from .maps import (
    EmbeddedGraph,
    MapError,
    SurfaceClass,
    add_pendant_vertex,
    build_map,
    cycle_map,
    face_with_dart,
    insert_edge_in_face,
)
from .metrics import all_distances, girth_of
from .saturation import AddablePair, list_addable_pairs

log = logging.getLogger(__name__)

DEFAULT_KMAX = 3
DEFAULT_BUDGET = 10**8


class SearchError(ValueError):
    pass


# -- greedy -----------------------------------------------------------------


def _update_distances(dist, x: int, y: int):
    n = len(dist)
    dx, dy = dist[x], dist[y]
    for a in range(n):
        ax, ay = dist[a][x], dist[a][y]
        row = dist[a]
        for b in range(n):
            via = min(ax + 1 + dy[b], ay + 1 + dx[b])
            if via < row[b]:
                row[b] = via


def _pick(pairs: list[AddablePair], rng: random.Random | None) -> AddablePair:
    if rng is not None:
        return rng.choice(pairs)
    top = max(p.dist for p in pairs)
    return min((p for p in pairs if p.dist == top), key=lambda p: (p.x, p.y, p.face))


def greedy_saturate(
    G0: EmbeddedGraph,
    ell: int,
    seed: int | None = None,
    on_step: Callable[[EmbeddedGraph], None] | None = None,
) -> EmbeddedGraph:
    """Add certified edges until the graph is saturated.

    Without a seed the farthest addable pair is chosen (ties by ``x, y, face``);
    with a seed the pair is drawn uniformly from all addable pairs.
    """
    if girth_of(G0) < ell:
        raise SearchError(f"seed graph has girth {girth_of(G0)} < {ell}")
    rng = random.Random(seed) if seed is not None else None
    G = G0
    dist = all_distances(G)
    while True:
        pairs = list_addable_pairs(G, ell, dist)
        if not pairs:
            return G
        p = _pick(pairs, rng)
        G = insert_edge_in_face(G, p.face, *p.corners)
        _update_distances(dist, p.x, p.y)
        if on_step:
            on_step(G)


# -- exhaustive refutation --------------------------------------------------


@dataclass
class RefutationReport:
    ell: int
    L: int
    k_max: int
    exhausted: bool
    found: EmbeddedGraph | None
    nodes: int
    states: int
    budget: int

    def to_json(self) -> dict:
        from .jsonio import graph_to_json

        return {
            "ell": self.ell,
            "L": self.L,
            "k_max": self.k_max,
            "exhausted": self.exhausted,
            "found": None if self.found is None else graph_to_json(self.found),
            "nodes": self.nodes,
            "states": self.states,
            "budget": self.budget,
            "enumerated_class": (
                f"plane graphs containing C_{self.L} as a face, with at most "
                f"{self.k_max} further vertices all of degree >= 2"
            ),
        }


def _canonical_code(G: EmbeddedGraph, roots: list[tuple[int, int]]) -> tuple:
    """Smallest BFS code of the plane map over the given rooted directions."""
    best = None
    adj_rot = G.rotation
    pos = G._position
    for root, direction in roots:
        label = {G.tail(root): 0}
        queue = [(G.tail(root), root)]
        code: list[int] = []
        qi = 0
        while qi < len(queue):
            v, start = queue[qi]
            qi += 1
            rot = adj_rot[v]
            k = len(rot)
            p = pos[start]
            for i in range(k):
                d = rot[(p + direction * i) % k]
                w = G.head(d)
                if w not in label:
                    label[w] = len(label)
                    queue.append((w, d ^ 1))
                code.append(label[w])
            code.append(-1)
            if best is not None and code > list(best[: len(code)]):
                break
        else:
            t = tuple(code)
            if best is None or t < best:
                best = t
    return best


def _ears(G: EmbeddedGraph, fi: int, ell: int, dist, k_left: int) -> Iterator[EmbeddedGraph]:
    """All ways to draw one ear, closed ear or lollipop inside face ``fi``."""
    face = G.faces[fi]
    verts = face.vertices
    n = face.degree
    for cx in range(n):
        x = verts[cx]
        for cy in range(n):
            y = verts[cy]
            if y <= x:
                continue
            for j in range(0, k_left + 1):
                if dist[x][y] + j + 1 < ell or (j == 0 and G.adjacent(x, y)):
                    continue
                yield _open_ear(G, fi, cx, cy, j)
        for j in range(max(ell - 1, 2), k_left + 1):
            yield from _closed_ears(G, fi, cx, j)
        for p in range(1, k_left + 1):
            for j in range(max(ell - 1, 2), k_left - p + 1):
                H, tip, back = _chain(G, fi, cx, p)
                hf, hc = face_with_dart(H, back)
                yield from _closed_ears(H, hf, hc, j)


def _chain(G: EmbeddedGraph, fi: int, corner: int, count: int):
    """Pendant path of ``count`` new vertices; returns the graph, its tip and
    the dart leaving the tip."""
    H = G
    for _ in range(count):
        H = add_pendant_vertex(H, fi, corner)
        back = 2 * (H.edge_count - 1) + 1
        fi, corner = face_with_dart(H, back)
    return H, H.vertex_count - 1, back


def _open_ear(G: EmbeddedGraph, fi: int, cx: int, cy: int, j: int) -> EmbeddedGraph:
    if j == 0:
        return insert_edge_in_face(G, fi, cx, cy)
    out_y = G.faces[fi].walk[cy]
    H, _, back = _chain(G, fi, cx, j)
    hf, hc = face_with_dart(H, back)
    return insert_edge_in_face(H, hf, hc, H.faces[hf].walk.index(out_y))


def _closed_ears(G: EmbeddedGraph, fi: int, cx: int, j: int) -> Iterator[EmbeddedGraph]:
    first = G.edge_count
    out_x = G.faces[fi].walk[cx]
    H, _, back = _chain(G, fi, cx, j)
    hf, hc = face_with_dart(H, back)
    walk = H.faces[hf].walk
    for target in {out_x, 2 * first}:
        yield insert_edge_in_face(H, hf, hc, walk.index(target))


def exhaustive_refute(
    ell: int,
    L: int,
    k_max: int = DEFAULT_KMAX,
    budget: int = DEFAULT_BUDGET,
    on_event: Callable[[dict], None] | None = None,
) -> RefutationReport:
    """Search for a saturated plane graph that keeps ``C_L`` as a face.

    Starting from ``C_L``, ears (paths through at most ``k_max`` new vertices
    in total) are drawn inside faces other than the kept one, never closing a
    cycle shorter than ``ell``. Every reachable map is visited once up to
    rotations and reflections of ``C_L``.
    """
    if ell < 3:
        raise SearchError(f"ell must be >= 3, got {ell}")
    if L < ell:
        raise SearchError(f"cycle length {L} must be >= ell = {ell}")
    if k_max < 0:
        raise SearchError("k_max must be >= 0")
    root = cycle_map(L)
    # the kept face is the one traversing dart 1 (vertex 1 -> vertex 0)
    kept_walk = root.faces[face_with_dart(root, 1)[0]].walk
    roots = [(d, 1) for d in kept_walk] + [(d ^ 1, -1) for d in kept_walk]
    seen = {_canonical_code(root, roots)}
    stack = [root]
    nodes = 0
    while stack:
        if nodes >= budget:
            return RefutationReport(ell, L, k_max, False, None, nodes, len(seen), budget)
        G = stack.pop()
        nodes += 1
        dist = all_distances(G)
        if not list_addable_pairs(G, ell, dist):
            return RefutationReport(ell, L, k_max, True, G, nodes, len(seen), budget)
        k_left = k_max - (G.vertex_count - L)
        kept = face_with_dart(G, 1)[0]
        children = []
        for fi in range(G.face_count):
            if fi == kept:
                continue
            for H in _ears(G, fi, ell, dist, k_left):
                code = _canonical_code(H, roots)
                if code not in seen:
                    seen.add(code)
                    children.append(H)
        stack.extend(reversed(children))
        if on_event and nodes % 1000 == 0:
            on_event({"event": "progress", "nodes": nodes, "states": len(seen)})
    return RefutationReport(ell, L, k_max, True, None, nodes, len(seen), budget)


# -- lower-bound search -----------------------------------------------------


@dataclass
class SearchResult:
    best_graph: EmbeddedGraph
    best_fmax: int
    ell: int
    seed: int
    restarts: int
    greedy_steps: int
    source: str
    mode: str = "random"
    history: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        from .jsonio import graph_to_json

        return {
            "ell": self.ell,
            "best_fmax": self.best_fmax,
            "seed": self.seed,
            "restarts": self.restarts,
            "greedy_steps": self.greedy_steps,
            "mode": self.mode,
            "source": self.source,
            "best_graph": graph_to_json(self.best_graph),
        }


def _fixed_seeds(ell: int, surface: SurfaceClass) -> list[tuple[str, EmbeddedGraph]]:
    seeds = [("cycle_disc", cons.gen_cycle_disc(ell, surface))]
    if ell >= 7:
        seeds.append(("wheel_W", cons.gen_wheel_W(ell).with_surface(surface)))
    if ell in (7, 8, 9):
        seeds.append(("wheel_Wprime", cons.gen_wheel_Wprime(ell).with_surface(surface)))
    if ell >= 6:
        if surface.orientable and surface.genus >= 1:
            spec = cons.SurfaceWheelSpec(surface.genus, ell)
            seeds.append((f"surface_g{spec.g}", cons.gen_surface_construction(spec)))
        elif not surface.orientable and (surface.genus - 1) // 2 >= 1:
            g = (surface.genus - 1) // 2
            spec = cons.SurfaceWheelSpec(g, ell, surface.genus - 2 * g)
            seeds.append((f"surface_g{g}_x{spec.crosscaps}", cons.gen_surface_construction(spec)))
    return seeds


def random_seed_graph(ell: int, surface: SurfaceClass, rng: random.Random) -> tuple[str, EmbeddedGraph]:
    """A random girth->=ell map fitting on ``surface``: long cycle or wheel."""
    if rng.random() < 0.3:
        L = rng.randint(ell, 3 * ell)
        return f"cycle{L}", cycle_map(L, surface)
    while True:
        k = rng.randint(3, 5)
        spokes = [rng.randint(1, max(1, ell - 2)) for _ in range(k)]
        segs = []
        for i in range(k):
            need = max(1, ell - spokes[i] - spokes[(i + 1) % k])
            segs.append(rng.randint(need, need + ell))
        spec = cons.WheelSpec(tuple(spokes), tuple(segs))
        if spec.girth < ell:
            continue
        G = cons.gen_subdivided_wheel(spec)
        if surface.euler_genus > 0 and rng.random() < 0.5:
            G = _shuffle_hub(G, spec, surface, rng)
        return f"wheel{spokes}/{segs}", G.with_surface(surface)


def _shuffle_hub(G, spec, surface, rng):
    hub = spec.rim_length
    rot = [list(r) for r in G.rotation]
    rest = rot[hub][1:]
    rng.shuffle(rest)
    rot[hub] = rot[hub][:1] + rest
    try:
        return build_map(G.vertex_count, G.edges, rot, G.signs, surface)
    except MapError:
        return G


def _restart(args) -> tuple[int, str, EmbeddedGraph, int]:
    ell, surface, seed, index = args
    rng = random.Random(f"{seed}/{index}")
    name, G0 = random_seed_graph(ell, surface, rng)
    steps = [0]
    G = greedy_saturate(G0, ell, seed=rng.randrange(2**32), on_step=lambda _: steps.__setitem__(0, steps[0] + 1))
    return G.fmax, f"restart {index}: {name}", G, steps[0]


def lower_bound_search(
    ell: int,
    surface: SurfaceClass | None = None,
    restarts: int = 20,
    seed: int = 0,
    jobs: int = 1,
    on_event: Callable[[dict], None] | None = None,
) -> SearchResult:
    """Best saturated graph found from constructions and random greedy restarts.

    Restart ``i`` is seeded from ``(seed, i)`` alone, so results for a prefix
    of restarts do not depend on how many follow. Ties keep the earliest.
    """
    if ell < 3:
        raise SearchError(f"ell must be >= 3, got {ell}")
    surface = surface or SurfaceClass.sphere()
    best: tuple[int, str, EmbeddedGraph] | None = None
    steps_total = 0
    history = []

    def consider(fmax, source, G):
        nonlocal best
        if best is None or fmax > best[0]:
            best = (fmax, source, G)
        history.append(best[0])

    for name, G0 in _fixed_seeds(ell, surface):
        G = greedy_saturate(G0, ell)
        consider(G.fmax, f"construction {name}", G)
    tasks = [(ell, surface, seed, i) for i in range(restarts)]
    if jobs > 1 and restarts > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_restart, tasks))
    else:
        results = map(_restart, tasks)
    for i, (fmax, source, G, steps) in enumerate(results):
        steps_total += steps
        consider(fmax, source, G)
        if on_event:
            on_event({"event": "restart", "index": i, "fmax": fmax, "best_fmax": best[0]})
    fmax, source, G = best
    return SearchResult(G, fmax, ell, seed, restarts, steps_total, source, history=history)
