"""Brute-force reference computations and random input generators for tests."""

from __future__ import annotations

import itertools
import math
import random

from girthsat.maps import EmbeddedGraph, SurfaceClass, build_map, insert_edge_in_face


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def simple_paths(adj, x, y):
    """Every simple x,y-path as a vertex tuple."""
    out = []

    def go(path, used):
        u = path[-1]
        if u == y:
            out.append(tuple(path))
            return
        for w in adj[u]:
            if w not in used:
                used.add(w)
                path.append(w)
                go(path, used)
                path.pop()
                used.discard(w)

    go([x], {x})
    return out


def brute_distance(adj, x, y):
    return min((len(p) - 1 for p in simple_paths(adj, x, y)), default=math.inf)


def simple_cycles(adj, max_len=None):
    """Each simple cycle once, as a vertex tuple starting at its minimum."""
    n = len(adj)
    out = []
    for s in range(n):

        def go(path, used):
            u = path[-1]
            for w in adj[u]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w > s and w not in used and (max_len is None or len(path) < max_len):
                    used.add(w)
                    path.append(w)
                    go(path, used)
                    path.pop()
                    used.discard(w)

        go([s], {s})
    return out


def brute_girth(adj):
    return min((len(c) for c in simple_cycles(adj)), default=math.inf)


def saturation_oracle(G: EmbeddedGraph, ell: int) -> tuple[bool, bool]:
    """(girth_ok, maximal_ok) by trying every co-facial non-edge and recomputing girth."""
    adj = adjacency(G.vertex_count, G.edges)
    girth_ok = brute_girth(adj) >= ell
    for face in G.faces:
        for x, y in itertools.combinations(sorted(set(face.vertices)), 2):
            if y in adj[x]:
                continue
            adj[x].add(y)
            adj[y].add(x)
            ok = brute_girth(adj) >= ell
            adj[x].discard(y)
            adj[y].discard(x)
            if ok:
                return girth_ok, False
    return girth_ok, True


def _tree_rotations(n, tree_edges):
    darts = [[] for _ in range(n)]
    for i, (u, v) in enumerate(tree_edges):
        darts[u].append(2 * i)
        darts[v].append(2 * i + 1)
    choices = [[(d[0],) + p for p in itertools.permutations(d[1:])] if d else [()] for d in darts]
    return itertools.product(*choices)


def _spanning_tree(n, edges):
    adj = adjacency(n, edges)
    seen, tree, stack = {0}, [], [0]
    while stack:
        u = stack.pop()
        for w in sorted(adj[u]):
            if w not in seen:
                seen.add(w)
                tree.append((min(u, w), max(u, w)))
                stack.append(w)
    return tree


def plane_embeddings(n, edges):
    """Every genus-0 rotation system of a connected graph, each exactly once.

    A plane embedding restricts to a unique rotation of a fixed spanning tree,
    and each further edge sits in a unique corner pair of the smaller map.
    """
    edges = [(min(u, v), max(u, v)) for u, v in edges]
    tree = _spanning_tree(n, edges)
    rest = [e for e in edges if e not in set(tree)]
    for rot in _tree_rotations(n, tree):
        T = build_map(n, tree, rot) if tree else build_map(n, [], [()] * n)

        def extend(G, k):
            if k == len(rest):
                yield G
                return
            x, y = rest[k]
            for fi, face in enumerate(G.faces):
                for cx, vx in enumerate(face.vertices):
                    if vx != x:
                        continue
                    for cy, vy in enumerate(face.vertices):
                        if vy == y:
                            yield from extend(insert_edge_in_face(G, fi, cx, cy), k + 1)

        yield from extend(T, 0)


def rotation_key(G: EmbeddedGraph, edges):
    """Rotation system as cyclic neighbour orders, independent of edge numbering."""
    out = []
    for v, rot in enumerate(G.rotation):
        nbrs = [G.head(d) for d in rot]
        if nbrs:
            i = nbrs.index(min(nbrs))
            nbrs = nbrs[i:] + nbrs[:i]
        out.append(tuple(nbrs))
    return tuple(out)


def random_tree(rng: random.Random, n: int):
    return [(rng.randrange(i), i) for i in range(1, n)]


def random_plane_map(rng: random.Random, n: int, extra: int, surface=None) -> EmbeddedGraph:
    """Random tree with random rotation, then ``extra`` random co-facial chords."""
    edges = random_tree(rng, n)
    rot = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        rot[u].append(2 * i)
        rot[v].append(2 * i + 1)
    for r in rot:
        rng.shuffle(r)
    G = build_map(n, edges, rot, surface=surface)
    for _ in range(extra):
        options = [
            (fi, cx, cy)
            for fi, f in enumerate(G.faces)
            for cx, cy in itertools.combinations(range(f.degree), 2)
            if f.vertices[cx] != f.vertices[cy] and not G.adjacent(f.vertices[cx], f.vertices[cy])
        ]
        if not options:
            break
        G = insert_edge_in_face(G, *rng.choice(options))
    return G


def random_map(rng: random.Random, max_n: int = 10) -> EmbeddedGraph:
    """Random connected simple graph with random rotation and signs."""
    n = rng.randint(1, max_n)
    edges = set(tuple(sorted(e)) for e in random_tree(rng, n))
    for _ in range(rng.randint(0, 2 * n)):
        u, v = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    edges = sorted(edges)
    rot = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        rot[u].append(2 * i)
        rot[v].append(2 * i + 1)
    for r in rot:
        rng.shuffle(r)
    orientable = rng.random() < 0.5
    signs = [1 if orientable else rng.choice((1, -1)) for _ in edges]
    surface = SurfaceClass(True, len(edges) + 1) if orientable else SurfaceClass(False, 2 * len(edges) + 2)
    return build_map(n, edges, rot, signs, surface)


def random_plane_embedding(rng: random.Random, n, edges) -> EmbeddedGraph:
    """A random genus-0 rotation system of a connected planar graph.

    Same construction as :func:`plane_embeddings` with random choices; every
    plane embedding has positive probability. Dead ends restart.
    """
    edges = [(min(u, v), max(u, v)) for u, v in edges]
    tree = _spanning_tree(n, edges)
    rest = [e for e in edges if e not in set(tree)]
    while True:
        rot = [[] for _ in range(n)]
        for i, (u, v) in enumerate(tree):
            rot[u].append(2 * i)
            rot[v].append(2 * i + 1)
        for r in rot:
            rng.shuffle(r)
        G = build_map(n, tree, rot)
        for x, y in rng.sample(rest, len(rest)):
            options = [
                (fi, cx, cy)
                for fi, f in enumerate(G.faces)
                for cx, vx in enumerate(f.vertices)
                if vx == x
                for cy, vy in enumerate(f.vertices)
                if vy == y
            ]
            if not options:
                break
            G = insert_edge_in_face(G, *rng.choice(options))
        else:
            return G
