"""Verification of maximal girth-constrained embedded graphs.

A new edge can be drawn without crossings exactly when its endpoints share a
face, and it closes no cycle shorter than ``ell`` exactly when they are at
distance at least ``ell - 1``.  A graph is therefore saturated iff every
co-facial non-adjacent pair is within ``ell - 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .maps import EmbeddedGraph, SurfaceClass, insert_edge_in_face
from .metrics import all_distances, shortest_cycle


class SaturationError(ValueError):
    pass


@dataclass(frozen=True)
class AddablePair:
    x: int
    y: int
    dist: float
    faces: tuple[int, ...]
    corners: tuple[int, int]

    @property
    def face(self) -> int:
        return self.faces[0]

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "dist": None if math.isinf(self.dist) else int(self.dist),
            "faces": list(self.faces),
            "corners": list(self.corners),
        }


@dataclass(frozen=True)
class SaturationReport:
    ell: int
    girth: float
    short_cycle: tuple[int, ...] | None
    addable: tuple[AddablePair, ...]
    fmax: int
    surface: SurfaceClass

    @property
    def girth_ok(self) -> bool:
        return self.short_cycle is None

    @property
    def maximal_ok(self) -> bool:
        return not self.addable

    @property
    def passed(self) -> bool:
        return self.girth_ok and self.maximal_ok

    def to_json(self) -> dict:
        return {
            "verdict": "PASS" if self.passed else "FAIL",
            "ell": self.ell,
            "girth": None if math.isinf(self.girth) else int(self.girth),
            "girth_ok": self.girth_ok,
            "short_cycle": None if self.short_cycle is None else list(self.short_cycle),
            "maximal_ok": self.maximal_ok,
            "addable_pairs": [p.to_json() for p in self.addable],
            "fmax": self.fmax,
            "surface": {"orientable": self.surface.orientable, "genus": self.surface.genus},
        }


def _check_ell(ell: int):
    if ell < 3:
        raise SaturationError(f"ell must be >= 3, got {ell}")


def list_addable_pairs(G: EmbeddedGraph, ell: int, dist=None) -> list[AddablePair]:
    """Every co-facial non-adjacent pair at distance >= ell - 1, once each.

    Pairs are sorted by ``(x, y)`` with ``x < y``; ``faces`` lists every face
    holding both and ``corners`` gives their first corners on the first face.
    """
    _check_ell(ell)
    dist = dist or all_distances(G)
    found: dict[tuple[int, int], list] = {}
    for fi, face in enumerate(G.faces):
        first: dict[int, int] = {}
        for i, v in enumerate(face.vertices):
            first.setdefault(v, i)
        verts = sorted(first)
        for a, x in enumerate(verts):
            dx = dist[x]
            for y in verts[a + 1 :]:
                if dx[y] >= ell - 1 and not G.adjacent(x, y):
                    entry = found.get((x, y))
                    if entry is None:
                        found[(x, y)] = [fi, (first[x], first[y]), [fi]]
                    else:
                        entry[2].append(fi)
    return [
        AddablePair(x, y, dist[x][y], tuple(fs), corners)
        for (x, y), (_, corners, fs) in sorted(found.items())
    ]


def verify_saturated(G: EmbeddedGraph, ell: int) -> SaturationReport:
    _check_ell(ell)
    cyc = shortest_cycle(G)
    girth = math.inf if cyc is None else len(cyc)
    short = tuple(cyc) if cyc is not None and len(cyc) < ell else None
    return SaturationReport(
        ell=ell,
        girth=girth,
        short_cycle=short,
        addable=tuple(list_addable_pairs(G, ell)),
        fmax=G.fmax,
        surface=G.surface,
    )


def apply_pair(G: EmbeddedGraph, pair: AddablePair) -> EmbeddedGraph:
    """Insert the certified edge at its witness corners."""
    return insert_edge_in_face(G, pair.face, *pair.corners)
