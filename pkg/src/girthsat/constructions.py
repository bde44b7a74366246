"""Explicit extremal constructions.

All generators label the long facial cycle ``0..N-1`` in order, starting at
the foot of the first spoke, and return validated maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .maps import EmbeddedGraph, MapError, SurfaceClass, build_map, cycle_map, rotation_from_layout


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class WheelSpec:
    """Subdivided wheel: spoke ``i`` runs from the center to foot ``i`` and
    segment ``i`` runs along the rim from foot ``i`` to foot ``i+1``."""

    spokes: tuple[int, ...]
    segments: tuple[int, ...]

    def __post_init__(self):
        if len(self.spokes) != len(self.segments):
            raise ConstructionError("need as many segments as spokes")
        if len(self.spokes) < 3:
            raise ConstructionError("a wheel needs at least three spokes")
        if min(self.spokes + self.segments) < 1:
            raise ConstructionError("spoke and segment lengths must be >= 1")

    @property
    def rim_length(self) -> int:
        return sum(self.segments)

    @property
    def girth(self) -> int:
        # any two spokes close a cycle with either rim arc between their feet
        k, rim = len(self.spokes), self.rim_length
        best = rim
        for i in range(k):
            for j in range(i + 1, k):
                arc = sum(self.segments[i:j])
                best = min(best, self.spokes[i] + self.spokes[j] + min(arc, rim - arc))
        return best


@dataclass(frozen=True)
class SurfaceWheelSpec:
    g: int
    ell: int
    crosscaps: int = 0

    def __post_init__(self):
        if self.g < 1:
            raise ConstructionError(f"g must be >= 1, got {self.g}")
        if self.ell < 6:
            raise ConstructionError(f"ell must be >= 6, got {self.ell}")
        if self.crosscaps not in (0, 1, 2):
            raise ConstructionError(f"crosscaps must be 0, 1 or 2, got {self.crosscaps}")

    @property
    def m(self) -> int:
        return self.ell - 4

    @property
    def surface(self) -> SurfaceClass:
        if self.crosscaps == 0:
            return SurfaceClass(True, self.g)
        return SurfaceClass(False, 2 * self.g + self.crosscaps)


def _circle(n: int, radius: float = 1.0, phase: float = 0.0):
    return [
        (radius * math.cos(phase + 2 * math.pi * i / n), radius * math.sin(phase + 2 * math.pi * i / n))
        for i in range(n)
    ]


def _plane(n: int, edges, pos) -> EmbeddedGraph:
    try:
        return build_map(n, edges, rotation_from_layout(n, edges, pos))
    except MapError as exc:  # pragma: no cover - layouts are fixed
        raise ConstructionError(f"layout is not a plane drawing: {exc}") from exc


def gen_cycle_disc(ell: int, surface: SurfaceClass | None = None) -> EmbeddedGraph:
    """``C_{2ell-3}``, saturated for girth ``ell`` on any surface."""
    if ell < 3:
        raise ConstructionError(f"ell must be >= 3, got {ell}")
    return cycle_map(2 * ell - 3, surface)


def gen_subdivided_wheel(spec: WheelSpec) -> EmbeddedGraph:
    """Plane subdivided wheel; rim vertices first, then center, then spoke interiors."""
    rim = spec.rim_length
    feet = [sum(spec.segments[:i]) for i in range(len(spec.spokes))]
    pos = _circle(rim)
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    center = rim
    pos.append((0.0, 0.0))
    for foot, length in zip(feet, spec.spokes):
        prev = center
        fx, fy = pos[foot]
        for j in range(1, length):
            pos.append((fx * j / length, fy * j / length))
            edges.append((prev, len(pos) - 1))
            prev = len(pos) - 1
        edges.append((prev, foot))
    return _plane(len(pos), edges, pos)


def gen_wheel_W(ell: int) -> EmbeddedGraph:
    """Three spokes of length 2 and segments ``ell-4, ell-4, ell-3``."""
    if ell < 7:
        raise ConstructionError(f"W(ell) needs ell >= 7, got {ell}")
    return gen_subdivided_wheel(WheelSpec((2, 2, 2), (ell - 4, ell - 4, ell - 3)))


def gen_wheel_Wprime(ell: int) -> EmbeddedGraph:
    """Edge-disjoint ``C_9`` and ``C_{3ell-9}`` glued at three equidistant vertices.

    The long cycle is ``0..3ell-10`` with shared vertices ``0, ell-3, 2ell-6``;
    the six private vertices of ``C_9`` follow.
    """
    if ell not in (7, 8, 9):
        raise ConstructionError(f"W'(ell) is defined for ell in 7..9, got {ell}")
    n_out = 3 * ell - 9
    pos = _circle(n_out)
    edges = [(i, (i + 1) % n_out) for i in range(n_out)]
    shared = [0, ell - 3, 2 * ell - 6]
    for k in range(3):
        a, b = shared[k], shared[(k + 1) % 3]
        prev = a
        for j in (1, 2):
            ang = 2 * math.pi * (k + j / 3) / 3
            pos.append((0.5 * math.cos(ang), 0.5 * math.sin(ang)))
            edges.append((prev, len(pos) - 1))
            prev = len(pos) - 1
        edges.append((prev, b))
    return _plane(len(pos), edges, pos)


def surface_sketch(spec: SurfaceWheelSpec):
    """Straight-line plane sketch ``(n, edges, positions)`` of the surface wheel.

    The two star centers are ``N`` and ``N+1`` where ``N = 2(g+1)m``. The
    drawing has crossings; the embedding itself comes from the rotations
    chosen in :func:`gen_surface_construction`.
    """
    m, k = spec.m, spec.g + 1
    n_rim = 2 * k * m
    pos = _circle(n_rim)
    edges = [(i, (i + 1) % n_rim) for i in range(n_rim)]
    center, other = n_rim, n_rim + 1
    pos.append((0.0, 0.0))
    lx, ly = pos[m]
    pos.append((0.2 * lx, 0.2 * ly))
    edges += [(center, 2 * m * i) for i in range(k)]
    edges += [(other, 2 * m * i + m) for i in range(k)]
    return n_rim + 2, edges, pos


def gen_surface_construction(spec: SurfaceWheelSpec | None = None, *, g=None, ell=None, crosscaps=0) -> EmbeddedGraph:
    """Two interleaved stars inside a facial ``C_{2(g+1)(ell-4)}``.

    The rim keeps its plane rotation (stars on the inner side); both centers
    list their edges in rim order, which leaves a single inner face and
    hence Euler genus ``2g``.
    """
    if spec is None:
        spec = SurfaceWheelSpec(g, ell, crosscaps)
    n, edges, pos = surface_sketch(spec)
    rot = rotation_from_layout(n, edges, pos)
    center, other = n - 2, n - 1
    norm = [(min(u, v), max(u, v)) for u, v in edges]
    for hub in (center, other):
        star = sorted((norm[d >> 1][1 - (d & 1)], d) for d in rot[hub])
        rot[hub] = [d for _, d in star]
    G = build_map(n, norm, rot, surface=spec.surface)
    if G.euler_genus != 2 * spec.g or G.faces[0].degree != n - 2:
        raise ConstructionError(f"unexpected embedding for {spec}")  # pragma: no cover
    return G
