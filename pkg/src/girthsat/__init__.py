"""Maximal girth-constrained graphs on surfaces and their longest facial cycles."""

from .constructions import (
    SurfaceWheelSpec,
    WheelSpec,
    gen_cycle_disc,
    gen_subdivided_wheel,
    gen_surface_construction,
    gen_wheel_W,
    gen_wheel_Wprime,
)
from .maps import (
    EmbeddedGraph,
    FaceRecord,
    MapError,
    SurfaceClass,
    build_map,
    euler_genus,
    fmax_of,
    insert_edge_in_face,
    trace_faces,
)
from .metrics import (
    LensCertificate,
    PathRecord,
    SegmentRef,
    build_ww_tree,
    center_avoiding_vertex,
    find_lens,
    girth_of,
    is_c_convex,
    shortest_path,
)
from .saturation import AddablePair, SaturationReport, list_addable_pairs, verify_saturated
from .search import RefutationReport, SearchResult, exhaustive_refute, greedy_saturate, lower_bound_search

__version__ = "0.1.0"
