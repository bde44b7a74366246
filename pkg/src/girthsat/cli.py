"""Command-line interface.

Exit codes: 0 success/PASS, 1 verification failure or unmet target,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import constructions as cons
from .jsonio import graph_to_json, read_graph
from .maps import MapError, SurfaceClass
from .metrics import MetricError, find_lens, girth_of
from .saturation import SaturationError, verify_saturated
from .search import DEFAULT_BUDGET, DEFAULT_KMAX, SearchError, exhaustive_refute, lower_bound_search

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(payload, out):
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _events(obj):
    sys.stderr.write(json.dumps(obj) + "\n")
    sys.stderr.flush()


def parse_surface(text: str) -> SurfaceClass:
    """``"g,o"`` / ``"g,n"`` (also ``orientable``/``nonorientable``)."""
    try:
        g, kind = text.split(",")
        genus = int(g)
    except ValueError:
        raise argparse.ArgumentTypeError(f"surface must look like 'g,o' or 'g,n', got {text!r}")
    kind = kind.strip().lower()
    if kind in ("o", "s", "orientable"):
        return SurfaceClass(True, genus)
    if kind in ("n", "nonorientable"):
        try:
            return SurfaceClass(False, genus)
        except MapError as exc:
            raise argparse.ArgumentTypeError(str(exc))
    raise argparse.ArgumentTypeError(f"unknown orientability {kind!r}")


def cmd_gen(args) -> int:
    if args.kind != "surface" and (args.genus is not None or args.crosscaps):
        raise UsageError(f"--genus and --crosscaps only apply to 'gen surface', not {args.kind!r}")
    if args.kind == "cycle":
        G = cons.gen_cycle_disc(args.ell)
    elif args.kind == "wheel":
        G = cons.gen_wheel_W(args.ell)
    elif args.kind == "wheelprime":
        G = cons.gen_wheel_Wprime(args.ell)
    else:
        if args.genus is None:
            raise UsageError("gen surface needs --genus")
        G = cons.gen_surface_construction(g=args.genus, ell=args.ell, crosscaps=args.crosscaps)
    _emit(graph_to_json(G), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = read_graph(args.input)
    report = verify_saturated(G, args.ell)
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_lens(args) -> int:
    G = read_graph(args.input)
    if args.face is not None:
        if not 0 <= args.face < G.face_count:
            raise MetricError(f"face {args.face} does not exist")
        faces = [G.faces[args.face]]
    else:
        faces = [f for f in G.faces if f.is_facial_cycle and args.x in f.vertices and args.y in f.vertices]
    if not faces:
        raise MetricError(f"vertices {args.x} and {args.y} share no facial cycle")
    lens = find_lens(G, faces[0], args.x, args.y, args.ell)
    _emit({"cycle": list(faces[0].vertices), "lens": None if lens is None else lens.to_json()}, args.output)
    return EXIT_OK if lens is not None else EXIT_FAIL


def cmd_search(args) -> int:
    result = lower_bound_search(
        args.ell,
        args.surface,
        restarts=args.restarts,
        seed=args.seed,
        jobs=args.jobs,
        on_event=_events if args.progress else None,
    )
    _emit(result.to_json(), args.output)
    if args.target is not None and result.best_fmax < args.target:
        return EXIT_FAIL
    return EXIT_OK


def cmd_refute(args) -> int:
    report = exhaustive_refute(
        args.ell,
        args.cycle_len,
        args.kmax,
        args.budget,
        on_event=_events if args.progress else None,
    )
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.exhausted and report.found is None else EXIT_FAIL


def cmd_stats(args) -> int:
    G = read_graph(args.input)
    girth = girth_of(G)
    degrees = [f.degree for f in G.faces]
    _emit(
        {
            "v": G.vertex_count,
            "e": G.edge_count,
            "f": G.face_count,
            "euler_genus": G.euler_genus,
            "orientable": G.is_orientable,
            "girth": None if girth == float("inf") else int(girth),
            "fmax": G.fmax,
            "face_degrees": degrees,
            "face_degree_histogram": {str(k): v for k, v in sorted(Counter(degrees).items())},
        },
        args.output,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="girthsat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def out(sp):
        sp.add_argument("-o", "--output", help="write JSON here instead of stdout")

    g = sub.add_parser("gen", help="emit a construction as a JSON graph")
    g.add_argument("kind", choices=["cycle", "wheel", "wheelprime", "surface"])
    g.add_argument("--ell", type=int, required=True)
    g.add_argument("--genus", type=int)
    g.add_argument("--crosscaps", type=int, default=0, choices=[0, 1, 2])
    out(g)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check girth and maximality")
    v.add_argument("--input", required=True)
    v.add_argument("--ell", type=int, required=True)
    out(v)
    v.set_defaults(func=cmd_verify)

    ln = sub.add_parser("lens", help="find a C-convex lens through two facial vertices")
    ln.add_argument("--input", required=True)
    ln.add_argument("--ell", type=int, required=True)
    ln.add_argument("--x", type=int, required=True)
    ln.add_argument("--y", type=int, required=True)
    ln.add_argument("--face", type=int, help="face index (default: first facial cycle holding x and y)")
    out(ln)
    ln.set_defaults(func=cmd_lens)

    s = sub.add_parser("search", help="search for long facial cycles")
    s.add_argument("mode", choices=["lower"])
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--surface", type=parse_surface, default=SurfaceClass.sphere())
    s.add_argument("--restarts", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--target", type=int, help="exit 1 if best fmax stays below this")
    s.add_argument("--progress", action="store_true", help="stream JSON events to stderr")
    out(s)
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("refute", help="bounded exhaustive search for a saturated completion")
    r.add_argument("--ell", type=int, required=True)
    r.add_argument("--cycle-len", type=int, required=True)
    r.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    r.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    r.add_argument("--progress", action="store_true", help="stream JSON events to stderr")
    out(r)
    r.set_defaults(func=cmd_refute)

    st = sub.add_parser("stats", help="basic invariants of a JSON graph")
    st.add_argument("--input", required=True)
    out(st)
    st.set_defaults(func=cmd_stats)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, MapError, MetricError, SaturationError, SearchError, cons.ConstructionError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
