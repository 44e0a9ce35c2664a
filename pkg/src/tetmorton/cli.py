"""Batch front end: build, adapt, validate, benchmark and export meshes.

Exit codes: 0 on success, 1 when validation finds violations, 2 for
argument errors.
"""

from __future__ import annotations

import argparse
import gc
import os
import sys
import time

from .forest import (
    CoarseMesh,
    adapt,
    element_count,
    new_forest,
    read_forest,
    validate_forest,
    write_forest,
)
from .vtkio import write_vtk


def _fractal_callback(top_level: int, refine_types=(0, 3)):
    """Refine while the type matches and the children stay within
    ``top_level``."""

    def callback(tree_id, elements):
        el = elements[0]
        return 1 if el.type in refine_types and el.level < top_level else 0

    return callback


def _timed_new(dim: int, trees: int, level: int, ranks: int, rank: int):
    coarse = CoarseMesh(dim, trees)
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        forest = new_forest(coarse, level, ranks, rank)
        elapsed = time.perf_counter() - start
    finally:
        if gc_was_enabled:
            gc.enable()
    return forest, elapsed


def cmd_new(args) -> int:
    forest, elapsed = _timed_new(args.dim, args.trees, args.level, args.ranks, args.rank)
    count = element_count(forest)
    print(f"elements {count}")
    print(f"wall_time_s {elapsed:.6f}")
    if args.out:
        write_forest(args.out, forest)
        print(f"wrote {args.out}")
    return 0


def cmd_adapt_fractal(args) -> int:
    coarse = CoarseMesh(args.dim, args.trees)
    forest = new_forest(coarse, args.init, args.ranks, args.rank)
    callback = _fractal_callback(args.init + args.extra)
    start = time.perf_counter()
    adapted = adapt(forest, callback)
    elapsed = time.perf_counter() - start
    count = element_count(adapted)
    per_element = elapsed / count if count else 0.0
    stats = adapted.adapt_stats
    print(f"elements {count}")
    print(f"wall_time_s {elapsed:.6f}")
    print(f"per_element_s {per_element:.3e}")
    print(f"clamped_refines {stats.refine_clamped}")
    print(f"clamped_coarsenings {stats.coarsen_clamped}")
    if args.out:
        write_forest(args.out, adapted)
        print(f"wrote {args.out}")
    return 0


def cmd_validate(args) -> int:
    if os.path.getsize(args.infile) == 0:
        print("elements 0")
        print("OK")
        return 0
    forest = read_forest(args.infile)
    problems = validate_forest(forest)
    print(f"elements {element_count(forest)}")
    for problem in problems:
        print(f"VIOLATION {problem}")
    if problems:
        print(f"FAILED with {len(problems)} violations")
        return 1
    print("OK")
    return 0


def cmd_bench(args) -> int:
    first, last = args.levels
    print(f"{'level':>5} {'elements':>12} {'seconds':>10} {'factor':>7}")
    previous = None
    for level in range(first, last + 1):
        best = None
        for _ in range(args.repeat):
            forest, elapsed = _timed_new(args.dim, args.trees, level, 1, 0)
            best = elapsed if best is None else min(best, elapsed)
        count = element_count(forest)
        factor = f"{best / previous:.2f}" if previous else "--"
        print(f"{level:>5} {count:>12} {best:>10.4f} {factor:>7}")
        previous = best
        del forest
    return 0


def cmd_export(args) -> int:
    forest = read_forest(args.infile)
    write_vtk(args.out, forest)
    print(f"wrote {args.out}")
    return 0


def _levels_range(text: str) -> tuple[int, int]:
    if ".." in text:
        first, _, last = text.partition("..")
        lo, hi = int(first), int(last)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty level range {text!r}")
    return lo, hi


def _add_mesh_flags(sub, with_level=True):
    sub.add_argument("--dim", type=int, default=3, choices=(2, 3), help="mesh dimension")
    sub.add_argument("--trees", type=int, default=1, metavar="K", help="number of root trees")
    if with_level:
        sub.add_argument("--level", type=int, required=True, help="uniform refinement level")
    sub.add_argument("--ranks", type=int, default=1, metavar="P", help="logical rank count")
    sub.add_argument("--rank", type=int, default=0, metavar="p", help="logical rank to build")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetmorton",
        description="Curve-ordered triangular/tetrahedral mesh toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_new = sub.add_parser("new", help="build a partitioned uniform forest")
    _add_mesh_flags(p_new)
    p_new.add_argument("--out", help="write the forest dump here")
    p_new.set_defaults(func=cmd_new)

    p_adapt = sub.add_parser("adapt-fractal", help="recursive type-selective refinement")
    _add_mesh_flags(p_adapt, with_level=False)
    p_adapt.add_argument("--init", type=int, default=0, metavar="k", help="initial uniform level")
    p_adapt.add_argument("--extra", type=int, default=5, help="levels added by the recursion")
    p_adapt.add_argument("--out", help="write the adapted forest dump here")
    p_adapt.set_defaults(func=cmd_adapt_fractal)

    p_val = sub.add_parser("validate", help="re-check a forest dump")
    p_val.add_argument("--in", dest="infile", required=True, help="forest dump to check")
    p_val.set_defaults(func=cmd_validate)

    p_bench = sub.add_parser("bench", help="time uniform builds over a level range")
    p_bench.add_argument("--levels", type=_levels_range, required=True, metavar="A..B")
    p_bench.add_argument("--repeat", type=int, default=1, help="take the best of this many runs")
    p_bench.add_argument("--dim", type=int, default=3, choices=(2, 3))
    p_bench.add_argument("--trees", type=int, default=1, metavar="K")
    p_bench.set_defaults(func=cmd_bench)

    p_exp = sub.add_parser("export", help="write a legacy-ASCII mesh file")
    p_exp.add_argument("--in", dest="infile", required=True, help="forest dump to export")
    p_exp.add_argument("--out", required=True, help="output mesh file")
    p_exp.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
