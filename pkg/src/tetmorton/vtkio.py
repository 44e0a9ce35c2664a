"""Legacy-ASCII unstructured-grid export.

Cells are written with their own vertices (no deduplication), scaled to
the unit square/cube.  Cell type 5 is a triangle, 10 a tetrahedron.
Trees of a multi-tree forest share the reference geometry and therefore
overlap in the output.
"""

from __future__ import annotations

from typing import TextIO

from .forest import Forest
from .tet import coordinates


def _fmt(value: float) -> str:
    return f"{value:.9g}"


def write_vtk(target: str | TextIO, forest: Forest, title: str = "tetmorton mesh") -> None:
    if isinstance(target, str):
        with open(target, "w") as fh:
            write_vtk(fh, forest, title)
        return
    cfg = forest.config
    scale = 1.0 / cfg.root_extent
    corners = cfg.dim + 1
    cells = [el for tree_id in sorted(forest.trees) for el in forest.trees[tree_id]]

    target.write("# vtk DataFile Version 3.0\n")
    target.write(f"{title}\n")
    target.write("ASCII\nDATASET UNSTRUCTURED_GRID\n")
    target.write(f"POINTS {len(cells) * corners} float\n")
    for el in cells:
        for vertex in coordinates(cfg, el):
            xyz = [c * scale for c in vertex] + [0.0] * (3 - cfg.dim)
            target.write(" ".join(_fmt(c) for c in xyz) + "\n")
    target.write(f"CELLS {len(cells)} {len(cells) * (corners + 1)}\n")
    for i in range(len(cells)):
        base = i * corners
        target.write(" ".join(str(v) for v in (corners, *range(base, base + corners))) + "\n")
    target.write(f"CELL_TYPES {len(cells)}\n")
    cell_type = "5" if cfg.dim == 2 else "10"
    for _ in cells:
        target.write(cell_type + "\n")
