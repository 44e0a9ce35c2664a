"""Forest layer: a coarse mesh of root trees, each refined along the curve.

Each tree of the coarse mesh is an independent copy of the root simplex.
A forest stores, for every locally owned tree, the leaf elements in
curve order; ranks are logical, so a single process can materialize any
slice of the global element range.  Global order is (tree id, curve)
lexicographic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TextIO

from . import sfc
from .tet import MeshConfig, TetId, is_descendant, is_inside_root, parent, tm_child, tm_position


@dataclass(frozen=True)
class CoarseMesh:
    """Dimension and tree count of the level-0 mesh."""

    dim: int
    tree_count: int

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError(f"dimension must be 2 or 3, got {self.dim}")
        if self.tree_count < 1:
            raise ValueError("a coarse mesh needs at least one tree")


@dataclass
class AdaptStats:
    """Verdicts ignored during one adapt pass because of level bounds."""

    refine_clamped: int = 0
    coarsen_clamped: int = 0


@dataclass
class Forest:
    coarse: CoarseMesh
    config: MeshConfig
    rank: int
    rank_count: int
    trees: dict[int, list[TetId]] = field(default_factory=dict)
    adapt_stats: AdaptStats | None = None


# A callback receives the current tree id and either one element or a
# complete family of 2**dim siblings.  Positive verdict: refine the first
# element; negative: coarsen the family; zero: keep.
AdaptCallback = Callable[[int, Sequence[TetId]], int]


def new_forest(
    coarse: CoarseMesh,
    level: int,
    rank_count: int = 1,
    rank: int = 0,
    config: MeshConfig | None = None,
) -> Forest:
    """Rank-local slice of the uniform ``level`` refinement of all trees.

    The global elements are numbered 0..N-1 across trees; rank p of P
    owns positions floor(N*p/P) .. floor(N*(p+1)/P)-1, which may be
    empty.  The first element of each owned tree is constructed from its
    linear index, the rest by curve successor steps, so the per-element
    cost does not depend on the level.
    """
    cfg = config if config is not None else MeshConfig(coarse.dim)
    if cfg.dim != coarse.dim:
        raise ValueError("config dimension does not match the coarse mesh")
    if not 0 <= level <= cfg.max_level:
        raise ValueError(f"level must be in 0..{cfg.max_level}, got {level}")
    if not 0 <= rank < rank_count:
        raise ValueError(f"rank must be in 0..{rank_count - 1}, got {rank}")
    per_tree = 1 << (cfg.dim * level)
    total = per_tree * coarse.tree_count
    g_first = total * rank // rank_count
    g_last = total * (rank + 1) // rank_count - 1
    trees: dict[int, list[TetId]] = {}
    if g_first <= g_last:
        k_first = g_first // per_tree
        k_last = g_last // per_tree
        for k in range(k_first, k_last + 1):
            e_first = g_first - per_tree * k if k == k_first else 0
            e_last = g_last - per_tree * k if k == k_last else per_tree - 1
            t = sfc.tet_from_linear_id(cfg, e_first, level)
            elems = [t] * (e_last - e_first + 1)
            step = sfc.successor
            for pos in range(1, len(elems)):
                t = step(cfg, t)
                elems[pos] = t
            trees[k] = elems
    return Forest(coarse, cfg, rank, rank_count, trees)


def family_check(cfg: MeshConfig, elements: Sequence[TetId]) -> bool:
    """True when ``elements`` are the complete children of one parent in
    curve order 0..2**dim-1."""
    nch = 1 << cfg.dim
    if len(elements) != nch:
        return False
    first = elements[0]
    if first.level == 0 or tm_position(cfg, first) != 0:
        return False
    par = parent(cfg, first)
    for j, el in enumerate(elements):
        if el.level != first.level or tm_position(cfg, el) != j:
            return False
        if parent(cfg, el) != par:
            return False
    return True


def _refine_into(cfg, tree_id, element, callback, out, born, stats):
    """Replace ``element`` by its children, re-offering each new child to
    the callback (refinement recursion only)."""
    nch = 1 << cfg.dim
    if element.level >= cfg.max_level:
        stats.refine_clamped += 1
        out.append(element)
        born.append(True)
        return
    stack = [tm_child(cfg, element, j) for j in range(nch - 1, -1, -1)]
    while stack:
        el = stack.pop()
        if callback(tree_id, (el,)) > 0:
            if el.level >= cfg.max_level:
                stats.refine_clamped += 1
                out.append(el)
                born.append(True)
            else:
                stack.extend(tm_child(cfg, el, j) for j in range(nch - 1, -1, -1))
        else:
            out.append(el)
            born.append(True)


def _coalesce_tail(cfg, tree_id, callback, out, born):
    """Re-offer the trailing window for coarsening while it keeps forming
    a family; elements created by refinement never participate."""
    nch = 1 << cfg.dim
    while len(out) >= nch:
        if any(born[-nch:]):
            return
        tail = out[-nch:]
        if not family_check(cfg, tail):
            return
        if callback(tree_id, tuple(tail)) >= 0:
            return
        par = parent(cfg, tail[0])
        del out[-nch:]
        del born[-nch:]
        out.append(par)
        born.append(False)


def adapt(forest: Forest, callback: AdaptCallback) -> Forest:
    """New forest with the callback's refine/coarsen verdicts applied.

    Each tree is traversed in curve order.  When the current element and
    its successors form a complete family, the family is passed to the
    callback; otherwise the single element is.  Refinement recurses into
    newly created children; coarsening recurses through the trailing
    window of the output.  Within one pass, elements created by refining
    are never coarsened and elements created by coarsening are never
    refined.  Verdicts that would refine past the maximum level, or
    coarsen the root, are ignored and counted in ``adapt_stats``.
    """
    cfg = forest.config
    nch = 1 << cfg.dim
    stats = AdaptStats()
    new_trees: dict[int, list[TetId]] = {}
    for tree_id, elems in forest.trees.items():
        out: list[TetId] = []
        born: list[bool] = []
        n = len(elems)
        i = 0
        while i < n:
            el = elems[i]
            family = None
            if el.level > 0 and i + nch <= n and tm_position(cfg, el) == 0:
                window = elems[i : i + nch]
                if family_check(cfg, window):
                    family = window
            verdict = callback(tree_id, tuple(family) if family else (el,))
            if verdict > 0:
                _refine_into(cfg, tree_id, el, callback, out, born, stats)
                i += 1
            elif verdict < 0 and family is not None:
                out.append(parent(cfg, el))
                born.append(False)
                i += nch
                _coalesce_tail(cfg, tree_id, callback, out, born)
            else:
                if verdict < 0 and el.level == 0:
                    stats.coarsen_clamped += 1
                out.append(el)
                born.append(False)
                i += 1
                _coalesce_tail(cfg, tree_id, callback, out, born)
        new_trees[tree_id] = out
    return Forest(forest.coarse, cfg, forest.rank, forest.rank_count, new_trees, stats)


def element_count(forest: Forest) -> int:
    return sum(len(elems) for elems in forest.trees.values())


def iterate(forest: Forest, visitor: Callable[[int, TetId], None]) -> None:
    """Visit every element in global (tree id, curve) order."""
    for tree_id in sorted(forest.trees):
        for el in forest.trees[tree_id]:
            visitor(tree_id, el)


def elements(forest: Forest) -> Iterable[tuple[int, TetId]]:
    """Iterate (tree id, element) pairs in global order."""
    for tree_id in sorted(forest.trees):
        for el in forest.trees[tree_id]:
            yield tree_id, el


def validate_forest(forest: Forest) -> list[str]:
    """Violation messages for order, leaf property and element validity.

    Sortedness plus the adjacent-pair ancestor check imply the full leaf
    property: in curve order, a stored ancestor would be followed
    immediately by one of its descendants.
    """
    cfg = forest.config
    problems: list[str] = []
    extent = cfg.root_extent
    for tree_id in sorted(forest.trees):
        prev = None  # (code, level, element, position) of the last valid element
        for pos, el in enumerate(forest.trees[tree_id]):
            where = f"tree {tree_id} position {pos}"
            if not 0 <= el.level <= cfg.max_level:
                problems.append(f"{where}: level {el.level} out of range")
                continue
            h = 1 << (cfg.max_level - el.level)
            coords = (el.x, el.y, el.z)[: cfg.dim]
            if any(c % h or not 0 <= c < extent for c in coords):
                problems.append(f"{where}: anchor {coords} not aligned to level {el.level}")
            if not is_inside_root(cfg, el):
                problems.append(f"{where}: element outside the root simplex")
                continue
            code = sfc.tm_index(cfg, el)
            if not sfc.is_valid_code(cfg, code):
                problems.append(f"{where}: curve code is inconsistent")
            if prev is not None:
                if (code.code, el.level) <= (prev[0], prev[1]):
                    problems.append(
                        f"tree {tree_id} positions {prev[3]},{pos}: not strictly increasing"
                    )
                if is_descendant(cfg, el, prev[2]):
                    problems.append(f"tree {tree_id} positions {prev[3]},{pos}: stored ancestor")
            prev = (code.code, el.level, el, pos)
    return problems


def write_coarse_mesh(target: str | TextIO, coarse: CoarseMesh) -> None:
    """Text form: one header line ``dim tree_count``."""
    if isinstance(target, str):
        with open(target, "w") as fh:
            write_coarse_mesh(fh, coarse)
        return
    target.write(f"{coarse.dim} {coarse.tree_count}\n")


def read_coarse_mesh(source: str | TextIO) -> CoarseMesh:
    if isinstance(source, str):
        with open(source) as fh:
            return read_coarse_mesh(fh)
    fields = source.readline().split()
    if len(fields) != 2:
        raise ValueError("coarse mesh header must be 'dim tree_count'")
    return CoarseMesh(int(fields[0]), int(fields[1]))


def write_forest(target: str | TextIO, forest: Forest) -> None:
    """Dump: one line ``tree_id x y [z] level type`` per element, curve order."""
    if isinstance(target, str):
        with open(target, "w") as fh:
            write_forest(fh, forest)
        return
    dim = forest.config.dim
    for tree_id in sorted(forest.trees):
        for el in forest.trees[tree_id]:
            coords = f"{el.x} {el.y}" if dim == 2 else f"{el.x} {el.y} {el.z}"
            target.write(f"{tree_id} {coords} {el.level} {el.type}\n")


def read_forest(source: str | TextIO, config: MeshConfig | None = None) -> Forest:
    """Rebuild a single-rank forest view from a dump.

    The dimension is inferred from the column count (5 in 2D, 6 in 3D)
    unless a config is given; the tree count is taken as the largest tree
    id seen plus one.
    """
    if isinstance(source, str):
        with open(source) as fh:
            return read_forest(fh, config)
    trees: dict[int, list[TetId]] = {}
    dim = config.dim if config is not None else None
    for line_no, line in enumerate(source, 1):
        fields = line.split()
        if not fields:
            continue
        if len(fields) not in (5, 6):
            raise ValueError(f"line {line_no}: expected 5 or 6 columns, got {len(fields)}")
        line_dim = len(fields) - 3
        if dim is None:
            dim = line_dim
        elif dim != line_dim:
            raise ValueError(f"line {line_no}: mixed dimensions in dump")
        values = [int(v) for v in fields]
        tree_id = values[0]
        if dim == 2:
            el = TetId(values[1], values[2], 0, values[3], values[4])
        else:
            el = TetId(values[1], values[2], values[3], values[4], values[5])
        trees.setdefault(tree_id, []).append(el)
    if dim is None:
        raise ValueError("empty forest dump; pass a config to fix the dimension")
    cfg = config if config is not None else MeshConfig(dim)
    tree_count = max(trees) + 1 if trees else 1
    return Forest(CoarseMesh(dim, tree_count), cfg, 0, 1, trees)
