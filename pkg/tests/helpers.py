"""Shared test utilities: element enumeration and oracle-side indexing."""

from tetmorton import TetId
from tetmorton.oracle import bey_children, root_simplex, tet_id_of
from tetmorton.sfc import tet_from_linear_id


def level_elements(cfg, level):
    """All elements of one level, in curve order."""
    return [tet_from_linear_id(cfg, i, level) for i in range(1 << (cfg.dim * level))]


def all_elements(cfg, max_level):
    """All elements of levels 0..max_level, level by level in curve order."""
    out = []
    for level in range(max_level + 1):
        out.extend(level_elements(cfg, level))
    return out


def oracle_geometry(cfg, depth):
    """Map TetId -> explicit simplex for all levels up to ``depth``,
    built purely from midpoint refinement and classification."""
    table = {}
    stack = [root_simplex(cfg)]
    while stack:
        g = stack.pop()
        table[tet_id_of(cfg, g)] = g
        if g.level < depth:
            stack.extend(bey_children(g))
    return table


def oracle_descendant_sets(cfg, depth):
    """Map TetId -> set of all its refinement descendants up to ``depth``,
    derived from the recursive subdivision tree alone."""
    sets: dict[TetId, set[TetId]] = {}

    def descend(g):
        tid = tet_id_of(cfg, g)
        mine = {tid}
        if g.level < depth:
            for kid in bey_children(g):
                mine |= descend(kid)
        sets[tid] = mine
        return mine

    descend(root_simplex(cfg))
    return sets
