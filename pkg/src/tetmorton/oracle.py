"""Brute-force geometric ground truth for the test suite.

Everything here works on explicit integer vertex tuples and is
deliberately independent of the constant-time arithmetic in
:mod:`tetmorton.tet` and :mod:`tetmorton.sfc`: elements are refined by
literally computing edge midpoints, classified by matching their vertex
pattern against the cube tilings, and compared by exact integer
geometry.  Production code never imports this module.  Runtime is
exponential in the level by design.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, NamedTuple

from .tet import MeshConfig, TetId


class GeomSimplex(NamedTuple):
    """Explicit ordered vertex tuple of one element."""

    vertices: tuple[tuple[int, ...], ...]
    level: int


# Vertex corner numbers of the simplices tiling the unit square/cube.
# Corner k has coordinates (k & 1, k >> 1 & 1, k >> 2 & 1).
TILE_CORNERS = {
    2: ((0, 1, 3), (0, 2, 3)),
    3: ((0, 1, 5, 7), (0, 1, 3, 7), (0, 2, 3, 7), (0, 2, 6, 7), (0, 4, 6, 7), (0, 4, 5, 7)),
}


def _corner(dim: int, k: int) -> tuple[int, ...]:
    return tuple((k >> a) & 1 for a in range(dim))


def simplex_of_type(cfg: MeshConfig, simplex_type: int, anchor=None, level: int = 0) -> GeomSimplex:
    """Grid-aligned simplex of the given type at ``anchor`` (default origin)."""
    dim = cfg.dim
    if anchor is None:
        anchor = (0,) * dim
    h = 1 << (cfg.max_level - level)
    verts = tuple(
        tuple(anchor[a] + h * _corner(dim, k)[a] for a in range(dim))
        for k in TILE_CORNERS[dim][simplex_type]
    )
    return GeomSimplex(verts, level)


def root_simplex(cfg: MeshConfig) -> GeomSimplex:
    return simplex_of_type(cfg, 0)


def _mid(a, b):
    m = []
    for p, q in zip(a, b):
        s = p + q
        if s & 1:
            raise ValueError("midpoint is not an integer point; refine less deeply")
        m.append(s // 2)
    return tuple(m)


def bey_children(g: GeomSimplex) -> list[GeomSimplex]:
    """The 2**dim corner-numbered children of ``g``.

    Corners are cut off at the edge midpoints; in 3D the inner octahedron
    is split along the diagonal between the midpoints of edges 0-2 and
    1-3.
    """
    vs = g.vertices
    lv = g.level + 1
    if len(vs) == 3:
        x0, x1, x2 = vs
        m01 = _mid(x0, x1)
        m02 = _mid(x0, x2)
        m12 = _mid(x1, x2)
        return [
            GeomSimplex((x0, m01, m02), lv),
            GeomSimplex((m01, x1, m12), lv),
            GeomSimplex((m02, m12, x2), lv),
            GeomSimplex((m01, m02, m12), lv),
        ]
    x0, x1, x2, x3 = vs
    m01 = _mid(x0, x1)
    m02 = _mid(x0, x2)
    m03 = _mid(x0, x3)
    m12 = _mid(x1, x2)
    m13 = _mid(x1, x3)
    m23 = _mid(x2, x3)
    return [
        GeomSimplex((x0, m01, m02, m03), lv),
        GeomSimplex((m01, x1, m12, m13), lv),
        GeomSimplex((m02, m12, x2, m23), lv),
        GeomSimplex((m03, m13, m23, x3), lv),
        GeomSimplex((m01, m02, m03, m13), lv),
        GeomSimplex((m01, m02, m12, m13), lv),
        GeomSimplex((m02, m03, m13, m23), lv),
        GeomSimplex((m02, m12, m13, m23), lv),
    ]


def classify(cfg: MeshConfig, g: GeomSimplex):
    """Match ``g`` against the grid tilings: ``(anchor, type)`` or None.

    The vertex order must agree with the tiling pattern, so a valid
    result pins down the element completely.
    """
    dim = cfg.dim
    anchor = g.vertices[0]
    h = 1 << (cfg.max_level - g.level)
    for b in range(cfg.num_types):
        expect = tuple(
            tuple(anchor[a] + h * _corner(dim, k)[a] for a in range(dim))
            for k in TILE_CORNERS[dim][b]
        )
        if expect == g.vertices:
            return anchor, b
    return None


def tet_id_of(cfg: MeshConfig, g: GeomSimplex) -> TetId:
    """TetId of a grid-aligned simplex; raises when not aligned."""
    hit = classify(cfg, g)
    if hit is None:
        raise ValueError("simplex is not grid-aligned")
    anchor, b = hit
    z = anchor[2] if cfg.dim == 3 else 0
    return TetId(anchor[0], anchor[1], z, g.level, b)


def walk_refinement(cfg: MeshConfig, depth: int) -> Iterator[tuple[GeomSimplex, GeomSimplex | None]]:
    """Yield (simplex, parent) pairs of the uniform refinement of the root
    down to ``depth``, depth-first in corner-child order."""
    stack = [(root_simplex(cfg), None)]
    while stack:
        g, par = stack.pop()
        yield g, par
        if g.level < depth:
            stack.extend((kid, g) for kid in reversed(bey_children(g)))


def refine_uniform(cfg: MeshConfig, level: int) -> list[GeomSimplex]:
    """All simplices of the uniform level ``level`` refinement of the root."""
    current = [root_simplex(cfg)]
    for _ in range(level):
        current = [kid for g in current for kid in bey_children(g)]
    return current


def uniform_census(cfg: MeshConfig, level: int) -> dict[int, int]:
    """Per-type counts of the uniform level ``level`` refinement."""
    counts: Counter[int] = Counter()
    for g in refine_uniform(cfg, level):
        hit = classify(cfg, g)
        assert hit is not None
        counts[hit[1]] += 1
    return dict(counts)


def _cid_of(cfg: MeshConfig, child_anchor, parent_anchor, level: int) -> int:
    h = 1 << (cfg.max_level - level)
    c = 0
    for a in range(cfg.dim):
        delta = child_anchor[a] - parent_anchor[a]
        if delta == h:
            c |= 1 << a
        elif delta != 0:
            raise ValueError("child anchor is not cube-aligned with its parent")
    return c


def derive_tables(dim: int) -> dict:
    """Regenerate every constant table from vertex geometry alone.

    Children are produced by midpoint refinement and classified against
    the tilings; curve ranks come from sorting siblings by their
    (cube-id, type) digit pair; face rules come from matching shared
    faces in a uniform refinement.  The result mirrors the structures in
    :mod:`tetmorton.tables` for bit-for-bit comparison.
    """
    cfg = MeshConfig(dim, 6)
    nch = 1 << dim
    ntypes = cfg.num_types

    child_type_rows = []
    local_rows = []
    cube_rows = []
    type_rows = []
    local_from_ct: dict[tuple[int, int], int] = {}
    parent_from_ct: dict[tuple[int, int], int] = {}
    for b in range(ntypes):
        par = simplex_of_type(cfg, b)
        kids = bey_children(par)
        info = []
        for kid in kids:
            hit = classify(cfg, kid)
            assert hit is not None, "refinement left the grid"
            anchor, kt = hit
            info.append((_cid_of(cfg, anchor, par.vertices[0], 1), kt))
        child_type_rows.append(tuple(kt for _, kt in info))
        order = sorted(range(nch), key=lambda i: info[i])
        sigma = [0] * nch
        for rank, i in enumerate(order):
            sigma[i] = rank
        local_rows.append(tuple(sigma))
        cube_rows.append(tuple(info[i][0] for i in order))
        type_rows.append(tuple(info[i][1] for i in order))
        for i, key in enumerate(info):
            for store, value in ((local_from_ct, sigma[i]), (parent_from_ct, b)):
                if key in store and store[key] != value:
                    raise AssertionError(f"(cube-id, type) pair {key} is ambiguous")
                store[key] = value

    assert len(parent_from_ct) == nch * ntypes, "some (cube-id, type) pair never occurs"
    parent_rows = tuple(
        tuple(parent_from_ct[(c, b)] for b in range(ntypes)) for c in range(nch)
    )
    local_ct_rows = tuple(
        tuple(local_from_ct[(c, b)] for c in range(nch)) for b in range(ntypes)
    )

    face_rules = _derive_face_rules(cfg)

    return {
        "child_type": tuple(child_type_rows),
        "local_index": tuple(local_rows),
        "parent_type": parent_rows,
        "local_from_cube_type": local_ct_rows,
        "cube_from_parent_local": tuple(cube_rows),
        "type_from_parent_local": tuple(type_rows),
        "face_neighbor": face_rules,
    }


def _derive_face_rules(cfg: MeshConfig):
    """Face-neighbor rules read off a uniform refinement.

    Two same-level elements are neighbors across the face they share; the
    rule (neighbor type, anchor offset, dual face) depends only on the
    element type, which the consistency checks below confirm.
    """
    from .tables import FaceNeighborRule

    dim = cfg.dim
    level = 3
    elems = refine_uniform(cfg, level)
    ids = [classify(cfg, g) for g in elems]
    face_map: dict[frozenset, list[tuple[int, int]]] = {}
    for idx, g in enumerate(elems):
        for f in range(dim + 1):
            key = frozenset(v for i, v in enumerate(g.vertices) if i != f)
            face_map.setdefault(key, []).append((idx, f))

    h = 1 << (cfg.max_level - level)
    rules: dict[tuple[int, int], FaceNeighborRule] = {}
    for idx, g in enumerate(elems):
        anchor, b = ids[idx]
        for f in range(dim + 1):
            key = frozenset(v for i, v in enumerate(g.vertices) if i != f)
            entries = face_map[key]
            if len(entries) == 1:
                continue  # root boundary
            (other, dual) = next(e for e in entries if e[0] != idx)
            n_anchor, n_type = ids[other]
            axis = None
            sign = 0
            for a in range(dim):
                delta = n_anchor[a] - anchor[a]
                if delta == 0:
                    continue
                assert axis is None and delta in (h, -h), "offset is not one step on one axis"
                axis = a
                sign = 1 if delta > 0 else -1
            rule = FaceNeighborRule(n_type, axis, sign, dual)
            prev = rules.setdefault((b, f), rule)
            assert prev == rule, f"face rule for type {b} face {f} is not uniform"
    assert len(rules) == cfg.num_types * (dim + 1), "some (type, face) pair has no interior sample"
    return tuple(
        tuple(rules[(b, f)] for f in range(dim + 1)) for b in range(cfg.num_types)
    )


def _orient(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _det3(u, v, w):
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def volume_scaled(g: GeomSimplex) -> int:
    """Simplex volume times dim! (signed), exact."""
    vs = g.vertices
    if len(vs) == 3:
        return _orient(vs[0], vs[1], vs[2])
    u = tuple(a - b for a, b in zip(vs[1], vs[0]))
    v = tuple(a - b for a, b in zip(vs[2], vs[0]))
    w = tuple(a - b for a, b in zip(vs[3], vs[0]))
    return _det3(u, v, w)


def _point_in_simplex(p, vs) -> bool:
    if len(vs) == 3:
        for i in range(3):
            q, r = vs[(i + 1) % 3], vs[(i + 2) % 3]
            side = _orient(q, r, p)
            ref = _orient(q, r, vs[i])
            if ref > 0 and side < 0 or ref < 0 and side > 0:
                return False
        return True
    for i in range(4):
        face = [vs[j] for j in range(4) if j != i]
        u = tuple(a - b for a, b in zip(face[1], face[0]))
        v = tuple(a - b for a, b in zip(face[2], face[0]))
        side = _det3(u, v, tuple(a - b for a, b in zip(p, face[0])))
        ref = _det3(u, v, tuple(a - b for a, b in zip(vs[i], face[0])))
        if ref > 0 and side < 0 or ref < 0 and side > 0:
            return False
    return True


def containment(a: GeomSimplex, b: GeomSimplex) -> bool:
    """True when simplex ``a`` lies (weakly) inside simplex ``b``;
    exact integer arithmetic throughout."""
    return all(_point_in_simplex(p, b.vertices) for p in a.vertices)


def fractal_census(cfg: MeshConfig, base_level: int, extra: int, refine_types=(0, 3)) -> int:
    """Leaf count of the recursive type-selective refinement.

    Starting from the uniform ``base_level`` refinement of one root, an
    element is refined while its type is in ``refine_types`` and its
    children would not exceed ``base_level + extra``.
    """
    top = base_level + extra
    count = 0
    stack = refine_uniform(cfg, base_level)
    while stack:
        g = stack.pop()
        hit = classify(cfg, g)
        assert hit is not None
        if hit[1] in refine_types and g.level < top:
            stack.extend(bey_children(g))
        else:
            count += 1
    return count
