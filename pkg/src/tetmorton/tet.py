"""Element identifiers and constant-time mesh arithmetic.

An element of a red-refined simplicial mesh is identified by the integer
coordinates of its anchor vertex, its refinement level and its type
(:class:`TetId`).  All coordinates live on the grid ``[0, 2**max_level)``
so that every vertex of every element up to the maximum level is an
integer point.  Apart from the two linear-index conversions in
:mod:`tetmorton.sfc`, every operation here runs in time independent of
the level.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import NamedTuple

from . import tables

# Level caps keep the interleaved curve code of an element within 128 bits
# (2 * max_level digits of `dim` bits each).
LEVEL_CAP = {2: 30, 3: 21}


@dataclass(frozen=True, slots=True)
class MeshConfig:
    """Dimension and maximum refinement level of a mesh hierarchy."""

    dim: int
    max_level: int = 0  # 0 selects the per-dimension default

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError(f"dimension must be 2 or 3, got {self.dim}")
        if self.max_level == 0:
            object.__setattr__(self, "max_level", LEVEL_CAP[self.dim])
        if not 1 <= self.max_level <= LEVEL_CAP[self.dim]:
            raise ValueError(
                f"max_level must be in 1..{LEVEL_CAP[self.dim]} for dim {self.dim}, "
                f"got {self.max_level}"
            )

    @property
    def num_children(self) -> int:
        return 1 << self.dim

    @property
    def num_types(self) -> int:
        return tables.NUM_TYPES[self.dim]

    @property
    def num_faces(self) -> int:
        return self.dim + 1

    @property
    def root_extent(self) -> int:
        """Edge length of the root grid, ``2**max_level``."""
        return 1 << self.max_level


class TetId(NamedTuple):
    """Anchor coordinates, level and type of a mesh element.

    ``z`` stays 0 in 2D.  Elements outside the root simplex are
    representable (face-neighbor computations produce them transiently,
    possibly with negative coordinates); :func:`is_inside_root` decides
    validity.
    """

    x: int
    y: int
    z: int
    level: int
    type: int


def root(cfg: MeshConfig) -> TetId:
    return TetId(0, 0, 0, 0, 0)


def coordinates(cfg: MeshConfig, t: TetId):
    """Vertices of ``t`` as a tuple of ``dim + 1`` coordinate tuples.

    Vertex 0 is the anchor; the last vertex is always the anchor shifted
    by the element width along every axis.
    """
    h = 1 << (cfg.max_level - t.level)
    if cfg.dim == 2:
        x, y = t.x, t.y
        v1 = (x + h, y) if t.type == 0 else (x, y + h)
        return ((x, y), v1, (x + h, y + h))
    x, y, z = t.x, t.y, t.z
    i = t.type // 2
    j = (i + 2) % 3 if t.type % 2 == 0 else (i + 1) % 3
    v1 = [x, y, z]
    v1[i] += h
    v2 = v1.copy()
    v2[j] += h
    return ((x, y, z), tuple(v1), tuple(v2), (x + h, y + h, z + h))


def cube_id(cfg: MeshConfig, t: TetId, level: int) -> int:
    """Corner number of the level ``level`` ancestor cube within its parent cube."""
    if not 1 <= level <= t.level:
        raise ValueError(f"level must be in 1..{t.level}, got {level}")
    h = 1 << (cfg.max_level - level)
    c = 0
    if t.x & h:
        c |= 1
    if t.y & h:
        c |= 2
    if t.z & h:
        c |= 4
    return c


def parent(cfg: MeshConfig, t: TetId) -> TetId:
    if t.level == 0:
        raise ValueError("the root element has no parent")
    h = 1 << (cfg.max_level - t.level)
    c = cube_id(cfg, t, t.level)
    b = tables.PARENT_TYPE[cfg.dim][c][t.type]
    return TetId(t.x & ~h, t.y & ~h, t.z & ~h, t.level - 1, b)


# Vertex used as the midpoint partner for each Bey child's anchor.
_CHILD_VERTEX = {2: (0, 1, 2, 1), 3: (0, 1, 2, 3, 1, 1, 2, 2)}


def child(cfg: MeshConfig, t: TetId, bey_index: int) -> TetId:
    """Bey child ``bey_index`` of ``t``; anchor is a vertex midpoint of ``t``."""
    if not 0 <= bey_index < cfg.num_children:
        raise ValueError(f"child index must be in 0..{cfg.num_children - 1}, got {bey_index}")
    if t.level >= cfg.max_level:
        raise ValueError(f"cannot refine below max_level {cfg.max_level}")
    half = 1 << (cfg.max_level - t.level - 1)
    b = t.type
    x, y, z = t.x, t.y, t.z
    j = _CHILD_VERTEX[cfg.dim][bey_index]
    if cfg.dim == 2:
        if j == 1:
            if b == 0:
                x += half
            else:
                y += half
        elif j == 2:
            x += half
            y += half
    else:
        if j == 3:
            x += half
            y += half
            z += half
        elif j:
            shift = [0, 0, 0]
            ax = b // 2
            shift[ax] = half
            if j == 2:
                ax2 = (ax + 2) % 3 if b % 2 == 0 else (ax + 1) % 3
                shift[ax2] = half
            x += shift[0]
            y += shift[1]
            z += shift[2]
    return TetId(x, y, z, t.level + 1, tables.CHILD_TYPE[cfg.dim][b][bey_index])


def tm_child(cfg: MeshConfig, t: TetId, local: int) -> TetId:
    """Child with curve rank ``local``; ranks 0..2**dim-1 enumerate the
    children in strictly increasing curve order."""
    if not 0 <= local < cfg.num_children:
        raise ValueError(f"local index must be in 0..{cfg.num_children - 1}, got {local}")
    return child(cfg, t, tables.BEY_CHILD[cfg.dim][t.type][local])


def tm_position(cfg: MeshConfig, t: TetId) -> int:
    """Curve rank of ``t`` among its siblings (0 for the root)."""
    if t.level == 0:
        return 0
    c = cube_id(cfg, t, t.level)
    return tables.LOCAL_FROM_CUBE_TYPE[cfg.dim][t.type][c]


def sibling(cfg: MeshConfig, t: TetId, local: int) -> TetId:
    """Curve-rank ``local`` child of ``t``'s parent."""
    return tm_child(cfg, parent(cfg, t), local)


def face_neighbor(cfg: MeshConfig, t: TetId, face: int) -> tuple[TetId, int]:
    """Same-level neighbor across ``face`` and the neighbor's matching face.

    Never fails on boundary faces: the returned element may lie outside
    the root simplex (with a conceptually negative coordinate), which
    callers detect with :func:`is_inside_root`.
    """
    if not 0 <= face <= cfg.dim:
        raise ValueError(f"face must be in 0..{cfg.dim}, got {face}")
    rule = tables.FACE_NEIGHBOR[cfg.dim][t.type][face]
    x, y, z = t.x, t.y, t.z
    if rule.axis is not None:
        h = 1 << (cfg.max_level - t.level)
        if rule.axis == 0:
            x += rule.sign * h
        elif rule.axis == 1:
            y += rule.sign * h
        else:
            z += rule.sign * h
    return TetId(x, y, z, t.level, rule.type), rule.dual_face


def _outside_type_matrix(deltas):
    mat = []
    for tb in range(6):
        d = deltas if tb % 2 == 0 else tuple(-v for v in deltas)
        outside = {(tb + v) % 6 for v in d}
        mat.append(tuple(nb in outside for nb in range(6)))
    return tuple(mat)


# Types that lie outside a type-tb container when the anchor sits on one of
# the two diagonal boundary planes (j==k plane and k==i plane).
_OUT_ON_JK = _outside_type_matrix((1, 2, 3))
_OUT_ON_KI = _outside_type_matrix((-1, -2, -3))


def is_descendant(cfg: MeshConfig, n: TetId, t: TetId) -> bool:
    """True when ``n`` lies inside ``t`` (every element is its own descendant).

    Constant-time evaluation on anchor differences; differences are plain
    Python integers, so transient negative coordinates are handled
    exactly.
    """
    if n.level < t.level:
        return False
    if n.level == t.level:
        return n == t
    span = 1 << (cfg.max_level - t.level)
    if cfg.dim == 2:
        ai, aj = tables.CONTAINMENT_AXES[2][t.type]
        di = n[ai] - t[ai]
        dj = n[aj] - t[aj]
        if di >= span or dj < 0 or dj > di:
            return False
        return not (di == dj and n.type == 1 - t.type)
    ai, aj, ak = tables.CONTAINMENT_AXES[3][t.type]
    di = n[ai] - t[ai]
    dj = n[aj] - t[aj]
    dk = n[ak] - t[ak]
    if di >= span or dj < 0 or dk > di or dj > dk:
        return False
    tb = t.type
    nb = n.type
    if dj == dk and _OUT_ON_JK[tb][nb]:
        return False
    if dk == di and _OUT_ON_KI[tb][nb]:
        return False
    if dj == dk and di == dk and nb != tb:
        return False
    return True


def is_inside_root(cfg: MeshConfig, t: TetId) -> bool:
    """True when ``t`` descends from the root simplex."""
    return is_descendant(cfg, t, TetId(0, 0, 0, 0, 0))


_STRUCT = {2: struct.Struct("<IIBB"), 3: struct.Struct("<IIIBB")}


def serialize(cfg: MeshConfig, t: TetId) -> bytes:
    """Fixed binary form: little-endian 4-byte coordinates, level, type.

    Exactly 10 bytes in 2D and 14 in 3D.
    """
    if cfg.dim == 2:
        return _STRUCT[2].pack(t.x, t.y, t.level, t.type)
    return _STRUCT[3].pack(t.x, t.y, t.z, t.level, t.type)


def deserialize(cfg: MeshConfig, data: bytes) -> TetId:
    s = _STRUCT[cfg.dim]
    if len(data) != s.size:
        raise ValueError(f"expected {s.size} bytes for dim {cfg.dim}, got {len(data)}")
    if cfg.dim == 2:
        x, y, level, b = s.unpack(data)
        return TetId(x, y, 0, level, b)
    x, y, z, level, b = s.unpack(data)
    return TetId(x, y, z, level, b)
