"""Constant lookup tables for type arithmetic on simplicial grids.

A uniform subdivision of the unit square tiles each grid square with two
triangle shapes; a subdivision of the unit cube tiles each grid cube with
six tetrahedron shapes.  The *type* of an element is the index of the
shape it is a scaled copy of.  Every table below is keyed by the spatial
dimension (2 or 3) and transcribed once as immutable tuples; the
geometric derivation in :mod:`tetmorton.oracle` regenerates all of them
from explicit vertex arithmetic, and the test suite fails on any
mismatch.

Red refinement splits an element into ``2**dim`` children.  Two child
numberings are in play:

* the *corner* (Bey) numbering used by the subdivision rule itself, and
* the *curve* numbering, i.e. the rank of a child when its siblings are
  sorted along the space-filling curve.

``LOCAL_INDEX`` translates the first into the second.
"""

from typing import NamedTuple

SimplexType = int   # 0..1 in 2D, 0..5 in 3D
CubeId = int        # corner number of an element's grid cube, 0..2**dim-1
LocalIndex = int    # curve rank of a child among its siblings, 0..2**dim-1

NUM_TYPES = {2: 2, 3: 6}
NUM_CHILDREN = {2: 4, 3: 8}

# Types of the 2**dim Bey children of a type-b parent, indexed [b][child].
# The corner children 0..dim keep the parent type.
CHILD_TYPE = {
    2: (
        (0, 0, 0, 1),
        (1, 1, 1, 0),
    ),
    3: (
        (0, 0, 0, 0, 4, 5, 2, 1),
        (1, 1, 1, 1, 3, 2, 5, 0),
        (2, 2, 2, 2, 0, 1, 4, 3),
        (3, 3, 3, 3, 5, 4, 1, 2),
        (4, 4, 4, 4, 2, 3, 0, 5),
        (5, 5, 5, 5, 1, 0, 3, 4),
    ),
}

# Curve rank sigma_b(i) of Bey child i for a type-b parent, indexed [b][i].
# Each row is a permutation of 0..2**dim-1.
LOCAL_INDEX = {
    2: (
        (0, 1, 3, 2),
        (0, 2, 3, 1),
    ),
    3: (
        (0, 1, 4, 7, 2, 3, 6, 5),
        (0, 1, 5, 7, 3, 2, 6, 4),
        (0, 3, 4, 7, 1, 2, 6, 5),
        (0, 1, 6, 7, 3, 2, 4, 5),
        (0, 3, 5, 7, 1, 2, 4, 6),
        (0, 3, 6, 7, 2, 1, 4, 5),
    ),
}


def _invert(perm):
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return tuple(inv)


# Bey child index for a given curve rank: the row-wise inverse of
# LOCAL_INDEX, indexed [b][local].
BEY_CHILD = {d: tuple(_invert(row) for row in rows) for d, rows in LOCAL_INDEX.items()}

# Type of the parent from an element's cube-id and type, indexed [cube_id][b].
PARENT_TYPE = {
    2: (
        (0, 1),
        (0, 0),
        (1, 1),
        (0, 1),
    ),
    3: (
        (0, 1, 2, 3, 4, 5),
        (0, 1, 1, 1, 0, 0),
        (2, 2, 2, 3, 3, 3),
        (1, 1, 2, 2, 2, 1),
        (5, 5, 4, 4, 4, 5),
        (0, 0, 0, 5, 5, 5),
        (4, 3, 3, 3, 4, 4),
        (0, 1, 2, 3, 4, 5),
    ),
}

# Curve rank of an element within its parent from the element's own type
# and cube-id, indexed [b][cube_id].
LOCAL_FROM_CUBE_TYPE = {
    2: (
        (0, 1, 1, 3),
        (0, 2, 2, 3),
    ),
    3: (
        (0, 1, 1, 4, 1, 4, 4, 7),
        (0, 1, 2, 5, 2, 5, 4, 7),
        (0, 2, 3, 4, 1, 6, 5, 7),
        (0, 3, 1, 5, 2, 4, 6, 7),
        (0, 2, 2, 6, 3, 5, 5, 7),
        (0, 3, 3, 6, 3, 6, 6, 7),
    ),
}

# Cube-id of the curve-rank-j child of a type-b parent, indexed [b][j].
CUBE_FROM_PARENT_LOCAL = {
    2: (
        (0, 1, 1, 3),
        (0, 2, 2, 3),
    ),
    3: (
        (0, 1, 1, 1, 5, 5, 5, 7),
        (0, 1, 1, 1, 3, 3, 3, 7),
        (0, 2, 2, 2, 3, 3, 3, 7),
        (0, 2, 2, 2, 6, 6, 6, 7),
        (0, 4, 4, 4, 6, 6, 6, 7),
        (0, 4, 4, 4, 5, 5, 5, 7),
    ),
}

# Type of the curve-rank-j child of a type-b parent, indexed [b][j].
TYPE_FROM_PARENT_LOCAL = {
    2: (
        (0, 0, 1, 0),
        (1, 0, 1, 1),
    ),
    3: (
        (0, 0, 4, 5, 0, 1, 2, 0),
        (1, 1, 2, 3, 0, 1, 5, 1),
        (2, 0, 1, 2, 2, 3, 4, 2),
        (3, 3, 4, 5, 1, 2, 3, 3),
        (4, 2, 3, 4, 0, 4, 5, 4),
        (5, 0, 1, 5, 3, 4, 5, 5),
    ),
}


class FaceNeighborRule(NamedTuple):
    """One entry of the same-level face-neighbor tables.

    ``axis`` is the coordinate axis of the anchor offset (None when the
    neighbor shares the anchor cube), ``sign`` the offset direction in
    units of the element edge length, and ``dual_face`` the face of the
    neighbor across which the original element is seen.
    """

    type: SimplexType
    axis: int | None
    sign: int
    dual_face: int


_FNR = FaceNeighborRule

# Same-level neighbor across face f of a type-b element, indexed [b][f].
# At most one coordinate of the anchor changes, by one element width.
FACE_NEIGHBOR = {
    2: (
        (_FNR(1, 0, +1, 2), _FNR(1, None, 0, 1), _FNR(1, 1, -1, 0)),
        (_FNR(0, 1, +1, 2), _FNR(0, None, 0, 1), _FNR(0, 0, -1, 0)),
    ),
    3: (
        (_FNR(4, 0, +1, 3), _FNR(5, None, 0, 1), _FNR(1, None, 0, 2), _FNR(2, 1, -1, 0)),
        (_FNR(3, 0, +1, 3), _FNR(2, None, 0, 1), _FNR(0, None, 0, 2), _FNR(5, 2, -1, 0)),
        (_FNR(0, 1, +1, 3), _FNR(1, None, 0, 1), _FNR(3, None, 0, 2), _FNR(4, 2, -1, 0)),
        (_FNR(5, 1, +1, 3), _FNR(4, None, 0, 1), _FNR(2, None, 0, 2), _FNR(1, 0, -1, 0)),
        (_FNR(2, 2, +1, 3), _FNR(3, None, 0, 1), _FNR(5, None, 0, 2), _FNR(0, 0, -1, 0)),
        (_FNR(1, 2, +1, 3), _FNR(0, None, 0, 1), _FNR(4, None, 0, 2), _FNR(3, 1, -1, 0)),
    ),
}

# Axis roles (i, j, k) used by the ancestry test, per container type.
CONTAINMENT_AXES = {
    2: ((0, 1), (1, 0)),
    3: ((0, 1, 2), (0, 2, 1), (1, 2, 0), (1, 0, 2), (2, 0, 1), (2, 1, 0)),
}


def _check_dim(dim: int) -> None:
    if dim not in (2, 3):
        raise ValueError(f"dimension must be 2 or 3, got {dim}")


def _check_range(name: str, value: int, bound: int) -> None:
    if not 0 <= value < bound:
        raise ValueError(f"{name} must be in 0..{bound - 1}, got {value}")


def child_type(dim: int, parent_type: SimplexType, bey_child: int) -> SimplexType:
    """Type of the Bey child ``bey_child`` of a type ``parent_type`` element."""
    _check_dim(dim)
    _check_range("type", parent_type, NUM_TYPES[dim])
    _check_range("child index", bey_child, NUM_CHILDREN[dim])
    return CHILD_TYPE[dim][parent_type][bey_child]


def local_index(dim: int, parent_type: SimplexType, bey_child: int) -> LocalIndex:
    """Curve rank of Bey child ``bey_child`` among the siblings."""
    _check_dim(dim)
    _check_range("type", parent_type, NUM_TYPES[dim])
    _check_range("child index", bey_child, NUM_CHILDREN[dim])
    return LOCAL_INDEX[dim][parent_type][bey_child]


def bey_child_from_local(dim: int, parent_type: SimplexType, local: LocalIndex) -> int:
    """Bey child index with curve rank ``local``; inverse of :func:`local_index`."""
    _check_dim(dim)
    _check_range("type", parent_type, NUM_TYPES[dim])
    _check_range("local index", local, NUM_CHILDREN[dim])
    return BEY_CHILD[dim][parent_type][local]


def parent_type(dim: int, cube_id: CubeId, child_type: SimplexType) -> SimplexType:
    """Type of the parent of an element with the given cube-id and type."""
    _check_dim(dim)
    _check_range("cube-id", cube_id, NUM_CHILDREN[dim])
    _check_range("type", child_type, NUM_TYPES[dim])
    return PARENT_TYPE[dim][cube_id][child_type]


def local_index_from_cid_type(dim: int, cube_id: CubeId, type: SimplexType) -> LocalIndex:
    """Curve rank of an element within its parent, from cube-id and type."""
    _check_dim(dim)
    _check_range("cube-id", cube_id, NUM_CHILDREN[dim])
    _check_range("type", type, NUM_TYPES[dim])
    return LOCAL_FROM_CUBE_TYPE[dim][type][cube_id]


def cid_from_parenttype_local(dim: int, parent_type: SimplexType, local: LocalIndex) -> CubeId:
    """Cube-id of the curve-rank ``local`` child of a type ``parent_type`` parent."""
    _check_dim(dim)
    _check_range("type", parent_type, NUM_TYPES[dim])
    _check_range("local index", local, NUM_CHILDREN[dim])
    return CUBE_FROM_PARENT_LOCAL[dim][parent_type][local]


def type_from_parenttype_local(dim: int, parent_type: SimplexType, local: LocalIndex) -> SimplexType:
    """Type of the curve-rank ``local`` child of a type ``parent_type`` parent."""
    _check_dim(dim)
    _check_range("type", parent_type, NUM_TYPES[dim])
    _check_range("local index", local, NUM_CHILDREN[dim])
    return TYPE_FROM_PARENT_LOCAL[dim][parent_type][local]


def face_neighbor_data(dim: int, type: SimplexType, face: int) -> FaceNeighborRule:
    """Neighbor rule (type, anchor offset, dual face) across face ``face``."""
    _check_dim(dim)
    _check_range("type", type, NUM_TYPES[dim])
    _check_range("face", face, dim + 1)
    return FACE_NEIGHBOR[dim][type][face]
