"""Curve-ordered adaptive refinement for triangular and tetrahedral meshes.

Elements of a red-refined simplicial mesh are identified by anchor
coordinates, level and type; parents, children, face-neighbors and
curve successors are computed in level-independent time, and a forest
layer provides uniform construction and callback-driven adaptation.
"""

from .forest import (
    AdaptStats,
    CoarseMesh,
    Forest,
    adapt,
    element_count,
    elements,
    family_check,
    iterate,
    new_forest,
    read_coarse_mesh,
    read_forest,
    validate_forest,
    write_coarse_mesh,
    write_forest,
)
from .sfc import (
    Cube6D,
    LinearIndex,
    TmCode,
    compare,
    format_tm_code,
    is_valid_code,
    linear_id,
    phi,
    predecessor,
    successor,
    tet_from_linear_id,
    tm_index,
)
from .tet import (
    LEVEL_CAP,
    MeshConfig,
    TetId,
    child,
    coordinates,
    cube_id,
    deserialize,
    face_neighbor,
    is_descendant,
    is_inside_root,
    parent,
    root,
    serialize,
    sibling,
    tm_child,
    tm_position,
)
from .vtkio import write_vtk

__version__ = "0.1.0"

__all__ = [
    "AdaptStats",
    "CoarseMesh",
    "Cube6D",
    "Forest",
    "LEVEL_CAP",
    "LinearIndex",
    "MeshConfig",
    "TetId",
    "TmCode",
    "adapt",
    "child",
    "compare",
    "coordinates",
    "cube_id",
    "deserialize",
    "element_count",
    "elements",
    "face_neighbor",
    "family_check",
    "format_tm_code",
    "is_descendant",
    "is_inside_root",
    "is_valid_code",
    "iterate",
    "linear_id",
    "new_forest",
    "parent",
    "phi",
    "predecessor",
    "read_coarse_mesh",
    "read_forest",
    "root",
    "serialize",
    "sibling",
    "successor",
    "tet_from_linear_id",
    "tm_child",
    "tm_index",
    "tm_position",
    "validate_forest",
    "write_coarse_mesh",
    "write_forest",
    "write_vtk",
]
