"""Self-checks of the geometric reference implementation."""

from fractions import Fraction

import pytest

from tetmorton.oracle import (
    GeomSimplex,
    bey_children,
    classify,
    containment,
    refine_uniform,
    root_simplex,
    simplex_of_type,
    tet_id_of,
    uniform_census,
    volume_scaled,
)

# Regression values computed by this module; see also the equal-ratio
# checks in test_sfc.py.
CENSUS_3D = {
    1: {0: 4, 1: 1, 2: 1, 4: 1, 5: 1},
    2: {0: 20, 1: 10, 2: 10, 3: 4, 4: 10, 5: 10},
    3: {0: 120, 1: 84, 2: 84, 3: 56, 4: 84, 5: 84},
    4: {0: 816, 1: 680, 2: 680, 3: 560, 4: 680, 5: 680},
}
CENSUS_2D = {
    1: {0: 3, 1: 1},
    2: {0: 10, 1: 6},
    3: {0: 36, 1: 28},
    4: {0: 136, 1: 120},
}


def test_child_zero_keeps_anchor_vertex(cfg3):
    g = root_simplex(cfg3)
    kids = bey_children(g)
    assert kids[0].vertices[0] == g.vertices[0]


def test_3d_children_have_equal_volume(cfg3):
    g = root_simplex(cfg3)
    vol = volume_scaled(g)
    kids = bey_children(g)
    assert all(abs(volume_scaled(k)) == abs(vol) // 8 for k in kids)


def test_2d_children_tile_parent(cfg2):
    g = root_simplex(cfg2)
    kids = bey_children(g)
    total = sum(abs(volume_scaled(k)) for k in kids)
    assert total == abs(volume_scaled(g))
    # pairwise interior-disjoint: no child's centroid (scaled by 3) is
    # strictly inside a sibling
    for i, a in enumerate(kids):
        centroid3 = tuple(sum(v[axis] for v in a.vertices) for axis in range(2))
        scaled = GeomSimplex(
            tuple(tuple(3 * c for c in v) for v in a.vertices), a.level
        )
        for j, b in enumerate(kids):
            if i == j:
                continue
            big = GeomSimplex(tuple(tuple(3 * c for c in v) for v in b.vertices), b.level)
            assert not containment(GeomSimplex((centroid3,) * 3, a.level), big)


def test_classify_root(cfg3, cfg2):
    assert classify(cfg3, root_simplex(cfg3)) == ((0, 0, 0), 0)
    assert classify(cfg2, root_simplex(cfg2)) == ((0, 0), 0)


def test_classify_child7_of_root_is_type1(cfg3):
    kids = bey_children(root_simplex(cfg3))
    anchor, b = classify(cfg3, kids[7])
    assert b == 1


def test_classify_rejects_sheared_simplex(cfg2):
    ext = cfg2.root_extent
    sheared = GeomSimplex(((0, 0), (ext, ext // 2), (ext, ext)), 0)
    assert classify(cfg2, sheared) is None
    with pytest.raises(ValueError):
        tet_id_of(cfg2, sheared)


def test_all_types_classify_back(cfg3):
    for b in range(6):
        g = simplex_of_type(cfg3, b, level=1)
        assert classify(cfg3, g) == ((0, 0, 0), b)


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_census_3d(cfg3, level):
    census = uniform_census(cfg3, level)
    assert census == CENSUS_3D[level]
    assert sum(census.values()) == 8**level


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_census_2d(cfg2, level):
    census = uniform_census(cfg2, level)
    assert census == CENSUS_2D[level]
    assert sum(census.values()) == 4**level


def test_containment_of_children(cfg3):
    g = root_simplex(cfg3)
    for kid in bey_children(g):
        assert containment(kid, g)
        assert not containment(g, kid)


def test_refinement_covers_root_exactly(cfg2):
    level = 3
    total = Fraction(0)
    for g in refine_uniform(cfg2, level):
        total += Fraction(abs(volume_scaled(g)))
    assert total == abs(volume_scaled(root_simplex(cfg2)))
