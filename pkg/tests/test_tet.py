import pytest
from hypothesis import given, strategies as st

from tetmorton import (
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
from tetmorton.oracle import bey_children, root_simplex, tet_id_of
from tetmorton.tables import bey_child_from_local

from helpers import all_elements, level_elements, oracle_geometry

CFG2_FULL = MeshConfig(2)
CFG3_FULL = MeshConfig(3)


def walk(cfg, path):
    t = root(cfg)
    for j in path:
        t = tm_child(cfg, t, j)
    return t


paths2 = st.lists(st.integers(0, 3), max_size=CFG2_FULL.max_level)
paths3 = st.lists(st.integers(0, 7), max_size=CFG3_FULL.max_level)


class TestMeshConfig:
    def test_defaults(self):
        assert MeshConfig(2).max_level == 30
        assert MeshConfig(3).max_level == 21

    def test_bounds(self):
        with pytest.raises(ValueError):
            MeshConfig(4)
        with pytest.raises(ValueError):
            MeshConfig(3, 22)
        with pytest.raises(ValueError):
            MeshConfig(2, 31)
        with pytest.raises(ValueError):
            MeshConfig(2, -1)


class TestCoordinates:
    def test_root_3d(self, cfg3):
        ext = cfg3.root_extent
        assert coordinates(cfg3, root(cfg3)) == (
            (0, 0, 0),
            (ext, 0, 0),
            (ext, 0, ext),
            (ext, ext, ext),
        )

    def test_root_2d(self, cfg2):
        ext = cfg2.root_extent
        assert coordinates(cfg2, root(cfg2)) == ((0, 0), (ext, 0), (ext, ext))

    @given(paths3)
    def test_last_vertex_is_opposite_corner(self, path):
        t = walk(CFG3_FULL, path)
        verts = coordinates(CFG3_FULL, t)
        h = 1 << (CFG3_FULL.max_level - t.level)
        assert verts[3] == tuple(c + h for c in verts[0])

    def test_matches_oracle(self, cfg3, cfg2):
        for cfg, depth in ((cfg3, 3), (cfg2, 3)):
            for tid, g in oracle_geometry(cfg, depth).items():
                assert coordinates(cfg, tid) == g.vertices


class TestCubeId:
    def test_zero_anchor(self, cfg3):
        t = TetId(0, 0, 0, 3, 0)
        for q in (1, 2, 3):
            assert cube_id(cfg3, t, q) == 0

    def test_x_bit(self, cfg3):
        h = 1 << (cfg3.max_level - 1)
        assert cube_id(cfg3, TetId(h, 0, 0, 1, 0), 1) == 1

    def test_mixed_bits(self, cfg3):
        q2 = 1 << (cfg3.max_level - 2)
        assert cube_id(cfg3, TetId(0, q2, q2, 2, 0), 2) == 6

    def test_range(self, cfg3):
        t = TetId(0, 0, 0, 2, 0)
        with pytest.raises(ValueError):
            cube_id(cfg3, t, 0)
        with pytest.raises(ValueError):
            cube_id(cfg3, t, 3)


class TestParentChild:
    def test_child_zero_keeps_anchor(self, cfg3):
        for t in level_elements(cfg3, 2):
            assert child(cfg3, t, 0)[:3] == t[:3]

    def test_3d_root_child7(self, cfg3):
        half = 1 << (cfg3.max_level - 1)
        assert child(cfg3, root(cfg3), 7) == TetId(half, 0, half, 1, 1)

    def test_2d_root_child3(self, cfg2):
        half = 1 << (cfg2.max_level - 1)
        assert child(cfg2, root(cfg2), 3) == TetId(half, 0, 0, 1, 1)

    def test_parent_round_trip_exhaustive(self, cfg3, cfg2):
        for cfg in (cfg3, cfg2):
            for t in all_elements(cfg, 2):
                for i in range(cfg.num_children):
                    assert parent(cfg, child(cfg, t, i)) == t

    @given(paths3, st.integers(0, 7))
    def test_parent_round_trip_full_depth(self, path, i):
        t = walk(CFG3_FULL, path)
        if t.level < CFG3_FULL.max_level:
            assert parent(CFG3_FULL, child(CFG3_FULL, t, i)) == t

    def test_parent_type_example(self, cfg3):
        # an element with cube-id 3 and type 3 has a type-2 parent
        h = 1 << (cfg3.max_level - 1)
        t = TetId(h, h, 0, 1, 3)
        assert cube_id(cfg3, t, 1) == 3
        assert parent(cfg3, t).type == 2

    def test_2d_parent_of_level1(self, cfg2):
        h = 1 << (cfg2.max_level - 1)
        assert parent(cfg2, TetId(h, 0, 0, 1, 0)) == root(cfg2)

    def test_root_has_no_parent(self, cfg3):
        with pytest.raises(ValueError):
            parent(cfg3, root(cfg3))

    def test_level_cap(self):
        cfg = MeshConfig(3, 2)
        t = level_elements(cfg, 2)[0]
        with pytest.raises(ValueError):
            child(cfg, t, 0)

    def test_child_index_range(self, cfg3):
        with pytest.raises(ValueError):
            child(cfg3, root(cfg3), 8)

    def test_children_match_oracle(self, cfg3):
        kids = bey_children(root_simplex(cfg3))
        for i, kid in enumerate(kids):
            assert child(cfg3, root(cfg3), i) == tet_id_of(cfg3, kid)


class TestTmChild:
    def test_equals_child_through_inverse(self, cfg3):
        for t in level_elements(cfg3, 1):
            for j in range(8):
                i = bey_child_from_local(3, t.type, j)
                assert tm_child(cfg3, t, j) == child(cfg3, t, i)

    def test_rank_zero(self, cfg3):
        t = level_elements(cfg3, 2)[5]
        assert tm_child(cfg3, t, 0) == child(cfg3, t, 0)

    def test_2d_traversal_orders(self, cfg2):
        # curve order of the children visits the corner-numbered children
        # as 0,1,3,2 under a type-0 parent and 0,3,1,2 under type 1
        r = root(cfg2)
        order0 = [bey_child_from_local(2, 0, j) for j in range(4)]
        assert order0 == [0, 1, 3, 2]
        t1 = next(t for t in level_elements(cfg2, 1) if t.type == 1)
        order1 = [bey_child_from_local(2, 1, j) for j in range(4)]
        assert order1 == [0, 3, 1, 2]
        for j in range(4):
            assert tm_child(cfg2, r, j) == child(cfg2, r, order0[j])
            assert tm_child(cfg2, t1, j) == child(cfg2, t1, order1[j])

    def test_tm_position_inverts_tm_child(self, cfg3):
        for t in level_elements(cfg3, 1):
            for j in range(8):
                assert tm_position(cfg3, tm_child(cfg3, t, j)) == j
        assert tm_position(cfg3, root(cfg3)) == 0


class TestSibling:
    def test_self(self, cfg3):
        for t in level_elements(cfg3, 2):
            assert sibling(cfg3, t, tm_position(cfg3, t)) == t

    def test_common_parent(self, cfg3):
        t = level_elements(cfg3, 2)[17]
        sibs = [sibling(cfg3, t, j) for j in range(8)]
        assert len(set(sibs)) == 8
        assert {parent(cfg3, s) for s in sibs} == {parent(cfg3, t)}

    def test_types_of_root_family(self, cfg3):
        first = tm_child(cfg3, root(cfg3), 0)
        types = tuple(sibling(cfg3, first, j).type for j in range(8))
        assert types == (0, 0, 4, 5, 0, 1, 2, 0)

    def test_root_rejected(self, cfg3):
        with pytest.raises(ValueError):
            sibling(cfg3, root(cfg3), 0)


class TestFaceNeighbor:
    def test_3d_example(self, cfg3):
        t = root(cfg3)
        n, dual = face_neighbor(cfg3, t, 0)
        assert n == TetId(cfg3.root_extent, 0, 0, 0, 4)
        assert dual == 3

    def test_2d_closed_forms(self, cfg2):
        for t in level_elements(cfg2, 2):
            for f in range(3):
                n, dual = face_neighbor(cfg2, t, f)
                assert dual == 2 - f
                assert n.type == 1 - t.type

    def test_reciprocity_exhaustive(self, cfg3):
        for t in level_elements(cfg3, 2):
            for f in range(4):
                n, dual = face_neighbor(cfg3, t, f)
                assert face_neighbor(cfg3, n, dual) == (t, f)

    @given(paths3, st.integers(0, 3))
    def test_reciprocity_full_depth(self, path, f):
        t = walk(CFG3_FULL, path)
        n, dual = face_neighbor(CFG3_FULL, t, f)
        assert face_neighbor(CFG3_FULL, n, dual) == (t, f)

    def test_face_range(self, cfg3):
        with pytest.raises(ValueError):
            face_neighbor(cfg3, root(cfg3), 4)

    def test_boundary_neighbors_go_outside(self, cfg3):
        for f in range(4):
            n, _ = face_neighbor(cfg3, root(cfg3), f)
            assert not is_inside_root(cfg3, n)

    def test_neighbor_is_never_descendant(self, cfg3):
        for t in level_elements(cfg3, 2):
            for f in range(4):
                n, _ = face_neighbor(cfg3, t, f)
                assert not is_descendant(cfg3, n, t)


class TestInsideRoot:
    def test_root(self, cfg3):
        assert is_inside_root(cfg3, root(cfg3))

    def test_z_above_x_plane(self, cfg3):
        h = 1 << (cfg3.max_level - 2)
        assert not is_inside_root(cfg3, TetId(0, 0, h, 2, 0))

    def test_2d_diagonal_types(self, cfg2):
        a = 1 << (cfg2.max_level - 3)
        assert not is_inside_root(cfg2, TetId(a, a, 0, 3, 1))
        assert is_inside_root(cfg2, TetId(a, a, 0, 3, 0))

    def test_negative_coordinate(self, cfg2):
        h = 1 << (cfg2.max_level - 1)
        n, _ = face_neighbor(cfg2, TetId(0, 0, 0, 1, 1), 2)
        assert n.x < 0 and not is_inside_root(cfg2, n)


class TestIsDescendant:
    def test_self_and_children(self, cfg3):
        for t in level_elements(cfg3, 1):
            assert is_descendant(cfg3, t, t)
            for i in range(8):
                assert is_descendant(cfg3, child(cfg3, t, i), t)

    def test_shallower_is_never_descendant(self, cfg3):
        t = level_elements(cfg3, 2)[0]
        assert not is_descendant(cfg3, parent(cfg3, t), t)

    def test_level3_vs_level1_matches_oracle(self, cfg3):
        from helpers import oracle_descendant_sets

        sets = oracle_descendant_sets(cfg3, 3)
        level1 = level_elements(cfg3, 1)
        for n in level_elements(cfg3, 3):
            for t in level1:
                assert is_descendant(cfg3, n, t) == (n in sets[t])


class TestSerialization:
    def test_sizes(self, cfg2, cfg3):
        assert len(serialize(cfg2, root(cfg2))) == 10
        assert len(serialize(cfg3, root(cfg3))) == 14

    def test_bit_stable(self):
        cfg2 = MeshConfig(2, 8)
        assert serialize(cfg2, TetId(64, 32, 0, 3, 1)).hex() == "40000000200000000301"
        cfg3 = MeshConfig(3, 6)
        assert serialize(cfg3, TetId(16, 8, 32, 3, 4)).hex() == "1000000008000000200000000304"

    @given(paths3)
    def test_round_trip_3d(self, path):
        t = walk(CFG3_FULL, path)
        assert deserialize(CFG3_FULL, serialize(CFG3_FULL, t)) == t

    @given(paths2)
    def test_round_trip_2d(self, path):
        t = walk(CFG2_FULL, path)
        assert deserialize(CFG2_FULL, serialize(CFG2_FULL, t)) == t

    def test_length_check(self, cfg3):
        with pytest.raises(ValueError):
            deserialize(cfg3, b"\x00" * 10)
