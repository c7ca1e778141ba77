import pytest
from hypothesis import given, strategies as st

from sstlab import (
    DegeneracyError,
    Point,
    assert_general_position,
    convex_hull_ccw,
    find_general_position_violation,
    line_meets_open_segment,
    orient,
    segments_cross,
    side_of_line,
)

coords = st.integers(min_value=-(10**6), max_value=10**6)
points = st.tuples(coords, coords)


class TestOrient:
    def test_ccw(self):
        assert orient((0, 0), (1, 0), (0, 1)) == 1

    def test_collinear(self):
        assert orient((0, 0), (1, 0), (2, 0)) == 0

    def test_cw_hand_determinant(self):
        # 3*1 - 3*4 = -9
        assert orient((0, 0), (3, 3), (4, 1)) == -1

    @given(points, points, points)
    def test_cyclic(self, p, q, r):
        assert orient(p, q, r) == orient(q, r, p) == orient(r, p, q)

    @given(points, points, points)
    def test_antisymmetric(self, p, q, r):
        assert orient(p, q, r) == -orient(p, r, q)


class TestSideOfLine:
    def test_above(self):
        assert side_of_line((0, 0), (6, 0), (3, 3)) == 1

    def test_below(self):
        assert side_of_line((0, 0), (6, 0), (3, -3)) == -1

    def test_on(self):
        assert side_of_line((0, 0), (6, 0), (4, 0)) == 0

    def test_degenerate_line(self):
        with pytest.raises(DegeneracyError):
            side_of_line((1, 1), (1, 1), (0, 0))


class TestSegmentsCross:
    def test_diagonals(self):
        assert segments_cross((0, 0), (6, 6), (6, 0), (0, 6))

    def test_shared_endpoint(self):
        assert not segments_cross((0, 0), (6, 0), (6, 0), (6, 6))

    def test_parallel_disjoint(self):
        assert not segments_cross((0, 0), (6, 0), (0, 6), (6, 6))

    @given(points, points, points, points)
    def test_symmetric(self, a, b, c, d):
        r = segments_cross(a, b, c, d)
        assert r == segments_cross(b, a, c, d)
        assert r == segments_cross(c, d, a, b)
        assert r == segments_cross(a, b, d, c)

    @given(points, points, points, points)
    def test_crossing_implies_line_crossing(self, a, b, c, d):
        if segments_cross(a, b, c, d):
            assert line_meets_open_segment(a, b, c, d)


class TestLineMeetsOpenSegment:
    def test_strict_interior_hit(self):
        # y = x/4 meets x=6 at y=1.5, inside (6,0)-(6,6)
        assert line_meets_open_segment((0, 0), (4, 1), (6, 0), (6, 6))

    def test_endpoint_on_line_does_not_count(self):
        assert not line_meets_open_segment((0, 0), (6, 0), (6, 0), (6, 6))

    def test_same_side(self):
        assert not line_meets_open_segment((0, 0), (1, 1), (4, 0), (5, 0))


class TestConvexHull:
    def test_square(self):
        assert convex_hull_ccw([(0, 0), (6, 0), (6, 6), (0, 6)]) == [0, 1, 2, 3]

    def test_interior_point_excluded(self):
        assert convex_hull_ccw([(0, 0), (6, 0), (6, 6), (0, 6), (4, 1)]) == [0, 1, 2, 3]

    def test_triangle(self):
        assert convex_hull_ccw([(0, 0), (2, 0), (1, 2)]) == [0, 1, 2]

    def test_starts_at_lexicographic_min(self):
        hull = convex_hull_ccw([(6, 6), (0, 0), (6, 0), (0, 6)])
        assert hull[0] == 1

    def test_too_few(self):
        with pytest.raises(DegeneracyError):
            convex_hull_ccw([(0, 0), (1, 1)])

    def test_hull_collinear_rejected(self):
        with pytest.raises(DegeneracyError):
            convex_hull_ccw([(0, 0), (2, 0), (4, 0), (1, 3)])

    @given(st.lists(points, min_size=3, max_size=9, unique=True))
    def test_all_points_inside_hull(self, pts):
        if find_general_position_violation(pts) is not None:
            return
        hull = convex_hull_ccw(pts)
        # every point weakly left of each hull edge
        for i in range(len(hull)):
            a = pts[hull[i]]
            b = pts[hull[(i + 1) % len(hull)]]
            for p in pts:
                assert orient(a, b, p) >= 0


class TestGeneralPosition:
    def test_square_plus_interior_ok(self):
        assert_general_position([(0, 0), (6, 0), (6, 6), (0, 6), (4, 1)])

    def test_collinear_triple_named(self):
        v = find_general_position_violation([(0, 3), (6, 6), (3, 0), (2, 1)])
        assert v is not None and v.kind == "collinear"
        assert v.indices == (0, 2, 3)  # all satisfy x + y = 3

    def test_duplicate_named(self):
        v = find_general_position_violation([(1, 1), (2, 5), (1, 1)])
        assert v is not None and v.kind == "duplicate"
        assert v.indices == (0, 2)

    def test_assert_raises(self):
        with pytest.raises(DegeneracyError, match="collinear"):
            assert_general_position([(0, 0), (1, 1), (2, 2)])


def test_point_is_a_tuple():
    p = Point(3, 4)
    assert p == (3, 4) and p.x == 3 and p.y == 4
