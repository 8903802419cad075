import math

import pytest
from hypothesis import given, settings, strategies as st

from feynsvg.errors import DegenerateEndpoints
from feynsvg.geometry import (
    CubicBezier,
    PathGeom,
    base_path,
    desugar_bend,
    normalize_angle,
    straight_segment,
)
from feynsvg.units import pt_to_cm

from oracles import arc_length, bezier, point_at_fraction

coord = st.floats(-5, 5, allow_nan=False)
angle = st.floats(0, 360, allow_nan=False, exclude_max=True)
loose = st.floats(0.3, 3.0)


def test_control_points_out90_in90():
    seg = base_path((0, 0), (2, 0), 90, 90, 1.0).segments[0]
    assert seg.c1 == pytest.approx((0.0, 0.783), abs=1e-9)
    assert seg.c2 == pytest.approx((2.0, 0.783), abs=1e-9)


def test_straight_path():
    path = base_path((0, 0), (3, 4))
    assert path.is_straight
    assert path.total_len == pytest.approx(5.0, abs=1e-12)
    assert path.point_at(0.5)[0] == pytest.approx((1.5, 2.0))
    assert path.sample() == [(0, 0), (3, 4)]


def test_degenerate_straight():
    with pytest.raises(DegenerateEndpoints):
        base_path((1, 1), (1, 1))


def test_self_loop_allowed_with_angles():
    path = base_path((0, 0), (0, 0), 45, 135, 1.0)
    assert path.total_len > 0


def test_endpoints_exact():
    path = base_path((0.1, 0.2), (1.7, -0.3), 30, 200, 1.3)
    assert path.point_at(0.0)[0] == (0.1, 0.2)
    assert path.point_at(1.0)[0] == (1.7, -0.3)


def test_bend_constants():
    assert desugar_bend("half left", (0, 0), (2, 0)) == (90.0, 90.0, 1.7)
    assert desugar_bend("quarter right", (0, 0), (2, 0)) == (315.0, 225.0, 1.0)


def test_normalize_angle():
    assert normalize_angle(-90) == 270.0
    assert normalize_angle(720) == 0.0
    assert normalize_angle(-0.0) == 0.0


@settings(max_examples=40, deadline=None)
@given(coord, coord, coord, coord, angle, angle, loose)
def test_arc_length_against_dense_oracle(x0, y0, x1, y1, out, in_, lo):
    if math.hypot(x1 - x0, y1 - y0) < 1e-3:
        return
    path = base_path((x0, y0), (x1, y1), out, in_, lo)
    assert path.total_len == pytest.approx(arc_length(path.segments[0]), abs=pt_to_cm(0.02) + 1e-6)


@settings(max_examples=30, deadline=None)
@given(coord, coord, coord, coord, angle, angle, loose, st.floats(0, 1))
def test_point_at_matches_oracle(x0, y0, x1, y1, out, in_, lo, s):
    if math.hypot(x1 - x0, y1 - y0) < 1e-2:
        return
    path = base_path((x0, y0), (x1, y1), out, in_, lo)
    got = path.point_at(s)[0]
    want = point_at_fraction(path.segments[0], s)
    assert math.dist(got, want) <= 0.005 * path.total_len


@settings(max_examples=50, deadline=None)
@given(coord, coord, coord, coord, angle, angle, loose)
def test_table_monotone_and_locate_monotone(x0, y0, x1, y1, out, in_, lo):
    if math.hypot(x1 - x0, y1 - y0) < 1e-3:
        return
    path = base_path((x0, y0), (x1, y1), out, in_, lo)
    lengths = [row[0] for row in path.table]
    assert all(a <= b for a, b in zip(lengths, lengths[1:]))
    ts = [path.locate(i / 50)[1] for i in range(51)]
    assert all(a <= b + 1e-12 for a, b in zip(ts, ts[1:]))
    assert path.length_at(1.0) == path.total_len


@settings(max_examples=50, deadline=None)
@given(coord, coord, coord, coord, angle, angle, loose)
def test_tangent_angles_at_ends(x0, y0, x1, y1, out, in_, lo):
    if math.hypot(x1 - x0, y1 - y0) < 1e-3:
        return
    path = base_path((x0, y0), (x1, y1), out, in_, lo)
    t0 = path.point_at(0.0)[1]
    t1 = path.point_at(1.0)[1]
    assert math.degrees(math.atan2(t0[1], t0[0])) % 360 == pytest.approx(out % 360, abs=1e-6) or abs(
        (math.degrees(math.atan2(t0[1], t0[0])) - out + 180) % 360 - 180
    ) < 1e-6
    assert abs((math.degrees(math.atan2(t1[1], t1[0])) - (in_ + 180) + 180) % 360 - 180) < 1e-6


@given(st.floats(0, 1))
def test_bezier_point_matches_formula(t):
    seg = CubicBezier((0, 0), (1, 2), (3, -1), (4, 0))
    assert seg.point(t) == pytest.approx(bezier(seg.p0, seg.c1, seg.c2, seg.p3, t), abs=1e-12)


def test_offset_point_left_of_rightward_path():
    path = PathGeom([straight_segment((0, 0), (2, 0))])
    assert path.offset_point(0.5, "left", 0.3) == pytest.approx((1.0, 0.3))
    assert path.offset_point(0.5, "right", 0.3) == pytest.approx((1.0, -0.3))
