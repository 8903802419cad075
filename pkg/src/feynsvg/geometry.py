"""Propagator base paths and arc-length parameterization.

A propagator runs centre-to-centre along one cubic Bezier segment.  Curved
lines place their control points at distance ``k = 0.3915 * looseness * d``
from the endpoints along the ``out``/``in`` directions, where ``d`` is the
endpoint distance.  ``in`` points from the end vertex toward its control
point, so a line entering from above has ``in = 90``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field

from .errors import DegenerateEndpoints
from .units import pt_to_cm

Point = tuple[float, float]

CONTROL_FACTOR = 0.3915
HALF_LOOSENESS = 1.7
QUARTER_LOOSENESS = 1.0
# distance scale for loops that start and end on the same vertex
SELF_LOOP_SCALE = 1.0

ARC_TOL = pt_to_cm(0.01)
MIN_DEPTH = 5
MAX_DEPTH = 24

BENDS = ("half left", "half right", "quarter left", "quarter right")


def _unit(v: Point) -> Point:
    n = math.hypot(v[0], v[1])
    return (v[0] / n, v[1] / n)


def _dir(deg: float) -> Point:
    rad = math.radians(deg)
    return (math.cos(rad), math.sin(rad))


def normalize_angle(deg: float) -> float:
    a = math.fmod(deg, 360.0)
    if a < 0:
        a += 360.0
    return a + 0.0


@dataclass(frozen=True)
class CubicBezier:
    p0: Point
    c1: Point
    c2: Point
    p3: Point

    def point(self, t: float) -> Point:
        if t == 0.0:
            return self.p0
        if t == 1.0:
            return self.p3
        u = 1.0 - t
        b0, b1, b2, b3 = u * u * u, 3 * u * u * t, 3 * u * t * t, t * t * t
        return (
            b0 * self.p0[0] + b1 * self.c1[0] + b2 * self.c2[0] + b3 * self.p3[0],
            b0 * self.p0[1] + b1 * self.c1[1] + b2 * self.c2[1] + b3 * self.p3[1],
        )

    def derivative(self, t: float) -> Point:
        u = 1.0 - t
        a, b, c = 3 * u * u, 6 * u * t, 3 * t * t
        return (
            a * (self.c1[0] - self.p0[0]) + b * (self.c2[0] - self.c1[0]) + c * (self.p3[0] - self.c2[0]),
            a * (self.c1[1] - self.p0[1]) + b * (self.c2[1] - self.c1[1]) + c * (self.p3[1] - self.c2[1]),
        )

    def tangent(self, t: float) -> Point:
        d = self.derivative(t)
        if math.hypot(*d) > 1e-12:
            return _unit(d)
        # vanishing derivative (control point on an endpoint): the
        # second-order term gives the direction
        probe = 1e-6 if t < 0.5 else -1e-6
        a, b = self.point(t), self.point(min(1.0, max(0.0, t + probe)))
        v = (b[0] - a[0], b[1] - a[1]) if probe > 0 else (a[0] - b[0], a[1] - b[1])
        if math.hypot(*v) > 0:
            return _unit(v)
        return _unit((self.p3[0] - self.p0[0], self.p3[1] - self.p0[1]))

    @property
    def is_straight(self) -> bool:
        """Control points on the chord at the thirds (uniform speed line)."""
        p0, p3 = self.p0, self.p3
        third = ((2 * p0[0] + p3[0]) / 3, (2 * p0[1] + p3[1]) / 3)
        two_thirds = ((p0[0] + 2 * p3[0]) / 3, (p0[1] + 2 * p3[1]) / 3)
        return math.dist(third, self.c1) < 1e-12 and math.dist(two_thirds, self.c2) < 1e-12


@dataclass
class PathGeom:
    """Chain of cubic segments with a cumulative arc-length table.

    The table holds ``(length, segment, t)`` triples in increasing order,
    built by recursive halving until each piece's chord and control
    polygon lengths agree within 0.01pt.  A piece then counts as
    ``(chord + polygon) / 2`` (Gravesen's estimate for cubics).
    """

    segments: list[CubicBezier]
    table: list[tuple[float, int, float]] = field(init=False, repr=False)
    total_len: float = field(init=False)

    def __post_init__(self):
        table: list[tuple[float, int, float]] = []
        cum = 0.0
        for idx, seg in enumerate(self.segments):
            table.append((cum, idx, 0.0))
            cum = self._subdivide(seg, idx, 0.0, seg.p0, 1.0, seg.p3, 0, cum, table)
        self.table = table
        self._lengths = [row[0] for row in table]
        self.total_len = cum

    @staticmethod
    def _subdivide(seg, idx, t0, p0, t1, p1, depth, cum, table):
        # the piece's own control polygon bounds its arc length from above
        # and its chord from below; stop once the two agree
        h = (t1 - t0) / 3.0
        d0, d1 = seg.derivative(t0), seg.derivative(t1)
        q1 = (p0[0] + h * d0[0], p0[1] + h * d0[1])
        q2 = (p1[0] - h * d1[0], p1[1] - h * d1[1])
        chord = math.dist(p0, p1)
        poly = math.dist(p0, q1) + math.dist(q1, q2) + math.dist(q2, p1)
        if depth >= MAX_DEPTH or (depth >= MIN_DEPTH and poly - chord < ARC_TOL):
            cum += 0.5 * (chord + poly)
            table.append((cum, idx, t1))
            return cum
        tm = 0.5 * (t0 + t1)
        pm = seg.point(tm)
        cum = PathGeom._subdivide(seg, idx, t0, p0, tm, pm, depth + 1, cum, table)
        return PathGeom._subdivide(seg, idx, tm, pm, t1, p1, depth + 1, cum, table)

    @property
    def start(self) -> Point:
        return self.segments[0].p0

    @property
    def end(self) -> Point:
        return self.segments[-1].p3

    @property
    def is_straight(self) -> bool:
        return len(self.segments) == 1 and self.segments[0].is_straight

    def locate(self, s: float) -> tuple[int, float]:
        """Segment index and curve parameter at arc-length fraction ``s``."""
        if s <= 0.0:
            return 0, 0.0
        if s >= 1.0:
            return len(self.segments) - 1, 1.0
        target = s * self.total_len
        i = bisect.bisect_left(self._lengths, target)
        i = min(max(i, 1), len(self.table) - 1)
        l0, seg0, t0 = self.table[i - 1]
        l1, seg1, t1 = self.table[i]
        if seg0 != seg1 or l1 <= l0:
            return seg1, t1
        return seg1, t0 + (target - l0) / (l1 - l0) * (t1 - t0)

    def length_at(self, s: float) -> float:
        """Cumulative length up to fraction ``s`` (monotone in ``s``)."""
        return min(max(s, 0.0), 1.0) * self.total_len

    def point_at(self, s: float) -> tuple[Point, Point]:
        """Point and unit tangent at arc-length fraction ``s``."""
        idx, t = self.locate(s)
        seg = self.segments[idx]
        return seg.point(t), seg.tangent(t)

    def offset_point(self, s: float, side: str, dist: float) -> Point:
        """Point displaced ``dist`` cm to the left or right of the path."""
        (x, y), (tx, ty) = self.point_at(s)
        nx, ny = (-ty, tx) if side == "left" else (ty, -tx)
        return (x + dist * nx, y + dist * ny)

    def sample(self, count: int = 64, s0: float = 0.0, s1: float = 1.0) -> list[Point]:
        """Points at uniform arc-length fractions; straight paths need only
        their ends."""
        if self.is_straight:
            return [self.point_at(s0)[0], self.point_at(s1)[0]]
        return [self.point_at(s0 + (s1 - s0) * i / count)[0] for i in range(count + 1)]


def straight_segment(a: Point, b: Point) -> CubicBezier:
    return CubicBezier(
        a,
        ((2 * a[0] + b[0]) / 3, (2 * a[1] + b[1]) / 3),
        ((a[0] + 2 * b[0]) / 3, (a[1] + 2 * b[1]) / 3),
        b,
    )


def control_distance(looseness: float, distance: float) -> float:
    return CONTROL_FACTOR * looseness * distance


def base_path(
    start: Point,
    end: Point,
    out: float | None = None,
    in_: float | None = None,
    looseness: float = 1.0,
) -> PathGeom:
    """Straight line, or a curve leaving at ``out`` and entering at ``in_``."""
    if out is None and in_ is None:
        if start == end:
            raise DegenerateEndpoints(f"propagator starts and ends at {start} without out/in angles")
        return PathGeom([straight_segment(start, end)])
    if out is None or in_ is None:
        raise ValueError("out and in must be given together")
    d = math.dist(start, end) or SELF_LOOP_SCALE
    k = control_distance(looseness, d)
    ox, oy = _dir(out)
    ix, iy = _dir(in_)
    seg = CubicBezier(start, (start[0] + k * ox, start[1] + k * oy), (end[0] + k * ix, end[1] + k * iy), end)
    return PathGeom([seg])


def direction(start: Point, end: Point) -> float:
    return math.degrees(math.atan2(end[1] - start[1], end[0] - start[0]))


def desugar_bend(kind: str, start: Point, end: Point) -> tuple[float, float, float]:
    """``(out, in, looseness)`` for ``half left`` and friends."""
    theta = direction(start, end)
    if kind == "half left":
        out, in_, loose = theta + 90, theta + 90, HALF_LOOSENESS
    elif kind == "half right":
        out, in_, loose = theta - 90, theta - 90, HALF_LOOSENESS
    elif kind == "quarter left":
        out, in_, loose = theta + 45, theta + 135, QUARTER_LOOSENESS
    elif kind == "quarter right":
        out, in_, loose = theta - 45, theta - 135, QUARTER_LOOSENESS
    else:
        raise ValueError(f"unknown bend {kind!r}")
    return normalize_angle(out), normalize_angle(in_), loose
