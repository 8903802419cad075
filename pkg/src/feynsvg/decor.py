"""Turn propagators and vertices into render primitives.

Coordinates are in centimetres.  Stroke widths, font sizes and decoration
parameters are TeX points, as in :class:`DecorParams`.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import PathTooShort
from .geometry import PathGeom, Point
from .model.config import Config
from .model.palette import RGB, WHITE
from .model.scene import Propagator, Vertex
from .styles import SINGLE_ARROW, PropStyle, VertexStyle
from .units import cm_to_pt, pt_to_cm

MAIN = "main"
TOP = "top"

GRAY50: RGB = (0.5, 0.5, 0.5)
DISC_SIDES = 64


@dataclass(frozen=True)
class Polyline:
    pts: tuple[Point, ...]
    stroke: RGB
    width: float
    dash: Optional[tuple[float, float]] = None
    role: str = "line"
    layer: str = MAIN
    z: int = 0

    def __post_init__(self):
        if len(self.pts) < 2:
            raise ValueError("polyline needs at least two points")
        if not self.width > 0:
            raise ValueError("stroke width must be positive")


@dataclass(frozen=True)
class Polygon:
    pts: tuple[Point, ...]
    fill: Optional[RGB]
    stroke: Optional[RGB] = None
    width: float = 0.0
    role: str = "mark"
    layer: str = MAIN
    z: int = 0


@dataclass(frozen=True)
class TextLabel:
    pos: Point
    text: str
    size: float
    color: RGB
    anchor: str = "middle"
    role: str = "label"
    layer: str = MAIN
    z: int = 0


RenderPrimitive = Union[Polyline, Polygon, TextLabel]

FONT_SIZE = 10.0


@dataclass(frozen=True)
class DecorParams:
    """Decoration sizes in points, derived from a configuration.

    Waves, coils and the momentum stroke scale with the line width; arrow
    heads scale with the arrow size.  Dash patterns are fixed.
    """

    linesize: float
    wave_amp: float
    wave_half: float
    coil_amp: float
    coil_pitch: float
    arrow_len: float
    arrow_halfwidth: float
    mom_width: float
    mom_tip: float
    mom_offset: float
    dash_on: float = 3.0
    dash_off: float = 3.0
    dot_on: float = 0.5
    dot_off: float = 2.0
    insertion_default: float = 6.0
    mom_label_gap: float = 6.0
    edge_label_gap: float = 8.0
    font_size: float = FONT_SIZE

    @classmethod
    def from_config(cls, cfg: Config) -> "DecorParams":
        ls, ar = cfg.linesize, cfg.arrowsize
        return cls(
            linesize=ls,
            wave_amp=4 * ls,
            wave_half=9 * ls,
            coil_amp=5 * ls,
            coil_pitch=8 * ls,
            arrow_len=ar,
            arrow_halfwidth=0.35 * ar,
            mom_width=0.64 * ls,
            mom_tip=0.8 * ar,
            mom_offset=4 * ls + 3.0,
            dot_on=ls,
            insertion_default=ar,
        )


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def _left(t: Point) -> Point:
    return (-t[1], t[0])


def wave_count(total_len_cm: float, half_period_pt: float) -> int:
    return max(2, _round_half_up(cm_to_pt(total_len_cm) / half_period_pt))


def wave_polyline(
    path: PathGeom, amp: float, half_period: float, stroke: RGB = (0, 0, 0), width: float = 0.5
) -> Polyline:
    """Sine wave along ``path`` with a whole number of half periods, so
    both ends sit exactly on the path ends.  ``amp``/``half_period`` in pt."""
    n = wave_count(path.total_len, half_period)
    samples = 16 * n
    amp_cm = pt_to_cm(amp)
    pts = [path.start]
    for i in range(1, samples):
        s = i / samples
        (x, y), t = path.point_at(s)
        nx, ny = _left(t)
        d = amp_cm * math.sin(n * math.pi * s)
        pts.append((x + d * nx, y + d * ny))
    pts.append(path.end)
    return Polyline(tuple(pts), stroke, width, role="wave")


def coil_count(total_len_cm: float, pitch_pt: float) -> int:
    return max(2, _round_half_up(cm_to_pt(total_len_cm) / pitch_pt))


def _ramp(x: float) -> float:
    """Smooth 0 -> 1 over x in [0, 1]."""
    if x >= 1.0:
        return 1.0
    return math.sin(0.5 * math.pi * x) ** 2


def coil_polyline(
    path: PathGeom, amp: float, pitch: float, stroke: RGB = (0, 0, 0), width: float = 0.5
) -> Polyline:
    """Looping coil (prolate cycloid) along ``path``.

    Each loop swings back by 0.35 of its pitch so neighbouring loops
    overlap.  The lateral offset eases in over the first and last half loop
    so the coil starts and ends on the path.
    """
    length_pt = cm_to_pt(path.total_len)
    if not length_pt > pitch:
        raise PathTooShort(f"path of {length_pt:.2f}pt is too short for a coil of pitch {pitch:.2f}pt")
    m = coil_count(path.total_len, pitch)
    actual_pitch = pt_to_cm(length_pt / m)
    amp_cm = pt_to_cm(amp)
    samples = 24 * m
    pts = [path.start]
    for i in range(1, samples):
        u = i / samples
        phi = 2 * math.pi * m * u
        (x, y), t = path.point_at(u)
        nx, ny = _left(t)
        ease = _ramp(min(m * u, m * (1 - u)) / 0.5)
        lat = amp_cm * (1.0 - ease - math.cos(phi))
        lon = -0.35 * actual_pitch * math.sin(phi)
        pts.append((x + lon * t[0] + lat * nx, y + lon * t[1] + lat * ny))
    pts.append(path.end)
    return Polyline(tuple(pts), stroke, width, role="coil")


def arrow_glyph(at: Point, tangent: Point, size: float, reversed: bool, color: RGB) -> Polygon:
    """Filled isosceles triangle whose centroid is ``at``; ``size`` in pt is
    the tip-to-base length, the half-width is 0.35 of it."""
    length = pt_to_cm(size)
    half = 0.35 * length
    tx, ty = (-tangent[0], -tangent[1]) if reversed else tangent
    nx, ny = -ty, tx
    bx, by = at[0] - length / 3 * tx, at[1] - length / 3 * ty
    tip = (at[0] + 2 * length / 3 * tx, at[1] + 2 * length / 3 * ty)
    return Polygon((tip, (bx + half * nx, by + half * ny), (bx - half * nx, by - half * ny)), color, role="arrow")


def insertion_marks(path: PathGeom, t: float, size: float, color: RGB, width: float = 0.5) -> list[Polyline]:
    """An x of two strokes of length ``size`` (pt) at +-45 degrees to the path."""
    (cx, cy), (tx, ty) = path.point_at(t)
    half = pt_to_cm(size) / 2
    marks = []
    for sign in (1.0, -1.0):
        c, s = math.cos(sign * math.pi / 4), math.sin(sign * math.pi / 4)
        dx, dy = tx * c - ty * s, tx * s + ty * c
        marks.append(
            Polyline(((cx - half * dx, cy - half * dy), (cx + half * dx, cy + half * dy)), color, width, role="insertion")
        )
    return marks


def edge_label(path: PathGeom, text: str, side: str, color: RGB = (0, 0, 0), gap: float = 8.0) -> TextLabel:
    pos = path.offset_point(0.5, side, pt_to_cm(gap))
    return TextLabel(pos, text, FONT_SIZE, color, role="edge-label")


def momentum_arrow(path: PathGeom, mom, params: DecorParams) -> list[RenderPrimitive]:
    """Offset arrow over the middle 60% of the path plus its label."""
    off = pt_to_cm(params.mom_offset)
    count = 2 if path.is_straight else 32
    pts = tuple(path.offset_point(0.2 + 0.6 * i / count, mom.side, off) for i in range(count + 1))
    line = Polyline(pts, mom.arrow_color, params.mom_width, role="momentum")
    s_tip = 0.2 if mom.reversed else 0.8
    _, tangent = path.point_at(s_tip)
    direction = (-tangent[0], -tangent[1]) if mom.reversed else tangent
    tip_at = pts[0] if mom.reversed else pts[-1]
    back = 2 * pt_to_cm(params.mom_tip) / 3
    centroid = (tip_at[0] - back * direction[0], tip_at[1] - back * direction[1])
    head = dataclasses.replace(arrow_glyph(centroid, direction, params.mom_tip, False, mom.arrow_color), role="momentum-tip")
    prims: list[RenderPrimitive] = [line, head]
    if mom.text:
        pos = path.offset_point(0.5, mom.side, off + pt_to_cm(params.mom_label_gap))
        prims.append(TextLabel(pos, mom.text, params.font_size, (0.0, 0.0, 0.0), role="momentum-label"))
    return prims


WAVY = {PropStyle.PHOTON, PropStyle.BOSON, PropStyle.CHARGED_BOSON, PropStyle.ANTI_CHARGED_BOSON}
DASHED = {PropStyle.SCALAR, PropStyle.CHARGED_SCALAR, PropStyle.ANTI_CHARGED_SCALAR}
DOTTED = {PropStyle.GHOST, PropStyle.CHARGED_GHOST, PropStyle.ANTI_CHARGED_GHOST}

# Majorana arrows point at each other; anti-Majorana arrows point apart
MAJORANA_ARROWS = {
    PropStyle.MAJORANA: ((0.3, False), (0.7, True)),
    PropStyle.ANTI_MAJORANA: ((0.3, True), (0.7, False)),
}


def arrow_positions(p: Propagator) -> list[tuple[float, bool]]:
    """``(fraction, reversed)`` for every arrow head on the line."""
    if p.arrow_reversed is not None:
        return [(p.arrow_frac, p.arrow_reversed)]
    if p.style in SINGLE_ARROW:
        return [(p.arrow_frac, SINGLE_ARROW[p.style])]
    return list(MAJORANA_ARROWS.get(p.style, ()))


def stroke_line(p: Propagator, path: PathGeom, params: DecorParams) -> Polyline:
    width = params.linesize
    if p.style in WAVY:
        return wave_polyline(path, params.wave_amp, params.wave_half, p.color, width)
    if p.style is PropStyle.GLUON:
        return coil_polyline(path, params.coil_amp, params.coil_pitch, p.color, width)
    dash = None
    if p.style in DASHED:
        dash = (params.dash_on, params.dash_off)
    elif p.style in DOTTED:
        dash = (params.dot_on, params.dot_off)
    return Polyline(tuple(path.sample()), p.color, width, dash)


def decorate(p: Propagator, path: PathGeom, cfg: Config) -> list[RenderPrimitive]:
    """All primitives for one propagator, in drawing order."""
    params = DecorParams.from_config(cfg)
    prims: list[RenderPrimitive] = [stroke_line(p, path, params)]
    for frac, rev in arrow_positions(p):
        at, tangent = path.point_at(frac)
        prims.append(arrow_glyph(at, tangent, params.arrow_len, rev, p.color))
    for ins in p.insertions:
        prims.extend(insertion_marks(path, ins.t, ins.size, ins.color, params.linesize))
    if p.edge.label is not None:
        prims.append(edge_label(path, p.edge.label.text, p.edge.label.side, p.color, params.edge_label_gap))
    if p.momentum is not None:
        prims.extend(momentum_arrow(path, p.momentum, params))
    if p.top:
        halo = Polyline(tuple(path.sample()), cfg.topcolor, cfg.topsep, role="halo")
        prims = [dataclasses.replace(q, layer=TOP) for q in [halo, *prims]]
    return prims


def _disc(center: Point, radius: float) -> tuple[Point, ...]:
    cx, cy = center
    return tuple(
        (cx + radius * math.cos(2 * math.pi * i / DISC_SIDES), cy + radius * math.sin(2 * math.pi * i / DISC_SIDES))
        for i in range(DISC_SIDES)
    )


def _hatch(center: Point, radius: float, angle_deg: float, spacing: float, color: RGB, width: float) -> list[Polyline]:
    """Parallel chords of the disc at ``angle_deg``, ``spacing`` cm apart."""
    a = math.radians(angle_deg)
    d = (math.cos(a), math.sin(a))
    n = (-d[1], d[0])
    lines = []
    count = int(radius // spacing)
    for k in range(-count, count + 1):
        c = k * spacing
        half = math.sqrt(max(radius * radius - c * c, 0.0))
        if half <= 0:
            continue
        mx, my = center[0] + c * n[0], center[1] + c * n[1]
        lines.append(
            Polyline(((mx - half * d[0], my - half * d[1]), (mx + half * d[0], my + half * d[1])), color, width, role="hatch")
        )
    return lines


def vertex_marks(v: Vertex, cfg: Config) -> list[RenderPrimitive]:
    """Marks drawn at a vertex position."""
    style, pos, color, ls = v.style, v.pos, v.color, cfg.linesize
    if style is VertexStyle.BARE:
        return []
    if style is VertexStyle.PARTICLE:
        return [TextLabel(pos, v.label or "", FONT_SIZE, color, role="particle")]
    r_dot = pt_to_cm(cfg.dotsize) / 2
    r_blob = pt_to_cm(cfg.blobsize) / 2
    if style is VertexStyle.DOT:
        return [Polygon(_disc(pos, r_dot), color, role="dot")]
    if style is VertexStyle.RING_DOT:
        return [Polygon(_disc(pos, r_dot), WHITE, color, ls, role="ringdot")]
    if style is VertexStyle.SQUARE_DOT:
        x, y = pos
        sq = ((x - r_dot, y - r_dot), (x + r_dot, y - r_dot), (x + r_dot, y + r_dot), (x - r_dot, y + r_dot))
        return [Polygon(sq, color, role="squaredot")]
    if style is VertexStyle.CROSS_DOT:
        ring = Polygon(_disc(pos, r_dot), WHITE, color, ls, role="crossdot")
        e = r_dot / math.sqrt(2)
        x, y = pos
        return [
            ring,
            Polyline(((x - e, y - e), (x + e, y + e)), color, ls, role="cross"),
            Polyline(((x - e, y + e), (x + e, y - e)), color, ls, role="cross"),
        ]
    disc = _disc(pos, r_blob)
    if style is VertexStyle.GRAY_BLOB:
        return [Polygon(disc, GRAY50, color, ls, role="blob")]
    if style is VertexStyle.RING_BLOB:
        return [Polygon(disc, WHITE, color, ls, role="blob")]
    angle = -45.0 if style is VertexStyle.NW_BLOB else 45.0
    return [
        Polygon(disc, WHITE, role="blob-fill"),
        *_hatch(pos, r_blob, angle, pt_to_cm(2.0), color, ls),
        Polygon(disc, None, color, ls, role="blob"),
    ]


def with_z(prims: Sequence[RenderPrimitive]) -> list[RenderPrimitive]:
    """Number primitives in emission order."""
    return [dataclasses.replace(p, z=i) for i, p in enumerate(prims)]
