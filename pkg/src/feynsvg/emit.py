"""Deterministic SVG output.

The document always has two groups, ``main`` then ``top``.  Every number
is printed with four decimals and colors as ``rgb(r%,g%,b%)`` so identical
input gives identical bytes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .decor import MAIN, TOP, Polygon, Polyline, RenderPrimitive, TextLabel
from .errors import EmptyScene, UndefinedVertex
from .units import DEFAULT_PPC, pt_to_cm

MARGIN_CM = 0.2
CHAR_WIDTH = 0.55


@dataclass(frozen=True)
class BBox:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin


def fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def color(rgb) -> str:
    return "rgb(" + ",".join(f"{100.0 * c:.2f}%" for c in rgb) + ")"


# --- label micro-markup -------------------------------------------------

_SCRIPT = re.compile(r"([\^_])(\{[^{}]*\}|\\[A-Za-z]+|.)")


def label_runs(text: str) -> list[tuple[str, bool, Optional[str]]]:
    """Split a label into ``(text, italic, shift)`` runs.

    Inside ``$...$`` letters are italic and a single ``^x``/``_x`` (or a
    braced group) becomes a super/subscript.  Anything else is literal.
    """
    runs: list[tuple[str, bool, Optional[str]]] = []
    for i, part in enumerate(text.split("$")):
        if not part:
            continue
        math_mode = i % 2 == 1
        if not math_mode:
            runs.append((part, False, None))
            continue
        pos = 0
        for m in _SCRIPT.finditer(part):
            if m.start() > pos:
                runs.append((part[pos:m.start()], True, None))
            body = m.group(2)
            if body.startswith("{"):
                body = body[1:-1]
            runs.append((body, True, "super" if m.group(1) == "^" else "sub"))
            pos = m.end()
        if pos < len(part):
            runs.append((part[pos:], True, None))
    return runs


def visible_length(text: str) -> int:
    return sum(len(t) for t, _, _ in label_runs(text))


def text_box(label: TextLabel) -> tuple[float, float]:
    """Estimated (width, height) in cm."""
    size = pt_to_cm(label.size)
    return CHAR_WIDTH * size * visible_length(label.text), size


# --- bounds -------------------------------------------------------------

def layout_bounds(prims: Sequence[RenderPrimitive]) -> BBox:
    """Extent of all geometry, stroke half-widths and label boxes, plus a
    2mm margin on every side."""
    if not prims:
        raise EmptyScene("nothing to draw")
    xs: list[float] = []
    ys: list[float] = []
    for p in prims:
        if isinstance(p, TextLabel):
            w, h = text_box(p)
            xs += [p.pos[0] - w / 2, p.pos[0] + w / 2]
            ys += [p.pos[1] - h / 2, p.pos[1] + h / 2]
            continue
        pad = pt_to_cm(p.width) / 2 if (isinstance(p, Polyline) or p.stroke is not None) else 0.0
        for x, y in p.pts:
            xs += [x - pad, x + pad]
            ys += [y - pad, y + pad]
    return BBox(min(xs) - MARGIN_CM, min(ys) - MARGIN_CM, max(xs) + MARGIN_CM, max(ys) + MARGIN_CM)


# --- elements -----------------------------------------------------------

class _Frame:
    """Diagram (cm, y up) to SVG pixels (y down)."""

    def __init__(self, bbox: BBox, ppc: float):
        self.bbox = bbox
        self.ppc = ppc

    def x(self, x: float) -> float:
        return (x - self.bbox.xmin) * self.ppc

    def y(self, y: float) -> float:
        return (self.bbox.ymax - y) * self.ppc

    def pt(self, pt: float) -> float:
        return pt_to_cm(pt) * self.ppc

    def xy(self, p) -> str:
        return f"{fmt(self.x(p[0]))},{fmt(self.y(p[1]))}"


def _polyline(p: Polyline, f: _Frame) -> str:
    attrs = [
        f'class="{p.role}"',
        f'points="{" ".join(f.xy(q) for q in p.pts)}"',
        'fill="none"',
        f'stroke="{color(p.stroke)}"',
        f'stroke-width="{fmt(f.pt(p.width))}"',
        'stroke-linejoin="round"',
    ]
    if p.dash is not None:
        attrs.append(f'stroke-dasharray="{fmt(f.pt(p.dash[0]))} {fmt(f.pt(p.dash[1]))}"')
    return f"<polyline {' '.join(attrs)}/>"


def _polygon(p: Polygon, f: _Frame) -> str:
    d = "M " + " L ".join(f"{fmt(f.x(x))} {fmt(f.y(y))}" for x, y in p.pts) + " Z"
    attrs = [f'class="{p.role}"', f'd="{d}"', f'fill="{color(p.fill) if p.fill is not None else "none"}"']
    if p.stroke is not None:
        attrs.append(f'stroke="{color(p.stroke)}"')
        attrs.append(f'stroke-width="{fmt(f.pt(p.width))}"')
    return f"<path {' '.join(attrs)}/>"


def _text(p: TextLabel, f: _Frame) -> str:
    size = f.pt(p.size)
    parts = []
    for run, italic, shift in label_runs(p.text):
        body = escape(run)
        attrs = []
        if italic:
            attrs.append('font-style="italic"')
        if shift is not None:
            attrs.append(f'baseline-shift="{shift}"')
            attrs.append(f'font-size="{fmt(0.7 * size)}"')
        parts.append(f"<tspan {' '.join(attrs)}>{body}</tspan>" if attrs else body)
    return (
        f'<text class="{p.role}" x="{fmt(f.x(p.pos[0]))}" y="{fmt(f.y(p.pos[1]))}" '
        f'font-family="serif" font-size="{fmt(size)}" text-anchor="{p.anchor}" '
        f'dominant-baseline="central" fill="{color(p.color)}">{"".join(parts)}</text>'
    )


def element(p: RenderPrimitive, f: _Frame) -> str:
    if isinstance(p, Polyline):
        return _polyline(p, f)
    if isinstance(p, Polygon):
        return _polygon(p, f)
    return _text(p, f)


def to_svg(
    prims: Sequence[RenderPrimitive],
    ppc: float = DEFAULT_PPC,
    baseline_y: Optional[float] = None,
) -> str:
    """Serialize primitives; ``baseline_y`` (cm) becomes ``data-baseline``."""
    if not ppc > 0:
        raise ValueError("ppc must be positive")
    bbox = layout_bounds(prims)
    frame = _Frame(bbox, ppc)
    width, height = fmt(bbox.width * ppc), fmt(bbox.height * ppc)
    root = [
        'xmlns="http://www.w3.org/2000/svg"',
        'version="1.1"',
        f'width="{width}"',
        f'height="{height}"',
        f'viewBox="0.0000 0.0000 {width} {height}"',
    ]
    if baseline_y is not None:
        root.append(f'data-baseline="{fmt(frame.y(baseline_y))}"')
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', f"<svg {' '.join(root)}>"]
    for layer in (MAIN, TOP):
        members = sorted((p for p in prims if p.layer == layer), key=lambda p: p.z)
        if not members:
            lines.append(f'<g id="{layer}"/>')
            continue
        lines.append(f'<g id="{layer}">')
        lines.extend(element(p, frame) for p in members)
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def baseline_metadata(scene, prims: Sequence[RenderPrimitive], ppc: float = DEFAULT_PPC) -> Optional[float]:
    """Pixel y of the scene's baseline, or None when it has none."""
    y = baseline_cm(scene)
    if y is None:
        return None
    return _Frame(layout_bounds(prims), ppc).y(y)


def baseline_cm(scene) -> Optional[float]:
    if scene.baseline is None:
        return None
    if isinstance(scene.baseline, str):
        if scene.baseline not in scene.vertices:
            raise UndefinedVertex(f"baseline refers to undefined vertex ({scene.baseline})")
        return scene.vertices[scene.baseline].pos[1]
    return float(scene.baseline)
