"""Resolve parsed statements into a scene graph."""

from __future__ import annotations

import dataclasses
import difflib
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from ..dsl import ast
from ..dsl.options import parse_color_expr
from ..errors import (
    BadValue,
    Diagnostic,
    DuplicateVertex,
    FeynError,
    UndefinedVertex,
    UnknownColor,
    UnknownOption,
    UnknownStyle,
)
from ..geometry import BENDS, Point, desugar_bend, direction, normalize_angle
from ..styles import (
    DRAWN_VERTEX_STYLES,
    PROP_NAMES,
    VERTEX_NAMES,
    PropStyle,
    VertexStyle,
)
from ..units import pt_to_cm, to_pt
from .config import Config, eval_length, fold_config
from .palette import BLACK, PALETTE, RGB, eval_color


@dataclass(frozen=True)
class Vertex:
    name: str
    pos: Point
    style: VertexStyle
    label: Optional[str]
    color: RGB


@dataclass(frozen=True)
class EdgeLabel:
    text: str
    side: str  # "left" | "right"


@dataclass(frozen=True)
class Momentum:
    text: str
    side: str
    reversed: bool
    arrow_color: RGB


@dataclass(frozen=True)
class Insertion:
    t: float
    size: float  # pt
    color: RGB


@dataclass(frozen=True)
class Edge:
    out: Optional[float] = None
    in_: Optional[float] = None
    looseness: float = 1.0
    label: Optional[EdgeLabel] = None


@dataclass(frozen=True)
class Propagator:
    style: PropStyle
    source: str
    target: str
    color: RGB = BLACK
    top: bool = False
    arrow_frac: float = 0.5
    # None keeps the style's own arrows; True/False forces one arrow
    # pointing backwards/forwards ("with reversed arrow" / "with arrow")
    arrow_reversed: Optional[bool] = None
    edge: Edge = Edge()
    momentum: Optional[Momentum] = None
    insertions: tuple[Insertion, ...] = ()
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


Baseline = Union[str, float, None]


@dataclass
class SceneGraph:
    vertices: dict[str, Vertex]
    propagators: list[Propagator]
    config: Config
    baseline: Baseline = None
    warnings: list[Diagnostic] = field(default_factory=list, compare=False)


MOMENTUM_KEYS = {
    "momentum": False,
    "mom": False,
    "reversed momentum": True,
    "revmom": True,
}

_BASELINE_REF = re.compile(r"^\(\s*([A-Za-z][\w]*)(?:\.base)?\s*\)$")


def resolve_coord(c: ast.Coord, table: dict[str, Point], nd: float) -> Point:
    """Absolute position of a coordinate; ``nd`` is the node distance (cm)."""
    if isinstance(c, ast.Absolute):
        return (c.x, c.y)
    if c.anchor not in table:
        raise UndefinedVertex(f"undefined vertex ({c.anchor})")
    ax, ay = table[c.anchor]
    dx = dy = 0.0
    if c.horizontal is not None:
        h = nd if c.hdist is None else c.hdist
        dx = h if c.horizontal == "right" else -h
    if c.vertical is not None:
        v = nd if c.vdist is None else c.vdist
        dy = v if c.vertical == "above" else -v
    return (ax + dx, ay + dy)


def _as_color(key: str) -> RGB | None:
    """Interpret a bare option word as a color, or None if it is not one."""
    try:
        return eval_color(parse_color_expr(key), PALETTE)
    except FeynError:
        return None


def _unknown_word(word: str, kind: str) -> UnknownStyle:
    table = PROP_NAMES if kind == "propagator" else VERTEX_NAMES
    close = difflib.get_close_matches(word, list(table) + list(PALETTE), n=3)
    hint = f"; did you mean {', '.join(close)}?" if close else ""
    return UnknownStyle(f"unknown {kind} style or color {word!r}{hint}")


def _color_value(value: ast.OptionValue, key: str) -> RGB:
    if isinstance(value, (ast.Named, ast.Mix)):
        return eval_color(value, PALETTE)
    if isinstance(value, ast.String):
        return eval_color(parse_color_expr(value.text), PALETTE)
    raise BadValue(f"{key}: expected a color")


def _number(value: ast.OptionValue, key: str) -> float:
    if isinstance(value, ast.Fraction):
        return value.value
    raise BadValue(f"{key}: expected a number")


def _text(value: ast.OptionValue) -> str:
    if isinstance(value, ast.String):
        return value.text
    if isinstance(value, ast.Braced):
        return value.label
    if isinstance(value, ast.Fraction):
        return f"{value.value:g}"
    if isinstance(value, ast.Scalar):
        return str(value.length)
    if isinstance(value, (ast.Named, ast.Mix)):
        raise BadValue("expected a label")
    return ""


class SceneBuilder:
    """Accumulates one diagram.  Config statements inside the diagram fold
    into the running configuration as they are met."""

    def __init__(self, cfg: Config):
        self.cfg = cfg
        self.vertices: dict[str, Vertex] = {}
        self.propagators: list[Propagator] = []
        self.baseline: Baseline = None
        self.warnings: list[Diagnostic] = []
        self._env_at: tuple[int, int] | tuple[None, None] = (None, None)

    def add(self, stmt: ast.Stmt) -> None:
        try:
            if isinstance(stmt, ast.VertexDecl):
                self._vertex(stmt)
            elif isinstance(stmt, ast.PropagDecl):
                self._propag(stmt.style_opts + stmt.edge_opts, stmt.source, stmt.target, stmt)
            elif isinstance(stmt, ast.GraphDecl):
                for (a, b), link in zip(zip(stmt.nodes, stmt.nodes[1:]), stmt.links):
                    self._propag(link, a, b, stmt)
            elif isinstance(stmt, ast.EnvMarker):
                if stmt.kind == "begin":
                    self._env_options(stmt.opts)
                    self._env_at = (stmt.line, stmt.col)
            else:
                self.cfg = fold_config(self.cfg, stmt)
        except FeynError as exc:
            raise exc.located(stmt.line, stmt.col)

    def _env_options(self, opts: ast.OptionList) -> None:
        for entry in opts:
            if entry.key == "node distance":
                if not isinstance(entry.value, ast.Scalar):
                    raise BadValue("node distance: expected a length such as 2cm")
                self.cfg = dataclasses.replace(self.cfg, node_distance=pt_to_cm(eval_length(entry.value.length, self.cfg)))
            elif entry.key == "baseline":
                self.baseline = self._baseline(entry.value)
            else:
                raise UnknownOption(f"unsupported environment option {entry.key!r}")

    @staticmethod
    def _baseline(value: ast.OptionValue) -> Baseline:
        if isinstance(value, ast.Scalar):
            return pt_to_cm(to_pt(value.length.value, value.length.unit))
        if isinstance(value, ast.Fraction):
            return value.value
        if isinstance(value, ast.String):
            m = _BASELINE_REF.match(value.text)
            if m:
                return m.group(1)
        raise BadValue("baseline: expected a length or (vertex.base)")

    def _vertex(self, stmt: ast.VertexDecl) -> None:
        if stmt.name in self.vertices:
            raise DuplicateVertex(f"vertex ({stmt.name}) is already defined")
        style = VERTEX_NAMES[stmt.style] if stmt.style else VertexStyle.BARE
        color = None
        for entry in stmt.opts:
            if isinstance(entry.value, ast.Flag):
                color = _as_color(entry.key)
                if color is None:
                    raise _unknown_word(entry.key, "vertex")
            elif entry.key == "color":
                color = _color_value(entry.value, entry.key)
            else:
                raise UnknownOption(f"unknown vertex option {entry.key!r}")
        if color is None:
            color = self.cfg.style_color(style) or BLACK
        if style in DRAWN_VERTEX_STYLES and stmt.label is None:
            self.warnings.append(
                Diagnostic(
                    "warning",
                    "LabelRequiredForStyle",
                    f"vertex ({stmt.name}) has style {stmt.style} but no {{}} argument; nothing is drawn",
                    stmt.line,
                    stmt.col,
                )
            )
            style = VertexStyle.BARE
        table = {name: v.pos for name, v in self.vertices.items()}
        coord = stmt.coord or ast.Absolute(0.0, 0.0)
        pos = resolve_coord(coord, table, self.cfg.node_distance)
        self.vertices[stmt.name] = Vertex(stmt.name, pos, style, stmt.label, color)

    def _endpoint(self, name: str) -> Vertex:
        try:
            return self.vertices[name]
        except KeyError:
            raise UndefinedVertex(f"undefined vertex ({name})") from None

    def _propag(self, opts: ast.OptionList, source: str, target: str, stmt) -> None:
        a, b = self._endpoint(source), self._endpoint(target)
        style = PropStyle.PLAIN
        color: RGB | None = None
        top = False
        arrow_frac = 0.5
        arrow_reversed = None
        out = in_ = None
        looseness = 1.0
        bend = None
        label = None
        momentum = None
        pending_insertions = []

        for entry in opts:
            key, value = entry.key, entry.value
            if isinstance(value, ast.Flag):
                if key in PROP_NAMES:
                    style = PROP_NAMES[key]
                elif key == "top":
                    top = True
                elif key in BENDS:
                    bend = key
                elif key.rstrip("'") in MOMENTUM_KEYS:
                    momentum = self._momentum(key, value)
                else:
                    c = _as_color(key)
                    if c is None:
                        raise _unknown_word(key, "propagator")
                    color = c
            elif key in ("with arrow", "with reversed arrow"):
                frac = _number(value, key)
                if not 0.0 < frac < 1.0:
                    raise BadValue(f"{key}: value must lie strictly between 0 and 1, got {frac:g}")
                arrow_frac = frac
                arrow_reversed = key == "with reversed arrow"
            elif key in ("out", "in"):
                angle = _number(value, key)
                if key == "out":
                    out = angle
                else:
                    in_ = angle
            elif key == "looseness":
                looseness = _number(value, key)
                if not looseness > 0:
                    raise BadValue(f"looseness must be positive, got {looseness:g}")
            elif key in ("edge label", "edge label'"):
                label = EdgeLabel(_text(value), "right" if key.endswith("'") else "left")
            elif key.rstrip("'") in MOMENTUM_KEYS:
                momentum = self._momentum(key, value)
            elif key == "insertion":
                pending_insertions.append(self._insertion(value))
            elif key in ("color", "draw"):
                color = _color_value(value, key)
            else:
                known = list(PROP_NAMES) + ["top", "with arrow", "with reversed arrow", "in", "out",
                                            "looseness", "edge label", "insertion"] + list(BENDS) + list(MOMENTUM_KEYS)
                close = difflib.get_close_matches(key, known, n=3)
                hint = f"; did you mean {', '.join(close)}?" if close else ""
                raise UnknownOption(f"unknown propagator option {key!r}{hint}")

        if color is None:
            color = self.cfg.style_color(style) or BLACK
        if bend is not None and a.pos != b.pos:
            b_out, b_in, base = desugar_bend(bend, a.pos, b.pos)
            out = b_out if out is None else out
            in_ = b_in if in_ is None else in_
            looseness *= base
        if (out is None) != (in_ is None):
            # a lone angle pairs with the straight-line direction at the other end
            theta = direction(a.pos, b.pos) if a.pos != b.pos else 0.0
            out = theta if out is None else out
            in_ = theta + 180.0 if in_ is None else in_
        if out is not None:
            out, in_ = normalize_angle(out), normalize_angle(in_)
        insertions = tuple(
            Insertion(t, self.cfg.arrowsize if size is None else size, color if c is None else c)
            for t, size, c in pending_insertions
        )
        self.propagators.append(
            Propagator(
                style=style,
                source=source,
                target=target,
                color=color,
                top=top,
                arrow_frac=arrow_frac,
                arrow_reversed=arrow_reversed,
                edge=Edge(out, in_, looseness, label),
                momentum=momentum,
                insertions=insertions,
                line=stmt.line,
                col=stmt.col,
            )
        )

    def _momentum(self, key: str, value: ast.OptionValue) -> Momentum:
        side = "right" if key.endswith("'") else "left"
        reversed_ = MOMENTUM_KEYS[key.rstrip("'")]
        arrow_color = BLACK
        text = ""
        if isinstance(value, ast.Braced):
            text = value.label
            for sub in value.suboptions:
                if sub.key == "arrow style":
                    arrow_color = _color_value(sub.value, sub.key)
                else:
                    raise UnknownOption(f"{key}: unknown sub-option {sub.key!r}")
        elif not isinstance(value, ast.Flag):
            text = _text(value)
        return Momentum(text, side, reversed_, arrow_color)

    def _insertion(self, value: ast.OptionValue) -> tuple[float, float | None, RGB | None]:
        size = color = None
        if isinstance(value, ast.Braced):
            try:
                t = float(value.label)
            except ValueError:
                raise BadValue(f"insertion: expected a fraction, got {value.label!r}") from None
            for sub in value.suboptions:
                if sub.key == "size":
                    if not isinstance(sub.value, ast.Scalar):
                        raise BadValue("insertion size: expected a length such as 6pt")
                    size = eval_length(sub.value.length, self.cfg)
                elif sub.key == "style":
                    color = _color_value(sub.value, sub.key)
                else:
                    raise UnknownOption(f"insertion: unknown sub-option {sub.key!r}")
        else:
            t = _number(value, "insertion")
        if not 0.0 <= t <= 1.0:
            raise BadValue(f"insertion: fraction must lie in [0, 1], got {t:g}")
        return t, size, color

    def finish(self) -> SceneGraph:
        if isinstance(self.baseline, str) and self.baseline not in self.vertices:
            raise UndefinedVertex(f"baseline refers to undefined vertex ({self.baseline})", *self._env_at)
        return SceneGraph(dict(self.vertices), list(self.propagators), self.cfg, self.baseline, list(self.warnings))


def build_scene(stmts, cfg: Config | None = None) -> SceneGraph:
    """Build one diagram from its statements under ``cfg``."""
    builder = SceneBuilder(cfg or Config())
    for stmt in stmts:
        builder.add(stmt)
    return builder.finish()
