"""Sequential drawing configuration (lengths, gap color, style colors)."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..dsl import ast
from ..errors import FeynError, NonPositiveLength, UnknownLengthTarget, UnknownStyle
from ..styles import PROP_NAMES, VERTEX_NAMES, PropStyle, VertexStyle
from ..units import to_pt
from .palette import RGB, WHITE, eval_color

LENGTH_TARGETS = ("dotsize", "blobsize", "linesize", "arrowsize", "topsep")

TOPSEP_PER_LINESIZE = 18.0


@dataclass(frozen=True)
class Config:
    """Lengths are in TeX points, ``node_distance`` in centimetres.

    ``topsep`` follows ``18 * linesize`` until it is set explicitly.
    """

    dotsize: float = to_pt(1.5, "mm")
    blobsize: float = to_pt(7.5, "mm")
    linesize: float = 0.5
    arrowsize: float = 6.0
    topsep_set: float | None = None
    topcolor: RGB = WHITE
    node_distance: float = 1.0
    every_style: dict = field(default_factory=dict)

    @property
    def topsep(self) -> float:
        if self.topsep_set is not None:
            return self.topsep_set
        return TOPSEP_PER_LINESIZE * self.linesize

    def length(self, name: str) -> float:
        return getattr(self, name)

    def style_color(self, style: PropStyle | VertexStyle) -> RGB | None:
        return self.every_style.get(style)

    def fingerprint(self) -> str:
        """Stable text form used for cache keys."""
        styles = sorted((s.name, c) for s, c in self.every_style.items())
        return repr(
            (
                self.dotsize,
                self.blobsize,
                self.linesize,
                self.arrowsize,
                self.topsep,
                self.topcolor,
                self.node_distance,
                styles,
            )
        )


def eval_length(length: ast.Length, cfg: Config) -> float:
    """Length in points; ``18\\feynhandlinesize`` scales the current value."""
    if length.unit in LENGTH_TARGETS:
        return length.value * cfg.length(length.unit)
    return to_pt(length.value, length.unit)


def _style_for_every(name: str) -> PropStyle | VertexStyle:
    if name in VERTEX_NAMES:
        return VERTEX_NAMES[name]
    if name in PROP_NAMES:
        return PROP_NAMES[name]
    raise UnknownStyle(f"every {name}: unknown style {name!r}")


def fold_config(cfg: Config, stmt: ast.Stmt) -> Config:
    """Apply one statement; non-configuration statements pass through."""
    try:
        if isinstance(stmt, ast.SetLength):
            if stmt.target not in LENGTH_TARGETS:
                raise UnknownLengthTarget(
                    f"unknown length \\feynhand{stmt.target}; expected one of "
                    + ", ".join("\\feynhand" + t for t in LENGTH_TARGETS)
                )
            value = eval_length(stmt.value, cfg)
            if not value > 0:
                raise NonPositiveLength(f"\\feynhand{stmt.target} must be positive, got {stmt.value}")
            if stmt.target == "topsep":
                return dataclasses.replace(cfg, topsep_set=value)
            return dataclasses.replace(cfg, **{stmt.target: value})
        if isinstance(stmt, ast.SetTopColor):
            return dataclasses.replace(cfg, topcolor=eval_color(stmt.color))
        if isinstance(stmt, ast.EveryStyle):
            styles = dict(cfg.every_style)
            styles[_style_for_every(stmt.style)] = eval_color(stmt.color)
            return dataclasses.replace(cfg, every_style=styles)
    except FeynError as exc:
        raise exc.located(stmt.line, stmt.col)
    return cfg


def apply_config(stmts: Iterable[ast.Stmt], cfg: Config | None = None) -> Iterator[Config]:
    """Yield the configuration in force after each statement."""
    cfg = cfg or Config()
    for stmt in stmts:
        cfg = fold_config(cfg, stmt)
        yield cfg
