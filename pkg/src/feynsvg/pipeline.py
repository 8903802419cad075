"""Source text to SVG: split into diagrams, build scenes, decorate, emit."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .decor import RenderPrimitive, decorate, vertex_marks, with_z
from .dsl import ast
from .dsl.parser import parse
from .emit import baseline_cm, to_svg
from .errors import Diagnostic, EmptyScene, FeynError, UnbalancedEnvironment
from .geometry import base_path
from .model.config import Config, fold_config
from .model.scene import SceneGraph, build_scene
from .units import DEFAULT_PPC


@dataclass
class Diagram:
    """One output picture: its statements and the config in force at its start."""

    config: Config
    stmts: list = field(default_factory=list)
    name: Optional[str] = None
    index: int = 0
    start: int = 0
    end: int = 0

    def source_text(self, source: str) -> str:
        return source[self.start:self.end]

    def cache_key(self, source: str, ppc: float) -> str:
        h = hashlib.sha256()
        for part in (__version__, self.config.fingerprint(), repr(ppc), self.name or "", self.source_text(source)):
            h.update(part.encode("utf-8"))
            h.update(b"\0")
        return h.hexdigest()


def split_diagrams(stmts: list[ast.Stmt], cfg: Config | None = None) -> list[Diagram]:
    """Group statements into diagrams.

    Each outermost ``\\begin{tikzpicture}``/``\\begin{feynhand}`` block is a
    diagram and snapshots the running config.  Config statements between
    blocks update it; config statements inside a block stay local to it.
    Drawing statements outside any block form an implicit diagram that runs
    until the next block.
    """
    cfg = cfg or Config()
    diagrams: list[Diagram] = []
    current: Diagram | None = None
    implicit = False
    envs: list[ast.EnvMarker] = []
    pending_name: str | None = None

    def open_diagram(stmt) -> Diagram:
        nonlocal pending_name
        d = Diagram(cfg, name=pending_name, index=len(diagrams), start=stmt.start)
        pending_name = None
        diagrams.append(d)
        return d

    for stmt in stmts:
        if isinstance(stmt, ast.EnvMarker):
            if stmt.kind == "begin":
                if not envs:
                    current, implicit = open_diagram(stmt), False
                envs.append(stmt)
            else:
                if not envs or envs[-1].env != stmt.env:
                    expected = f"\\end{{{envs[-1].env}}}" if envs else "no \\end"
                    raise UnbalancedEnvironment(
                        f"\\end{{{stmt.env}}} does not match; expected {expected}", stmt.line, stmt.col
                    )
                envs.pop()
            current.stmts.append(stmt)
            current.end = stmt.end
            if not envs:
                current = None
            continue
        if isinstance(stmt, ast.SetNextFilename):
            if envs:
                raise UnbalancedEnvironment("file name command inside a diagram", stmt.line, stmt.col)
            pending_name = stmt.name
            current = None
            continue
        if envs:
            current.stmts.append(stmt)
            current.end = stmt.end
            continue
        if isinstance(stmt, ast.CONFIG_STMTS):
            cfg = fold_config(cfg, stmt)
            if current is not None and implicit:
                current.stmts.append(stmt)
                current.end = stmt.end
            continue
        if current is None:
            current, implicit = open_diagram(stmt), True
        current.stmts.append(stmt)
        current.end = stmt.end
    if envs:
        raise UnbalancedEnvironment(f"\\begin{{{envs[-1].env}}} is never closed", envs[-1].line, envs[-1].col)
    return diagrams


def render_scene(scene: SceneGraph) -> list[RenderPrimitive]:
    """Propagators in source order, then vertex marks, numbered by z."""
    prims: list[RenderPrimitive] = []
    for p in scene.propagators:
        a, b = scene.vertices[p.source].pos, scene.vertices[p.target].pos
        try:
            path = base_path(a, b, p.edge.out, p.edge.in_, p.edge.looseness)
            prims.extend(decorate(p, path, scene.config))
        except FeynError as exc:
            raise exc.located(p.line, p.col)
    for v in scene.vertices.values():
        prims.extend(vertex_marks(v, scene.config))
    return with_z(prims)


@dataclass
class Compiled:
    diagram: Diagram
    scene: SceneGraph
    prims: list[RenderPrimitive]
    svg: Optional[str]

    @property
    def warnings(self) -> list[Diagnostic]:
        return self.scene.warnings


def compile_diagram(diagram: Diagram, ppc: float = DEFAULT_PPC, emit: bool = True) -> Compiled:
    scene = build_scene(diagram.stmts, diagram.config)
    prims = render_scene(scene)
    svg = None
    if emit:
        if not prims:
            first = diagram.stmts[0]
            raise EmptyScene("diagram draws nothing", first.line, first.col)
        svg = to_svg(prims, ppc, baseline_cm(scene))
    return Compiled(diagram, scene, prims, svg)


def compile_diagrams(source: str, ppc: float = DEFAULT_PPC, emit: bool = True) -> list[Compiled]:
    """Compile every diagram of a document."""
    return [compile_diagram(d, ppc, emit) for d in split_diagrams(parse(source))]


def compile_source(source: str, ppc: float = DEFAULT_PPC) -> list[str]:
    """SVG text for every diagram of a document."""
    return [c.svg for c in compile_diagrams(source, ppc)]
