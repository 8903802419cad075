"""Scene model: styles, colors, sequential configuration, scene graph."""

from ..styles import PropStyle, VertexStyle, resolve_style
from .config import Config, apply_config, fold_config
from .palette import PALETTE, eval_color
from .scene import (
    Edge,
    EdgeLabel,
    Insertion,
    Momentum,
    Propagator,
    SceneGraph,
    Vertex,
    build_scene,
    resolve_coord,
)

__all__ = [
    "PropStyle",
    "VertexStyle",
    "resolve_style",
    "Config",
    "apply_config",
    "fold_config",
    "PALETTE",
    "eval_color",
    "Edge",
    "EdgeLabel",
    "Insertion",
    "Momentum",
    "Propagator",
    "SceneGraph",
    "Vertex",
    "build_scene",
    "resolve_coord",
]
