"""Compile FeynHand-style Feynman diagram sources to layered SVG."""

__version__ = "0.1.0"

from .errors import FeynError  # noqa: E402
from .pipeline import compile_diagrams, compile_source, split_diagrams  # noqa: E402

__all__ = ["FeynError", "compile_diagrams", "compile_source", "split_diagrams", "__version__"]
