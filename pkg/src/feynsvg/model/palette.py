"""Built-in color table and color-expression evaluation.

Lower-case names follow the xcolor base colors.  The capitalized names are
the common dvipsnames, converted from their CMYK definitions with
``r = (1 - c)(1 - k)`` and likewise for g and b.
"""

from __future__ import annotations

from ..dsl.ast import ColorExpr, Mix, Named
from ..errors import UnknownColor

RGB = tuple[float, float, float]


def _cmyk(c: float, m: float, y: float, k: float) -> RGB:
    return ((1 - c) * (1 - k), (1 - m) * (1 - k), (1 - y) * (1 - k))


PALETTE: dict[str, RGB] = {
    "black": (0.0, 0.0, 0.0),
    "white": (1.0, 1.0, 1.0),
    "red": (1.0, 0.0, 0.0),
    "green": (0.0, 1.0, 0.0),
    "blue": (0.0, 0.0, 1.0),
    "yellow": (1.0, 1.0, 0.0),
    "cyan": (0.0, 1.0, 1.0),
    "magenta": (1.0, 0.0, 1.0),
    "orange": (1.0, 0.5, 0.0),
    "gray": (0.5, 0.5, 0.5),
    "lightgray": (0.75, 0.75, 0.75),
    "darkgray": (0.25, 0.25, 0.25),
    "brown": (0.75, 0.5, 0.25),
    "purple": (0.75, 0.0, 0.25),
    "violet": (0.5, 0.0, 0.5),
    "pink": (1.0, 0.75, 0.75),
    "olive": (0.5, 0.5, 0.0),
    "teal": (0.0, 0.5, 0.5),
    "lime": (0.75, 1.0, 0.0),
    # dvipsnames
    "Red": _cmyk(0, 1, 1, 0),
    "Green": _cmyk(1, 0, 1, 0),
    "Blue": _cmyk(1, 1, 0, 0),
    "Orange": _cmyk(0, 0.61, 0.87, 0),
    "RedOrange": _cmyk(0, 0.77, 0.87, 0),
    "Yellow": _cmyk(0, 0, 1, 0),
}

BLACK: RGB = PALETTE["black"]
WHITE: RGB = PALETTE["white"]


def lookup(name: str, palette: dict[str, RGB] = PALETTE) -> RGB:
    """Exact name first, then a case-insensitive match."""
    if name in palette:
        return palette[name]
    folded = name.casefold()
    for key in sorted(palette):
        if key.casefold() == folded:
            return palette[key]
    raise UnknownColor(f"unknown color {name!r}")


def eval_color(expr: ColorExpr, palette: dict[str, RGB] = PALETTE) -> RGB:
    """Evaluate a mix tree; ``a!p!b`` is ``p% a + (100-p)% b`` per channel."""
    if isinstance(expr, Named):
        return lookup(expr.name, palette)
    if isinstance(expr, Mix):
        left = eval_color(expr.left, palette)
        right = eval_color(expr.right, palette)
        w = expr.pct / 100.0
        return tuple(w * a + (1.0 - w) * b for a, b in zip(left, right))
    raise TypeError(f"not a color expression: {expr!r}")
