"""Option-list and color-expression parsing.

Both work on raw text (the content of one ``[...]`` pair, or a color
expression such as ``green!50!black``).  Errors carry ``offset`` relative
to the text they were given so callers can map them back to the source.
"""

from __future__ import annotations

import re

from ..errors import BadPercentage, EmptyColorName, EmptyKey, NestedBracketMismatch
from .ast import (
    Braced,
    ColorExpr,
    Flag,
    Fraction,
    Length,
    Mix,
    Named,
    Option,
    OptionList,
    OptionValue,
    Scalar,
    String,
)

COLOR_KEYS = frozenset({"arrow style", "style", "color", "/tikz/color", "draw", "fill"})

_SCALAR = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+))\s*(cm|mm|pt|in)?\s*$")
_WS = re.compile(r"\s+")
_PAIRS = {"{": "}", "[": "]"}


def _err(cls, message: str, offset: int):
    exc = cls(message)
    exc.offset = offset
    return exc


def normalize_key(key: str) -> str:
    """Collapse internal whitespace runs; ``half  left`` becomes ``half left``."""
    return _WS.sub(" ", key.strip())


def split_top_level(text: str, sep: str = ",") -> list[tuple[int, str]]:
    """Split on ``sep`` outside ``{}``/``[]`` nesting and ``$...$`` math.

    Returns ``(offset, piece)`` pairs.
    """
    pieces = []
    stack: list[tuple[str, int]] = []
    in_math = False
    start = 0
    for i, ch in enumerate(text):
        if ch == "$":
            in_math = not in_math
        elif in_math:
            continue
        elif ch in _PAIRS:
            stack.append((_PAIRS[ch], i))
        elif ch in "}]":
            if not stack or stack[-1][0] != ch:
                raise _err(NestedBracketMismatch, f"unexpected {ch!r}", i)
            stack.pop()
        elif ch == sep and not stack:
            pieces.append((start, text[start:i]))
            start = i + 1
    if stack:
        closer, at = stack[-1]
        raise _err(NestedBracketMismatch, f"missing {closer!r}", at)
    pieces.append((start, text[start:]))
    return pieces


def _find_top_level(text: str, ch: str) -> int:
    depth = 0
    in_math = False
    for i, c in enumerate(text):
        if c == "$":
            in_math = not in_math
        elif in_math:
            continue
        elif c in "{[":
            depth += 1
        elif c in "}]":
            depth -= 1
        elif c == ch and depth == 0:
            return i
    return -1


def _matching(text: str, open_at: int) -> int:
    closer = _PAIRS[text[open_at]]
    stack = [closer]
    for i in range(open_at + 1, len(text)):
        c = text[i]
        if c in _PAIRS:
            stack.append(_PAIRS[c])
        elif c in "}]":
            if stack[-1] != c:
                raise _err(NestedBracketMismatch, f"unexpected {c!r}", i)
            stack.pop()
            if not stack:
                return i
    raise _err(NestedBracketMismatch, f"missing {closer!r}", open_at)


def parse_braced(text: str, base: int = 0) -> Braced:
    """``{[sub=opts] label}`` -> Braced; ``text`` includes the outer braces."""
    inner = text[1:-1]
    lead = len(inner) - len(inner.lstrip())
    stripped = inner.strip()
    if stripped.startswith("["):
        close = _matching(stripped, 0)
        subs = parse_options(stripped[1:close], base + 2 + lead)
        return Braced(subs, stripped[close + 1:].strip())
    return Braced(OptionList(), stripped)


def parse_value(key: str, raw: str, base: int = 0) -> OptionValue:
    text = raw.strip()
    lead = len(raw) - len(raw.lstrip())
    if text.startswith("{") and _matching(text, 0) == len(text) - 1:
        return parse_braced(text, base + lead)
    m = _SCALAR.match(text)
    if m:
        number = float(m.group(1))
        if m.group(2):
            return Scalar(Length(number, m.group(2)))
        return Fraction(number)
    if key in COLOR_KEYS:
        try:
            return parse_color_expr(text)
        except (BadPercentage, EmptyColorName) as exc:
            exc.offset = base + lead
            raise
    return String(text)


def parse_options(text: str, base: int = 0) -> OptionList:
    """Parse the content of one ``[...]`` pair into an ordered option list.

    >>> [e.key for e in parse_options("fer, half  left, looseness=1.5")]
    ['fer', 'half left', 'looseness']
    """
    entries = []
    for offset, piece in split_top_level(text):
        if not piece.strip():
            continue
        at = base + offset + len(piece) - len(piece.lstrip())
        eq = _find_top_level(piece, "=")
        if eq < 0:
            entries.append(Option(normalize_key(piece), Flag(), at))
            continue
        key = normalize_key(piece[:eq])
        if not key:
            raise _err(EmptyKey, "option with empty key", at)
        value = parse_value(key, piece[eq + 1:], base + offset + eq + 1)
        entries.append(Option(key, value, at))
    return OptionList(tuple(entries))


def _color_name(part: str, offset: int) -> Named:
    name = part.strip()
    if not name:
        raise _err(EmptyColorName, "empty color name", offset)
    return Named(name)


def parse_color_expr(text: str) -> ColorExpr:
    """Parse an xcolor-style mix such as ``green!50!black``.

    Mixing is left-associative and a trailing percentage mixes with white.
    """
    parts = text.split("!")
    offsets = []
    pos = 0
    for part in parts:
        offsets.append(pos)
        pos += len(part) + 1
    expr: ColorExpr = _color_name(parts[0], 0)
    i = 1
    while i < len(parts):
        raw = parts[i].strip()
        try:
            pct = float(raw)
        except ValueError:
            raise _err(BadPercentage, f"bad percentage {raw!r} in {text!r}", offsets[i]) from None
        if not 0.0 <= pct <= 100.0:
            raise _err(BadPercentage, f"percentage {raw} outside 0..100", offsets[i])
        if i + 1 < len(parts):
            expr = Mix(expr, pct, _color_name(parts[i + 1], offsets[i + 1]))
        else:
            expr = Mix(expr, pct, Named("white"))
        i += 2
    return expr
