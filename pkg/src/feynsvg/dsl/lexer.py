"""Tokenizer for the diagram language.

Whitespace and ``%`` comments are skipped but every token records its
source offset, so the original text can be rebuilt from the token stream
plus the gaps between tokens.  Math spans ``$...$`` are lexed as
``Dollar Text Dollar`` so that labels survive verbatim.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from ..errors import IllegalCharacter, UnterminatedBrace, UnterminatedMath


class Kind(enum.Enum):
    COMMAND = "Command"
    NAME = "Name"
    NUMBER = "Number"
    UNIT = "Unit"
    LBRACKET = "LBracket"
    RBRACKET = "RBracket"
    LPAREN = "LParen"
    RPAREN = "RParen"
    LBRACE = "LBrace"
    RBRACE = "RBrace"
    COMMA = "Comma"
    SEMICOLON = "Semicolon"
    EQUALS = "Equals"
    DASHDASH = "DashDash"
    TEXT = "Text"
    DOLLAR = "Dollar"
    BANG = "Bang"
    PRIME = "Prime"


@dataclass(frozen=True)
class Token:
    kind: Kind
    lexeme: str
    line: int
    col: int
    offset: int

    @property
    def end(self) -> int:
        return self.offset + len(self.lexeme)

    def __repr__(self) -> str:
        return f"{self.kind.value}({self.lexeme!r})@{self.line}:{self.col}"


UNITS = ("cm", "mm", "pt", "in")

_PUNCT = {
    "[": Kind.LBRACKET,
    "]": Kind.RBRACKET,
    "(": Kind.LPAREN,
    ")": Kind.RPAREN,
    "{": Kind.LBRACE,
    "}": Kind.RBRACE,
    ",": Kind.COMMA,
    ";": Kind.SEMICOLON,
    "=": Kind.EQUALS,
    "!": Kind.BANG,
    "'": Kind.PRIME,
}

_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)")
_UNIT = re.compile(r"(?:cm|mm|pt|in)(?![A-Za-z0-9_])")
_NAME = re.compile(r"[A-Za-z/@][A-Za-z0-9_./@*]*")
_COMMAND = re.compile(r"\\(?:[A-Za-z@]+|.)", re.DOTALL)
_WS = re.compile(r"\s+")


class _Cursor:
    """Line/column bookkeeping over a source string."""

    def __init__(self, source: str):
        self.source = source
        self._line_starts = [0]
        for m in re.finditer("\n", source):
            self._line_starts.append(m.end())

    def position(self, offset: int) -> tuple[int, int]:
        lo, hi = 0, len(self._line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._line_starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, offset - self._line_starts[lo] + 1


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens.

    Raises :class:`UnterminatedBrace`, :class:`UnterminatedMath` or
    :class:`IllegalCharacter`, each carrying the offending position.
    """
    cur = _Cursor(source)
    tokens: list[Token] = []
    brace_stack: list[int] = []
    i = 0
    n = len(source)

    def emit(kind: Kind, start: int, end: int) -> None:
        line, col = cur.position(start)
        tokens.append(Token(kind, source[start:end], line, col, start))

    while i < n:
        ch = source[i]
        m = _WS.match(source, i)
        if m:
            i = m.end()
            continue
        if ch == "%":
            if brace_stack:
                emit(Kind.TEXT, i, i + 1)
                i += 1
                continue
            nl = source.find("\n", i)
            i = n if nl < 0 else nl
            continue
        if ch == "$":
            close = source.find("$", i + 1)
            if close < 0:
                raise UnterminatedMath("unterminated math span", *cur.position(i))
            emit(Kind.DOLLAR, i, i + 1)
            if close > i + 1:
                emit(Kind.TEXT, i + 1, close)
            emit(Kind.DOLLAR, close, close + 1)
            i = close + 1
            continue
        if ch == "\\":
            m = _COMMAND.match(source, i)
            if m is None:
                raise IllegalCharacter("dangling backslash", *cur.position(i))
            emit(Kind.COMMAND, i, m.end())
            i = m.end()
            continue
        if ch == "-" and source.startswith("--", i):
            emit(Kind.DASHDASH, i, i + 2)
            i += 2
            continue
        m = _NUMBER.match(source, i)
        if m and (ch not in "+-" or m.end() > i + 1):
            emit(Kind.NUMBER, i, m.end())
            i = m.end()
            u = _UNIT.match(source, i)
            if u:
                emit(Kind.UNIT, i, u.end())
                i = u.end()
            continue
        m = _NAME.match(source, i)
        if m:
            emit(Kind.NAME, i, m.end())
            i = m.end()
            continue
        kind = _PUNCT.get(ch)
        if kind is not None:
            if kind is Kind.LBRACE:
                brace_stack.append(i)
            elif kind is Kind.RBRACE:
                if not brace_stack:
                    raise UnterminatedBrace("unmatched '}'", *cur.position(i))
                brace_stack.pop()
            emit(kind, i, i + 1)
            i += 1
            continue
        if brace_stack:
            # free text inside a braced argument, e.g. a particle label
            emit(Kind.TEXT, i, i + 1)
            i += 1
            continue
        raise IllegalCharacter(f"illegal character {ch!r}", *cur.position(i))

    if brace_stack:
        raise UnterminatedBrace("unterminated '{'", *cur.position(brace_stack[-1]))
    return tokens


def reconstruct(source: str, tokens: list[Token]) -> str:
    """Rebuild ``source`` from tokens plus the skipped gaps between them."""
    out = []
    pos = 0
    for tok in tokens:
        out.append(source[pos:tok.offset])
        out.append(tok.lexeme)
        pos = tok.end
    out.append(source[pos:])
    return "".join(out)


def position_of(source: str, offset: int) -> tuple[int, int]:
    return _Cursor(source).position(offset)
