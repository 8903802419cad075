"""Recursive-descent parser for the fixed command set.

Only the FeynHand commands are recognized; anything else is an
:class:`UnknownCommand`.  Drawing statements must end in ``;``.  The
configuration commands (``\\setlength``, ``\\pgfqkeys`` and friends) are
TeX-level commands and take an optional ``;``.
"""

from __future__ import annotations

import re

from ..errors import (
    FeynError,
    MissingSemicolon,
    NestedBracketMismatch,
    ParseError,
    UnknownCommand,
    UnterminatedBrace,
)
from ..styles import VERTEX_NAMES
from ..units import UNIT_TO_PT
from . import ast
from .lexer import Kind, Token, position_of, tokenize
from .options import parse_color_expr, parse_options

ENVIRONMENTS = ("tikzpicture", "feynhand")

PLACEMENT_KEYS = {
    "above": ("above", None),
    "below": ("below", None),
    "left": (None, "left"),
    "right": (None, "right"),
    "above left": ("above", "left"),
    "above right": ("above", "right"),
    "below left": ("below", "left"),
    "below right": ("below", "right"),
}

_LEN = r"([+-]?(?:\d+\.?\d*|\.\d+))\s*(cm|mm|pt|in)?"
_PLACEMENT = re.compile(rf"^\s*(?:{_LEN}(?:\s+and\s+{_LEN})?\s+)?of\s+([A-Za-z][\w.]*)\s*$")

LENGTH_PREFIX = "feynhand"


def _cm(value: str, unit: str | None) -> float:
    number = float(value)
    if unit is None or unit == "cm":
        return number
    return number * UNIT_TO_PT[unit] / UNIT_TO_PT["cm"]


def parse_placement(key: str, text: str) -> ast.Relative:
    """``above right`` + ``0.5cm and 2cm of a1`` -> Relative coordinate."""
    vertical, horizontal = PLACEMENT_KEYS[key]
    m = _PLACEMENT.match(text)
    if m is None:
        raise ParseError(f"bad placement {key} = {text!r}; expected '[DIST [and DIST]] of NAME'")
    v1, u1, v2, u2, anchor = m.groups()
    first = _cm(v1, u1) if v1 is not None else None
    second = _cm(v2, u2) if v2 is not None else None
    if second is None:
        vdist = hdist = first
    else:
        vdist, hdist = first, second
    if vertical is None:
        vdist = None
        if second is None:
            hdist = first
    if horizontal is None:
        hdist = None
    return ast.Relative(vertical, horizontal, vdist, hdist, anchor)


class Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    # --- token helpers ---------------------------------------------------

    def peek(self, ahead: int = 0) -> Token | None:
        i = self.pos + ahead
        return self.tokens[i] if i < len(self.tokens) else None

    def _error(self, cls, message: str, tok: Token | None = None) -> FeynError:
        if tok is None:
            tok = self.peek()
        if tok is None:
            if self.tokens:
                last = self.tokens[-1]
                line, col = position_of(self.source, last.end)
            else:
                line, col = 1, 1
            return cls(message + " (at end of input)", line, col)
        return cls(message, tok.line, tok.col)

    def expect(self, kind: Kind, what: str | None = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind is not kind:
            found = "end of input" if tok is None else repr(tok.lexeme)
            raise self._error(ParseError, f"expected {what or kind.value}, found {found}")
        self.pos += 1
        return tok

    def accept(self, kind: Kind, lexeme: str | None = None) -> Token | None:
        tok = self.peek()
        if tok is not None and tok.kind is kind and (lexeme is None or tok.lexeme == lexeme):
            self.pos += 1
            return tok
        return None

    def _group_end(self, open_tok: Token) -> int:
        """Index of the token closing the group opened at ``self.pos - 1``."""
        closer = {Kind.LBRACKET: Kind.RBRACKET, Kind.LBRACE: Kind.RBRACE}
        stack = [closer[open_tok.kind]]
        i = self.pos
        while i < len(self.tokens):
            kind = self.tokens[i].kind
            if kind in closer:
                stack.append(closer[kind])
            elif kind in (Kind.RBRACKET, Kind.RBRACE):
                if kind is not stack[-1]:
                    raise self._error(NestedBracketMismatch, f"unexpected {self.tokens[i].lexeme!r}", self.tokens[i])
                stack.pop()
                if not stack:
                    return i
            i += 1
        cls = UnterminatedBrace if open_tok.kind is Kind.LBRACE else NestedBracketMismatch
        raise self._error(cls, f"unclosed {open_tok.lexeme!r}", open_tok)

    def raw_group(self) -> tuple[str, int, Token]:
        """Consume ``[...]`` or ``{...}``; return inner text, its offset and
        the closing token."""
        open_tok = self.tokens[self.pos - 1]
        close = self._group_end(open_tok)
        close_tok = self.tokens[close]
        self.pos = close + 1
        return self.source[open_tok.end:close_tok.offset], open_tok.end, close_tok

    def options(self) -> ast.OptionList:
        """Parse ``[...]`` if present."""
        if self.accept(Kind.LBRACKET) is None:
            return ast.OptionList()
        text, base, _ = self.raw_group()
        try:
            return parse_options(text, base)
        except FeynError as exc:
            line, col = position_of(self.source, getattr(exc, "offset", 0) + base)
            raise exc.located(line, col)

    def braced(self, what: str) -> tuple[str, int]:
        self.expect(Kind.LBRACE, f"'{{' opening {what}")
        text, base, _ = self.raw_group()
        return text, base

    def name_in_parens(self) -> Token:
        self.expect(Kind.LPAREN, "'(' before a vertex name")
        tok = self.expect(Kind.NAME, "vertex name")
        self.expect(Kind.RPAREN, "')' after a vertex name")
        return tok

    def terminator(self, required: bool) -> None:
        if self.accept(Kind.SEMICOLON) is None and required:
            tok = self.peek()
            found = "end of input" if tok is None else repr(tok.lexeme)
            raise self._error(MissingSemicolon, f"missing ';' at end of statement, found {found}")

    # --- statements ------------------------------------------------------

    def parse(self) -> list[ast.Stmt]:
        stmts: list[ast.Stmt] = []
        while self.peek() is not None:
            start_tok = self.peek()
            if start_tok.kind is Kind.SEMICOLON:
                self.pos += 1
                continue
            if start_tok.kind is not Kind.COMMAND:
                raise self._error(ParseError, f"expected a command, found {start_tok.lexeme!r}")
            self.pos += 1
            handler = self.COMMANDS.get(start_tok.lexeme)
            if handler is None:
                raise self._error(UnknownCommand, f"unknown command {start_tok.lexeme}", start_tok)
            produced = handler(self, start_tok)
            end = self.tokens[self.pos - 1].end
            for stmt in produced if isinstance(produced, list) else [produced]:
                stmts.append(self._stamp(stmt, start_tok, end))
        return stmts

    @staticmethod
    def _stamp(stmt, tok: Token, end: int):
        object.__setattr__(stmt, "line", tok.line)
        object.__setattr__(stmt, "col", tok.col)
        object.__setattr__(stmt, "start", tok.offset)
        object.__setattr__(stmt, "end", end)
        return stmt

    def env(self, tok: Token) -> ast.EnvMarker:
        kind = tok.lexeme[1:]
        name, _ = self.braced("environment name")
        name = name.strip()
        if name not in ENVIRONMENTS:
            raise self._error(UnknownCommand, f"unsupported environment {name!r}", tok)
        opts = self.options() if kind == "begin" else ast.OptionList()
        return ast.EnvMarker(kind, name, opts)

    def vertex(self, tok: Token) -> ast.VertexDecl:
        opts = self.options()
        name = self.name_in_parens().lexeme
        opts = opts + self.options()
        coord: ast.Coord | None = None
        if self.accept(Kind.NAME, "at"):
            coord = self.point()
        opts = opts + self.options()
        label = None
        if self.peek() is not None and self.peek().kind is Kind.LBRACE:
            label, _ = self.braced("vertex label")
        self.terminator(required=True)

        style = None
        kept = []
        for entry in opts:
            if isinstance(entry.value, ast.Flag) and style is None and entry.key in VERTEX_NAMES:
                style = entry.key
            elif entry.key in PLACEMENT_KEYS and isinstance(entry.value, ast.String):
                if coord is not None:
                    raise self._error(ParseError, f"vertex ({name}) has both 'at' and '{entry.key}'", tok)
                try:
                    coord = parse_placement(entry.key, entry.value.text)
                except FeynError as exc:
                    raise exc.located(*position_of(self.source, entry.offset))
            else:
                kept.append(entry)
        return ast.VertexDecl(name, style, coord, label, ast.OptionList(tuple(kept)))

    def number_cm(self) -> float:
        num = self.expect(Kind.NUMBER, "number")
        unit = self.accept(Kind.UNIT)
        return _cm(num.lexeme, unit.lexeme if unit else None)

    def point(self) -> ast.Absolute:
        self.expect(Kind.LPAREN, "'(' opening a coordinate")
        x = self.number_cm()
        self.expect(Kind.COMMA, "',' between coordinates")
        y = self.number_cm()
        self.expect(Kind.RPAREN, "')' closing a coordinate")
        return ast.Absolute(x, y)

    def propag(self, tok: Token) -> ast.PropagDecl:
        style_opts = self.options()
        source = self.name_in_parens().lexeme
        if self.accept(Kind.NAME, "to") is None:
            raise self._error(ParseError, "expected 'to' between the two vertices")
        edge_opts = self.options()
        target = self.name_in_parens().lexeme
        self.terminator(required=True)
        return ast.PropagDecl(style_opts, source, edge_opts, target)

    def graph(self, tok: Token) -> ast.GraphDecl:
        self.expect(Kind.LBRACE, "'{' opening the graph")
        nodes = [self.name_in_parens().lexeme]
        links = []
        while self.accept(Kind.DASHDASH):
            links.append(self.options())
            nodes.append(self.name_in_parens().lexeme)
        self.expect(Kind.RBRACE, "'--' or '}' in graph")
        self.terminator(required=True)
        return ast.GraphDecl(tuple(nodes), tuple(links))

    def length(self) -> ast.Length:
        """``2mm``, ``18\\feynhandlinesize`` or ``\\feynhandlinesize``."""
        num = self.accept(Kind.NUMBER)
        factor = float(num.lexeme) if num else 1.0
        unit = self.accept(Kind.UNIT)
        if unit is not None:
            return ast.Length(factor, unit.lexeme)
        ref = self.accept(Kind.COMMAND)
        if ref is not None and ref.lexeme.startswith("\\" + LENGTH_PREFIX):
            return ast.Length(factor, ref.lexeme[1 + len(LENGTH_PREFIX):])
        raise self._error(ParseError, "expected a length with unit cm, mm, pt or in")

    def setlength(self, tok: Token) -> ast.SetLength:
        self.expect(Kind.LBRACE, "'{' before the length register")
        reg = self.expect(Kind.COMMAND, "length register such as \\feynhanddotsize")
        self.expect(Kind.RBRACE, "'}' after the length register")
        self.expect(Kind.LBRACE, "'{' before the length value")
        value = self.length()
        self.expect(Kind.RBRACE, "'}' after the length value")
        self.terminator(required=False)
        target = reg.lexeme[1:]
        if target.startswith(LENGTH_PREFIX):
            target = target[len(LENGTH_PREFIX):]
        return ast.SetLength(target, value)

    def _color_arg(self, what: str) -> ast.ColorExpr:
        text, base = self.braced(what)
        try:
            return parse_color_expr(text.strip())
        except FeynError as exc:
            lead = len(text) - len(text.lstrip())
            raise exc.located(*position_of(self.source, base + lead + getattr(exc, "offset", 0)))

    def topcolor(self, tok: Token) -> ast.SetTopColor:
        color = self._color_arg("gap color")
        self.terminator(required=False)
        return ast.SetTopColor(color)

    def renewcommand(self, tok: Token) -> ast.SetTopColor:
        # only the crossing-gap color form is understood
        target, _ = self.braced("macro name")
        if target.strip() not in ("white", "\\feynhandtopcolor"):
            raise self._error(UnknownCommand, f"\\renewcommand{{{target}}} is not supported", tok)
        return self.topcolor(tok)

    def pgfqkeys(self, tok: Token) -> list[ast.EveryStyle]:
        family, _ = self.braced("key family")
        if family.strip() != "/tikzfeynhand":
            raise self._error(UnknownCommand, f"unsupported key family {family.strip()!r}", tok)
        body, base = self.braced("key list")
        try:
            entries = parse_options(body, base)
        except FeynError as exc:
            raise exc.located(*position_of(self.source, getattr(exc, "offset", 0) + base))
        out = []
        for entry in entries:
            where = position_of(self.source, entry.offset)
            if not entry.key.startswith("every ") or not isinstance(entry.value, ast.Braced):
                raise ParseError(f"expected 'every STYLE={{/tikz/color=COLOR}}', got {entry.key!r}", *where)
            style = entry.key[len("every "):].strip()
            sub = parse_options(entry.value.label)
            colors = [e for e in sub if e.key in ("/tikz/color", "color")]
            if len(sub) != 1 or not colors or not isinstance(colors[0].value, (ast.Named, ast.Mix)):
                raise ParseError(f"every {style}: only '/tikz/color=COLOR' is supported", *where)
            out.append(ast.EveryStyle(style, colors[0].value))
        self.terminator(required=False)
        return out

    def nextfilename(self, tok: Token) -> ast.SetNextFilename:
        name, _ = self.braced("file name")
        name = name.strip()
        if not name:
            raise self._error(ParseError, "empty file name", tok)
        self.terminator(required=False)
        return ast.SetNextFilename(name)

    COMMANDS = {
        "\\begin": env,
        "\\end": env,
        "\\vertex": vertex,
        "\\propag": propag,
        "\\propagator": propag,
        "\\graph": graph,
        "\\setlength": setlength,
        "\\feynhandtopcolor": topcolor,
        "\\renewcommand": renewcommand,
        "\\pgfqkeys": pgfqkeys,
        "\\tikzsetnextfilename": nextfilename,
        "\\fhsetnextfilename": nextfilename,
    }


def parse(source: str) -> list[ast.Stmt]:
    """Parse a whole document into statements in source order."""
    return Parser(source).parse()
