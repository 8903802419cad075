"""Syntax tree produced by the parser."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union


@dataclass(frozen=True)
class Length:
    """A length literal.  ``unit`` is ``cm``/``mm``/``pt``/``in``, or the
    name of a configurable length (``linesize`` for ``18\\feynhandlinesize``)."""

    value: float
    unit: str

    def __str__(self) -> str:
        return f"{self.value:g}{self.unit}"


# --- colors -------------------------------------------------------------

@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Mix:
    left: "ColorExpr"
    pct: float
    right: "ColorExpr"


ColorExpr = Union[Named, Mix]


# --- option lists -------------------------------------------------------

@dataclass(frozen=True)
class Flag:
    pass


@dataclass(frozen=True)
class Scalar:
    length: Length


@dataclass(frozen=True)
class Fraction:
    value: float


@dataclass(frozen=True)
class Braced:
    suboptions: "OptionList"
    label: str


@dataclass(frozen=True)
class String:
    text: str


OptionValue = Union[Flag, Scalar, Fraction, Named, Mix, Braced, String]


@dataclass(frozen=True)
class Option:
    key: str
    value: OptionValue
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class OptionList:
    entries: tuple[Option, ...] = ()

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "OptionList") -> "OptionList":
        return OptionList(self.entries + other.entries)

    def keys(self) -> list[str]:
        return [e.key for e in self.entries]

    def get(self, key: str) -> Optional[OptionValue]:
        """Last value for ``key`` (later entries override earlier ones)."""
        found = None
        for e in self.entries:
            if e.key == key:
                found = e.value
        return found


# --- coordinates --------------------------------------------------------

@dataclass(frozen=True)
class Absolute:
    x: float
    y: float


@dataclass(frozen=True)
class Relative:
    vertical: Optional[str]  # "above" | "below" | None
    horizontal: Optional[str]  # "left" | "right" | None
    vdist: Optional[float]
    hdist: Optional[float]
    anchor: str


Coord = Union[Absolute, Relative]


# --- statements ---------------------------------------------------------
#
# ``start``/``end`` are source offsets of the statement's first and last
# token (end exclusive); they are excluded from equality so that two
# statements that differ only in layout compare equal.

@dataclass(frozen=True)
class VertexDecl:
    name: str
    style: Optional[str]
    coord: Optional[Coord]
    label: Optional[str]
    opts: OptionList
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PropagDecl:
    style_opts: OptionList
    source: str
    edge_opts: OptionList
    target: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


@dataclass(frozen=True)
class GraphDecl:
    nodes: tuple[str, ...]
    links: tuple[OptionList, ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SetLength:
    target: str
    value: Length
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SetTopColor:
    color: ColorExpr
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


@dataclass(frozen=True)
class EveryStyle:
    style: str
    color: ColorExpr
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SetNextFilename:
    name: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


@dataclass(frozen=True)
class EnvMarker:
    kind: str  # "begin" | "end"
    env: str
    opts: OptionList
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


Stmt = Union[
    VertexDecl,
    PropagDecl,
    GraphDecl,
    SetLength,
    SetTopColor,
    EveryStyle,
    SetNextFilename,
    EnvMarker,
]

CONFIG_STMTS = (SetLength, SetTopColor, EveryStyle)
DRAW_STMTS = (VertexDecl, PropagDecl, GraphDecl)
