"""Propagator and vertex style identifiers with their accepted names."""

from __future__ import annotations

import difflib
import enum

from .errors import UnknownStyle


class PropStyle(enum.Enum):
    FERMION = "fermion"
    ANTI_FERMION = "anti fermion"
    PHOTON = "photon"
    BOSON = "boson"
    CHARGED_BOSON = "charged boson"
    ANTI_CHARGED_BOSON = "anti charged boson"
    GLUON = "gluon"
    SCALAR = "scalar"
    CHARGED_SCALAR = "charged scalar"
    ANTI_CHARGED_SCALAR = "anti charged scalar"
    GHOST = "ghost"
    CHARGED_GHOST = "charged ghost"
    ANTI_CHARGED_GHOST = "anti charged ghost"
    MAJORANA = "majorana"
    ANTI_MAJORANA = "anti majorana"
    PLAIN = "plain"


class VertexStyle(enum.Enum):
    BARE = "bare"
    PARTICLE = "particle"
    DOT = "dot"
    RING_DOT = "ringdot"
    SQUARE_DOT = "squaredot"
    CROSS_DOT = "crossdot"
    BLOB = "blob"
    RING_BLOB = "ringblob"
    GRAY_BLOB = "grayblob"
    NW_BLOB = "NWblob"
    NE_BLOB = "NEblob"


# (short, long) per propagator style; the long name is the enum value
PROP_SHORT = {
    PropStyle.FERMION: "fer",
    PropStyle.ANTI_FERMION: "antfer",
    PropStyle.PHOTON: "pho",
    PropStyle.BOSON: "bos",
    PropStyle.CHARGED_BOSON: "chabos",
    PropStyle.ANTI_CHARGED_BOSON: "antbos",
    PropStyle.GLUON: "glu",
    PropStyle.SCALAR: "sca",
    PropStyle.CHARGED_SCALAR: "chasca",
    PropStyle.ANTI_CHARGED_SCALAR: "antsca",
    PropStyle.GHOST: "gho",
    PropStyle.CHARGED_GHOST: "chagho",
    PropStyle.ANTI_CHARGED_GHOST: "antgho",
    PropStyle.MAJORANA: "maj",
    PropStyle.ANTI_MAJORANA: "antmaj",
}

ALIAS_PAIRS = tuple((short, style.value) for style, short in PROP_SHORT.items())

PROP_NAMES: dict[str, PropStyle] = {"plain": PropStyle.PLAIN}
for _style, _short in PROP_SHORT.items():
    PROP_NAMES[_short] = _style
    PROP_NAMES[_style.value] = _style

# alternative spellings with the modifier after "blob"
VERTEX_NAMES: dict[str, VertexStyle] = {s.value: s for s in VertexStyle}
VERTEX_NAMES.update(
    {
        "blobring": VertexStyle.RING_BLOB,
        "blobgray": VertexStyle.GRAY_BLOB,
        "blobNW": VertexStyle.NW_BLOB,
        "blobNE": VertexStyle.NE_BLOB,
    }
)

DRAWN_VERTEX_STYLES = frozenset(VertexStyle) - {VertexStyle.BARE}

# charged lines carry one arrow; True means it points backwards
SINGLE_ARROW = {
    PropStyle.FERMION: False,
    PropStyle.ANTI_FERMION: True,
    PropStyle.CHARGED_BOSON: False,
    PropStyle.ANTI_CHARGED_BOSON: True,
    PropStyle.CHARGED_SCALAR: False,
    PropStyle.ANTI_CHARGED_SCALAR: True,
    PropStyle.CHARGED_GHOST: False,
    PropStyle.ANTI_CHARGED_GHOST: True,
}


def resolve_style(name: str, kind: str) -> PropStyle | VertexStyle:
    """Map a short or long style name to its identifier.

    ``kind`` is ``"propagator"`` or ``"vertex"``.
    """
    table = PROP_NAMES if kind == "propagator" else VERTEX_NAMES
    try:
        return table[name]
    except KeyError:
        close = difflib.get_close_matches(name, list(table), n=3)
        hint = f"; did you mean {', '.join(close)}?" if close else ""
        raise UnknownStyle(f"unknown {kind} style {name!r}{hint}") from None
