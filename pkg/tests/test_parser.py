import pytest

from feynsvg.dsl import ast, parse
from feynsvg.errors import (
    MissingSemicolon,
    NestedBracketMismatch,
    ParseError,
    UnknownCommand,
    UnterminatedBrace,
)


def one(src):
    stmts = parse(src)
    assert len(stmts) == 1
    return stmts[0]


def test_vertex_absolute():
    v = one(r"\vertex [dot] (b) at (2,0) {};")
    assert isinstance(v, ast.VertexDecl)
    assert (v.name, v.style, v.coord, v.label) == ("b", "dot", ast.Absolute(2.0, 0.0), "")


def test_vertex_particle_label():
    v = one(r"\vertex [particle] (a) at (0,0) {e$^-$};")
    assert v.label == "e$^-$"


def test_vertex_without_coordinate():
    v = one(r"\vertex [dot] (a1) {};")
    assert v.coord is None


def test_vertex_relative_two_distances():
    v = one(r"\vertex [ringdot] (a2) [above right = 0.5cm and 2cm of a1] {};")
    assert v.coord == ast.Relative("above", "right", 0.5, 2.0, "a1")


def test_vertex_relative_default_distance():
    v = one(r"\vertex [ringdot] (a2) [above right = of a1] {};")
    assert v.coord == ast.Relative("above", "right", None, None, "a1")


def test_vertex_relative_single_axis():
    v = one(r"\vertex [dot] (a2) [right = 1.5cm of a1] {};")
    assert v.coord == ast.Relative(None, "right", None, 1.5, "a1")


def test_propagator_and_alias_command():
    p = one(r"\propag [fer] (a) to [out=90, in=90] (b);")
    q = one(r"\propagator [fer] (a) to [out=90, in=90] (b);")
    assert p == q
    assert (p.source, p.target) == ("a", "b")
    assert [o.key for o in p.edge_opts] == ["out", "in"]


def test_graph_chain():
    g = one(r"\graph {(a0) --[fer, red] (a1) --[glu] (a2)};")
    assert g.nodes == ("a0", "a1", "a2")
    assert [list(l.keys()) for l in g.links] == [["fer", "red"], ["glu"]]


def test_setlength_config_relative():
    s = one(r"\setlength{\feynhandtopsep}{18\feynhandlinesize}")
    assert s == ast.SetLength("topsep", ast.Length(18.0, "linesize"))


def test_setlength_optional_semicolon():
    assert len(parse("\\setlength{\\feynhanddotsize}{2mm};\n\\setlength{\\feynhandblobsize}{10mm}")) == 2


def test_top_color_spellings():
    assert one(r"\renewcommand{white}{yellow}") == ast.SetTopColor(ast.Named("yellow"))
    assert one(r"\feynhandtopcolor{red!50}") == ast.SetTopColor(ast.Mix(ast.Named("red"), 50.0, ast.Named("white")))


def test_every_style():
    stmts = parse(r"\pgfqkeys{/tikzfeynhand}{every particle={/tikz/color=blue}, every dot={/tikz/color=red},}")
    assert stmts == [ast.EveryStyle("particle", ast.Named("blue")), ast.EveryStyle("dot", ast.Named("red"))]


def test_environment_markers_and_filename():
    stmts = parse("\\fhsetnextfilename{scatter};\n\\begin{tikzpicture}[baseline=-0.3cm]\\begin{feynhand}\\end{feynhand}\\end{tikzpicture}")
    assert isinstance(stmts[0], ast.SetNextFilename) and stmts[0].name == "scatter"
    assert [(s.kind, s.env) for s in stmts[1:]] == [
        ("begin", "tikzpicture"), ("begin", "feynhand"), ("end", "feynhand"), ("end", "tikzpicture"),
    ]
    assert stmts[1].opts.get("baseline") is not None


def test_statement_spans():
    src = "  \\vertex (a) at (0,0);\n\\vertex (b) at (1,0);"
    a, b = parse(src)
    assert src[a.start:a.end] == "\\vertex (a) at (0,0);"
    assert (b.line, b.col) == (2, 1)


@pytest.mark.parametrize(
    "src, err",
    [
        (r"\vertex (a) at (0,0)", MissingSemicolon),
        (r"\draw (a) to (b);", UnknownCommand),
        (r"\vertex [dot (a) at (0,0);", NestedBracketMismatch),
        (r"\vertex (a) at (0,0) {x;", UnterminatedBrace),
        (r"\propag [fer] (a) (b);", ParseError),
    ],
)
def test_errors(src, err):
    with pytest.raises(err) as exc:
        parse(src)
    assert exc.value.line is not None and exc.value.col is not None


def test_unknown_command_position():
    with pytest.raises(UnknownCommand) as exc:
        parse("\\vertex (a) at (0,0);\n  \\node (b) at (1,0);")
    assert (exc.value.line, exc.value.col) == (2, 3)
