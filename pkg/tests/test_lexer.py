import pytest
from hypothesis import given, strategies as st

from feynsvg.dsl.lexer import Kind, position_of, reconstruct, tokenize
from feynsvg.errors import IllegalCharacter, UnterminatedMath


def kinds(src):
    return [t.kind for t in tokenize(src)]


def test_vertex_statement_tokens():
    toks = tokenize(r"\vertex [dot] (a) at (0,-1.5) {};")
    assert [t.lexeme for t in toks] == [
        r"\vertex", "[", "dot", "]", "(", "a", ")", "at", "(", "0", ",", "-1.5", ")", "{", "}", ";",
    ]
    assert toks[0].kind is Kind.COMMAND
    assert toks[11].kind is Kind.NUMBER


def test_number_with_unit():
    toks = tokenize("1.5cm")
    assert [(t.kind, t.lexeme) for t in toks] == [(Kind.NUMBER, "1.5"), (Kind.UNIT, "cm")]


def test_minus_without_digit_is_not_a_sign():
    assert kinds("--") == [Kind.DASHDASH]
    assert kinds("(a) --[fer] (b)")[3] is Kind.DASHDASH


def test_comment_skipped_outside_braces():
    assert kinds("\\vertex % a comment\n;") == [Kind.COMMAND, Kind.SEMICOLON]


def test_math_is_delimited():
    toks = tokenize(r"{e$^-$}")
    assert [t.kind for t in toks] == [Kind.LBRACE, Kind.NAME, Kind.DOLLAR, Kind.TEXT, Kind.DOLLAR, Kind.RBRACE]
    assert toks[3].lexeme == "^-"


def test_unterminated_math():
    with pytest.raises(UnterminatedMath):
        tokenize("{$k}")


def test_illegal_character_position():
    with pytest.raises(IllegalCharacter) as exc:
        tokenize("\\vertex\n  #")
    assert (exc.value.line, exc.value.col) == (2, 3)


def test_positions():
    toks = tokenize("\\vertex (a)\n  at (1,2);")
    at = [t for t in toks if t.lexeme == "at"][0]
    assert (at.line, at.col) == (2, 3)
    assert position_of("ab\ncd", 4) == (2, 2)


_fragments = st.sampled_from(
    [r"\vertex", r"\propag", "[fer, red]", "(a)", "at", "(0,1)", "{$k$}", ";", " ", "\n", "to", "--",
     "1.5cm", "green!50!black", "edge label'=$p'$", "% note\n", "{e$^-$}"]
)


@given(st.lists(_fragments, max_size=30))
def test_roundtrip_reconstructs_source(parts):
    src = "".join(parts)
    assert reconstruct(src, tokenize(src)) == src


@given(st.lists(_fragments, max_size=30))
def test_offsets_increase_and_match_lexemes(parts):
    src = "".join(parts)
    toks = tokenize(src)
    for a, b in zip(toks, toks[1:]):
        assert a.end <= b.offset
    for t in toks:
        assert src[t.offset:t.end] == t.lexeme
        assert position_of(src, t.offset) == (t.line, t.col)
