import pytest
from hypothesis import given, strategies as st

from feynsvg.dsl import ast
from feynsvg.dsl.options import normalize_key, parse_color_expr, parse_options, split_top_level
from feynsvg.errors import BadPercentage, EmptyColorName, EmptyKey


def test_split_protects_braces_and_math():
    pieces = [p for _, p in split_top_level("fer, mom={[arrow style=blue] $q, r$}, red")]
    assert pieces == ["fer", " mom={[arrow style=blue] $q, r$}", " red"]


def test_flags_and_values():
    opts = parse_options("fer, in=90, with arrow=0.25, looseness = 1.5")
    assert opts.get("fer") == ast.Flag()
    assert opts.get("in") == ast.Fraction(90.0)
    assert opts.get("with arrow") == ast.Fraction(0.25)
    assert opts.get("looseness") == ast.Fraction(1.5)


def test_braced_value():
    opts = parse_options("mom={[arrow style=RedOrange] $k$}")
    value = opts.get("mom")
    assert isinstance(value, ast.Braced)
    assert value.label == "$k$"
    assert value.suboptions.get("arrow style") == ast.Named("RedOrange")


def test_braced_insertion_with_size():
    value = parse_options("insertion={[size=6pt,style=Green]0.25}").get("insertion")
    assert value.label == "0.25"
    assert value.suboptions.get("size") == ast.Scalar(ast.Length(6.0, "pt"))


def test_prime_key_kept():
    opts = parse_options("edge label'= $p'$")
    assert list(opts.keys()) == ["edge label'"]
    assert opts.get("edge label'") == ast.String("$p'$")


def test_key_whitespace_collapsed():
    assert normalize_key("  edge \n  label ") == "edge label"


def test_trailing_comma_ignored():
    assert list(parse_options("a, b,").keys()) == ["a", "b"]


def test_empty_key():
    with pytest.raises(EmptyKey):
        parse_options("=3")


def test_concat_keeps_order():
    both = parse_options("red") + parse_options("blue")
    assert list(both.keys()) == ["red", "blue"]


def test_color_mix_structure():
    assert parse_color_expr("green!50!black") == ast.Mix(ast.Named("green"), 50.0, ast.Named("black"))
    assert parse_color_expr("gray!30") == ast.Mix(ast.Named("gray"), 30.0, ast.Named("white"))
    # left-associative
    assert parse_color_expr("red!20!blue!50") == ast.Mix(
        ast.Mix(ast.Named("red"), 20.0, ast.Named("blue")), 50.0, ast.Named("white")
    )


@pytest.mark.parametrize("text", ["red!120", "red!-5!blue", "red!x"])
def test_bad_percentage(text):
    with pytest.raises(BadPercentage):
        parse_color_expr(text)


def test_empty_color_name():
    with pytest.raises(EmptyColorName):
        parse_color_expr("red!50!")


_names = st.sampled_from(["red", "blue", "green", "black", "white", "gray"])


@given(_names, st.integers(0, 100), _names)
def test_mix_roundtrip(a, p, b):
    assert parse_color_expr(f"{a}!{p}!{b}") == ast.Mix(ast.Named(a), float(p), ast.Named(b))
