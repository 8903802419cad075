"""Front end: tokenizer, option/color parsers and the statement parser."""

from .ast import *  # noqa: F401,F403
from .lexer import Kind, Token, reconstruct, tokenize
from .options import parse_color_expr, parse_options
from .parser import parse

__all__ = ["Kind", "Token", "tokenize", "reconstruct", "parse", "parse_options", "parse_color_expr"]
