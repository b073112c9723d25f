"""The chernkit expression language: tokenizer, parser, evaluator, rendering."""

from .evaluator import BUILTINS, AssertionFailure, EvalError, Evaluator, evaluate
from .parser import ParseError, StaticError, parse, parse_expression, to_source
from .render import render

__all__ = [
    "BUILTINS", "AssertionFailure", "EvalError", "Evaluator", "evaluate",
    "ParseError", "StaticError", "parse", "parse_expression", "to_source", "render",
]
