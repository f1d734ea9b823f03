"""The indexical language: ``X in r`` rules, their parser and compiler."""

from . import ast
from .compiler import (
    CompiledIndexical,
    analyze_dependencies,
    compile_indexical,
    compile_indexicals,
    rule_dependencies,
)
from .evaluate import SUSPENDED, eval_range, eval_term
from .parser import parse_indexical, parse_indexicals


def post_indexical(compiled, store, *args):
    return compiled.post(store, *args)


__all__ = [
    "SUSPENDED", "CompiledIndexical", "analyze_dependencies", "ast", "compile_indexical",
    "compile_indexicals", "eval_range", "eval_term", "parse_indexical", "parse_indexicals",
    "post_indexical", "rule_dependencies",
]
