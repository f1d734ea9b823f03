"""A layered finite-domain constraint solver.

From the bottom up: ``ranges`` (domain representations), ``propagation``
(suspension chains), ``fdvar`` (variables, tell/prune and the trail),
``indexicals`` (the ``X in r`` rule language and its compiler),
``constraints`` (the library built from it), ``search`` (labeling and
branch and bound) and ``model`` (arithmetic relations over model variables).
"""

from .constraints import CONSTRAINTS, LIBRARY, post_domain
from .errors import (
    ClpfdTypeError,
    ContractError,
    FdError,
    FdSyntaxError,
    IndeterminateBound,
    SearchLimitExceeded,
    UnknownParameter,
    UnsupportedConstraint,
)
from .fdvar import FdVar, VarStore
from .indexicals import compile_indexical, compile_indexicals
from .model import Model, ModelVar, Predicate, linearize, post_rel, unify, wrapper
from .propagation import DOM, MAX, MIN, VAL, ChainType
from .ranges import Bits, Closed, Open, make_kind
from .search import FF, STEP, LabelOptions, Solution, first_solution, labeling, maximize, minimize

__all__ = [
    "Bits", "CONSTRAINTS", "ChainType", "ClpfdTypeError", "Closed", "ContractError", "DOM",
    "FF", "FdError", "FdSyntaxError", "FdVar", "IndeterminateBound", "LIBRARY", "LabelOptions",
    "MAX", "MIN", "Model", "ModelVar", "Open", "Predicate", "STEP", "SearchLimitExceeded",
    "Solution", "UnknownParameter", "UnsupportedConstraint", "VAL", "VarStore",
    "compile_indexical", "compile_indexicals", "first_solution", "labeling", "linearize",
    "make_kind", "maximize", "minimize", "post_domain", "post_rel", "unify", "wrapper",
]
