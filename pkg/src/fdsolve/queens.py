"""The N-queens program written at four levels of the solver.

Queen ``i`` sits in column ``i`` and row ``L[i]``.  Every pair of queens at
column distance ``I`` is kept apart by ``diff(X, Y, I)``:

``clpfd``
    ``X #\\= Y, X #\\= Y+I, X+I #\\= Y`` through the model compiler.  The
    predicate is compiled once with ``I`` as an unknown, so the two
    diagonal relations become ternary ``'a+b<>c'`` constraints.
``fd``
    Library constraints chosen by hand: ``'a<>b'`` and two ``'a<>b+t'``.
``idx``
    One indexical definition with two rules.
``kernel``
    Two propagators on the ``val`` chains that prune three values each.
"""

import statistics
import time
from dataclasses import dataclass

from .constraints import CONSTRAINTS, post_domain
from .fdvar import VarStore
from .indexicals import compile_indexical
from .model import ModelVar, Predicate, wrapper
from .propagation import VAL
from .search import first_solution, labeling

LEVELS = ("clpfd", "fd", "idx", "kernel")

DIFF_CLPFD = Predicate(("X", "Y", "I"), lambda x, y, i: [x != y, x != y + i, x + i != y])

IDX_DIFF = compile_indexical("""
idx_diff(X, Y, I) +:
    X in -{val(Y), val(Y) + c(I), val(Y) - c(I)},
    Y in -{val(X), val(X) - c(I), val(X) + c(I)}.
""")

_neq = CONSTRAINTS["a<>b"]
_neq_t = CONSTRAINTS["a<>b+t"]


def diff_clpfd(store, x, y, i):
    return DIFF_CLPFD(store, x, y, i)


def diff_fd(store, x, y, i):
    x, y = wrapper(store, x), wrapper(store, y)
    return _neq(store, x, y) and _neq_t(store, x, y, i) and _neq_t(store, y, x, i)


def diff_idx(store, x, y, i):
    return IDX_DIFF.post(store, wrapper(store, x), wrapper(store, y), i)


def _cstr(store, x, y, i):
    y0 = store.integerize(y)
    return store.prune(x, y0) and store.prune(x, y0 + i) and store.prune(x, y0 - i)


def diff_kernel(store, x, y, i):
    x0, y0 = wrapper(store, x), wrapper(store, y)
    store.add_propag(y0, VAL, store.propagator(_cstr, x0, y0, i, name="cstr"))
    store.add_propag(x0, VAL, store.propagator(_cstr, y0, x0, i, name="cstr"))
    return True


DIFF = {"clpfd": diff_clpfd, "fd": diff_fd, "idx": diff_idx, "kernel": diff_kernel}


def queens_model(n, level="fd", kind=None):
    """Post the queens constraints; returns ``(store, fd_terms)`` or ``None``."""
    if level not in DIFF:
        raise ValueError(f"unknown level {level!r}; expected one of {', '.join(LEVELS)}")
    diff = DIFF[level]
    store = VarStore(kind)
    queens = [ModelVar(f"q{i + 1}") for i in range(n)]
    terms = [wrapper(store, q) for q in queens]
    if not post_domain(store, terms, 1, n):
        return None
    for k, x in enumerate(queens):
        for d, y in enumerate(queens[k + 1:], start=1):
            if not diff(store, x, y, d):
                return None
    return store, terms


def queens_solutions(n, level="fd", kind=None, label="step"):
    built = queens_model(n, level, kind)
    if built is None:
        return
    store, terms = built
    yield from labeling(store, terms, label)


def queens_count(n, level="fd", kind=None, label="step"):
    return sum(1 for _ in queens_solutions(n, level, kind, label))


@dataclass
class BenchResult:
    n: int
    label: str
    level: str
    kind: str
    solution: list
    seconds: float
    times: list
    stats: dict


def queens_bench(n, label="step", level="fd", kind=None, repeats=1):
    """First-solution run(s); ``seconds`` is the median wall time."""
    times = []
    solution = stats = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        built = queens_model(n, level, kind)
        sol = None
        if built is not None:
            store, terms = built
            sol = first_solution(store, terms, label)
        times.append(time.perf_counter() - t0)
        solution = list(sol) if sol is not None else None
        stats = built[0].stats.as_dict() if built is not None else {}
    kind_name = type(built[0].kind).__name__ if built is not None else str(kind)
    return BenchResult(n, label, level, kind_name, solution, statistics.median(times), times, stats)


def is_placement(rows):
    n = len(rows)
    return all(
        rows[i] != rows[j] and abs(rows[i] - rows[j]) != j - i
        for i in range(n) for j in range(i + 1, n)
    )
