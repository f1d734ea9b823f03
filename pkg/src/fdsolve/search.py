"""Labeling and branch-and-bound optimisation."""

from dataclasses import dataclass
from typing import Optional

from .errors import SearchLimitExceeded

LEFTMOST = "leftmost"
FIRST_FAIL = "first_fail"
ASCENDING = "ascending"


@dataclass(frozen=True)
class LabelOptions:
    var_select: str = LEFTMOST
    val_select: str = ASCENDING

    @property
    def mode(self):
        return "ff" if self.var_select == FIRST_FAIL else "step"

    @classmethod
    def coerce(cls, opts):
        if isinstance(opts, cls):
            return opts
        if opts in (None, "step", LEFTMOST):
            return cls(LEFTMOST)
        if opts in ("ff", FIRST_FAIL):
            return cls(FIRST_FAIL)
        raise ValueError(f"unknown labeling mode {opts!r}")


STEP = LabelOptions(LEFTMOST)
FF = LabelOptions(FIRST_FAIL)


class Solution:
    """Values of the labeled variables, in labeling order."""

    __slots__ = ("variables", "values")

    def __init__(self, variables, values):
        self.variables = tuple(variables)
        self.values = tuple(values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def items(self):
        return list(zip(self.variables, self.values))

    def __eq__(self, other):
        if isinstance(other, Solution):
            return self.values == other.values
        if isinstance(other, (list, tuple)):
            return self.values == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __str__(self):
        return "[" + ",".join(map(str, self.values)) + "]"

    def __repr__(self):
        return f"Solution({list(self.values)})"


def _leftmost(variables):
    for v in variables:
        if v.__class__ is not int and not v.range.is_singleton():
            return v
    return None


def _first_fail(variables):
    best = None
    best_size = None
    for v in variables:
        if v.__class__ is int:
            continue
        n = v.range.size()
        if n > 1 and (best is None or n < best_size):
            best, best_size = v, n
            if n == 2:
                break
    return best


def labeling(store, variables, opts="step", node_limit=None):
    """Enumerate all assignments of *variables* depth first.

    Yields a :class:`Solution` while the store holds that assignment, so
    callers can read other variables at that point.  When the sequence is
    exhausted the store is back in its state before the call.
    """
    opts = LabelOptions.coerce(opts)
    select = _first_fail if opts.var_select == FIRST_FAIL else _leftmost
    variables = list(variables)
    stats = store.stats
    root = store.mark()
    stack = []
    while True:
        var = select(variables)
        if var is None:
            stats.solutions += 1
            yield Solution(variables, [store.integerize(v) for v in variables])
        else:
            stack.append((store.mark(), var, var.range.enum()))
        while stack:
            m, var, values = stack[-1]
            store.undo_to(m)
            placed = False
            for v in values:
                stats.nodes += 1
                if node_limit is not None and stats.nodes > node_limit:
                    raise SearchLimitExceeded(f"more than {node_limit} search nodes")
                if store.tell_value(var, v):
                    placed = True
                    break
                stats.backtracks += 1
                store.undo_to(m)
            if placed:
                break
            stack.pop()
        else:
            store.undo_to(root)
            store.release(root)
            return


def first_solution(store, variables, opts="step", node_limit=None):
    """The first solution (store left in that state), or ``None``."""
    return next(labeling(store, variables, opts, node_limit), None)


@dataclass
class Optimum:
    solution: Solution
    value: int
    improvements: int
    restarts: int


def _as_goal(store, goal, opts):
    if callable(goal):
        return goal
    variables = list(goal)
    return lambda: labeling(store, variables, opts)


class _TermObjective:
    """Objective held by an FD term: bounding it is a tell on that term."""

    def __init__(self, term):
        self.term = term

    def value(self, store):
        return store.integerize(self.term)

    def tighten(self, store, value, maximize):
        if maximize:
            return store.tell_interval(self.term, value + 1, store.kind.bound_const("sup"))
        return store.tell_interval(self.term, store.kind.bound_const("inf"), value - 1)


def minimize(store, goal, objective, opts="step", maximize=False) -> Optional[Optimum]:
    """Branch and bound with restart.

    *goal* is either a callable returning a solution iterator or a list of
    variables to label.  *objective* is an FD term, or any object with
    ``value(store)`` and ``tighten(store, value, maximize)`` methods.  After
    each solution the search restarts from the initial state with the
    objective bounded strictly better than the value just found, until no
    solution remains.  The store is returned to its initial state.
    """
    goal = _as_goal(store, goal, opts)
    if not hasattr(objective, "tighten"):
        objective = _TermObjective(objective)
    root = store.mark()
    best = None
    improvements = restarts = 0
    while True:
        gen = goal()
        sol = next(iter(gen), None)
        if sol is None:
            break
        value = objective.value(store)
        best = (sol, value)
        improvements += 1
        if hasattr(gen, "close"):
            gen.close()
        store.undo_to(root)
        restarts += 1
        store.stats.restarts += 1
        if not objective.tighten(store, value, maximize):
            break
    store.undo_to(root)
    store.release(root)
    if best is None:
        return None
    return Optimum(best[0], best[1], improvements, restarts)


def maximize(store, goal, objective, opts="step") -> Optional[Optimum]:
    return minimize(store, goal, objective, opts, maximize=True)
