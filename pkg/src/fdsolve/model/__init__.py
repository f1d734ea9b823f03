"""Modeling front end: variables, arithmetic relations and their compilation.

>>> m = Model()
>>> x, y = m.var(1, 3, "x"), m.var(1, 3, "y")
>>> m.post(x + 1 == y)
True
>>> [str(s) for s in m.solutions()]
['[1,2]', '[2,3]']
"""

from ..constraints import post_domain
from ..errors import ContractError
from ..fdvar import VarStore
from ..search import Solution, labeling
from ..search import minimize as _minimize
from .expr import OPS, Add, Expr, ModelVar, Mul, Param, Rel, Sub, Sum, Temp, deref, rel
from .linearize import FAIL, Linearizer, Post, linear_form, linearize
from .wrap import Predicate, post_rel, predicate, unify, wrapper


def fd_sum(items):
    return Sum(items)


class ExprObjective:
    """An arithmetic expression used as a branch and bound objective.

    The bound is posted as a relation on the expression itself, so no FD
    variable has to hold the objective value (which may lie outside the
    universe of a bounded range kind).
    """

    def __init__(self, expr):
        self.expr = expr
        self.coeffs, self.const = linear_form(expr)

    def value(self, store):
        total = self.const
        for leaf, c in self.coeffs.items():
            total += c * store.integerize(wrapper(store, leaf))
        return total

    def tighten(self, store, value, maximize):
        if maximize:
            return post_rel(store, rel(self.expr, "#>", value))
        return post_rel(store, rel(self.expr, "#<", value))


class Model:
    """A store plus the model variables declared on it.

    Posting stops at the first failure; the model is then unsatisfiable and
    every search over it is empty.
    """

    def __init__(self, kind=None):
        self.store = VarStore(kind)
        self.variables = []
        self.failed = False

    def var(self, lo, hi, name=None):
        inf, sup = self.store.kind.bound_const("inf"), self.store.kind.bound_const("sup")
        if lo < inf or hi > sup:
            raise ContractError(
                f"domain {lo}..{hi} is outside the universe {inf}..{sup} of this range kind")
        v = ModelVar(name)
        self.variables.append(v)
        if not self.failed and not post_domain(self.store, [wrapper(self.store, v)], lo, hi):
            self.failed = True
        return v

    def vars(self, n, lo, hi, prefix="x"):
        return [self.var(lo, hi, f"{prefix}{i}") for i in range(n)]

    def post(self, *rels):
        for r in rels:
            if self.failed:
                break
            if not post_rel(self.store, r):
                self.failed = True
        return not self.failed

    def unify(self, a, b):
        if not self.failed and not unify(self.store, a, b):
            self.failed = True
        return not self.failed

    def _terms(self, variables):
        variables = list(self.variables if variables is None else variables)
        return variables, [wrapper(self.store, v) for v in variables]

    def solutions(self, variables=None, label="step", node_limit=None):
        """Every solution, as :class:`Solution` objects over model variables."""
        if self.failed:
            return
        variables, terms = self._terms(variables)
        for sol in labeling(self.store, terms, label, node_limit):
            yield Solution(variables, sol.values)

    def solve(self, variables=None, label="step"):
        """The first solution or ``None``; the store is left unchanged."""
        gen = self.solutions(variables, label)
        sol = next(gen, None)
        gen.close()
        return sol

    def minimize(self, expr, variables=None, label="step", maximize=False):
        """Optimum of *expr* by branch and bound, or ``None`` if unsatisfiable.

        Every model variable in *expr* must be among the labeled variables.
        """
        if self.failed:
            return None
        variables, terms = self._terms(variables)
        opt = _minimize(self.store, terms, ExprObjective(expr), label, maximize)
        if opt is not None:
            opt.solution = Solution(variables, opt.solution.values)
        return opt

    def maximize(self, expr, variables=None, label="step"):
        return self.minimize(expr, variables, label, maximize=True)


__all__ = [
    "FAIL", "OPS", "Add", "Expr", "ExprObjective", "Linearizer", "Model", "ModelVar", "Mul", "Param", "Post",
    "Predicate", "Rel", "Sub", "Sum", "Temp", "deref", "fd_sum", "linear_form", "linearize",
    "post_rel", "predicate", "rel", "unify", "wrapper",
]
