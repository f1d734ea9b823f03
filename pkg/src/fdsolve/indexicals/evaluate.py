"""Tree-walking evaluation of indexical terms and ranges.

This is the reference semantics of the DSL; the compiler generates code
with the same behaviour.  *env* maps parameter names to FD terms (or ints
for ``c(I)`` parameters).
"""

from ..errors import ContractError, IndeterminateBound
from ..ranges.bounds import bound_add, bound_mul, bound_sub, is_finite
from . import ast


class _Suspended:
    def __repr__(self):
        return "SUSPENDED"

    def __bool__(self):
        raise TypeError("SUSPENDED has no truth value")


#: Returned when a ``val(Y)`` operand is not yet fixed.
SUSPENDED = _Suspended()

_BOUND_OPS = {"+": bound_add, "-": bound_sub, "*": bound_mul}


class _Suspend(Exception):
    pass


def _term(node, store, env):
    if isinstance(node, ast.IntLit):
        return node.value
    if isinstance(node, ast.NamedBound):
        return store.kind.bound_const(node.name)
    if isinstance(node, ast.Const):
        return env[node.param]
    t = env.get(getattr(node, "param", None))
    if isinstance(node, ast.Val):
        r = store.get_range(t)
        if not r.is_singleton():
            raise _Suspend()
        return r.singleton_value()
    if isinstance(node, ast.Min):
        return store.get_range(t).min()
    if isinstance(node, ast.Max):
        return store.get_range(t).max()
    if isinstance(node, ast.BinTerm):
        return _BOUND_OPS[node.op](_term(node.left, store, env), _term(node.right, store, env))
    raise ContractError(f"not a term: {node!r}")


def _range(node, store, env):
    """Evaluate with ``None`` standing for the empty set."""
    kind = store.kind
    if isinstance(node, ast.Interval):
        return kind.interval(_term(node.lo, store, env), _term(node.hi, store, env))
    if isinstance(node, ast.Singleton):
        v = _term(node.term, store, env)
        return kind.singleton(v) if is_finite(v) else None
    if isinstance(node, ast.Dom):
        return store.get_range(env[node.param])
    if isinstance(node, ast.Union):
        a = _range(node.left, store, env)
        b = _range(node.right, store, env)
        if a is None:
            return b
        return a if b is None else a.union(b)
    if isinstance(node, ast.Intersect):
        a = _range(node.left, store, env)
        b = _range(node.right, store, env)
        return None if a is None or b is None else a.intersect(b)
    if isinstance(node, ast.Complement):
        a = _range(node.arg, store, env)
        return kind.universe() if a is None else a.complement()
    if isinstance(node, ast.Pointwise):
        a = _range(node.range, store, env)
        n = _term(node.term, store, env)
        if not is_finite(n):
            raise IndeterminateBound(f"pointwise {node.op} with infinite operand")
        if a is None:
            return None
        if node.op == "+":
            return a.add(n)
        if node.op == "-":
            return a.add(-n)
        return a.mul(n)
    raise ContractError(f"not a range expression: {node!r}")


def eval_term(node, store, env):
    """Bound value of a term, or :data:`SUSPENDED`."""
    try:
        return _term(node, store, env)
    except _Suspend:
        return SUSPENDED


def eval_range(node, store, env):
    """Range denoted by *node*; :data:`SUSPENDED`; or ``None`` when empty."""
    try:
        return _range(node, store, env)
    except _Suspend:
        return SUSPENDED
