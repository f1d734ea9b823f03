"""Compile indexical definitions to kernel programs.

Each rule ``X in r`` becomes a generated Python function
``rule(store, *params)`` that evaluates ``r`` against the current store and
tells the result to ``X``.  The function is built once per definition and
shared by every post; posting only creates propagators and subscribes them.

Evaluation follows set semantics internally (``None`` stands for the empty
set, so ``-{v}`` with ``v`` outside a bits universe is the whole universe);
the rule fails only when the range finally told is empty.  A rule mentioning
``val(Y)`` is suspended, i.e. succeeds without acting, until ``Y`` is fixed.
"""

from ..errors import ContractError, IndeterminateBound
from ..propagation import DOM, MAX, MIN, VAL
from ..ranges.bounds import bound_add, bound_mul, bound_sub
from . import ast
from .parser import parse_indexical, parse_indexicals

_BOUND_OPS = {"+": "_badd", "-": "_bsub", "*": "_bmul"}
_POINTWISE = {"+": "_padd", "-": "_psub", "*": "_pmul"}
_CHAIN_OF = {ast.Min: MIN, ast.Max: MAX, ast.Dom: DOM, ast.Val: VAL}


# -- runtime helpers referenced by generated code ----------------------------------


def _val(t):
    if t.__class__ is int:
        return t
    r = t.range
    return r.min() if r.is_singleton() else None


def _min(t):
    return t if t.__class__ is int else t.range.min()


def _max(t):
    return t if t.__class__ is int else t.range.max()


def _dom(kind, t):
    return kind.singleton(t) if t.__class__ is int else t.range


def _single(kind, b):
    return kind.singleton(b) if b.__class__ is int else None


def _set(kind, values):
    return kind.from_values([v for v in values if v.__class__ is int])


def _compl(kind, r):
    return kind.universe() if r is None else r.complement()


def _union(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a.union(b)


def _inter(a, b):
    if a is None or b is None:
        return None
    return a.intersect(b)


def _finite(n):
    if n.__class__ is not int:
        raise IndeterminateBound(f"pointwise operation with infinite operand {n}")
    return n


def _padd(r, n):
    return None if r is None else r.add(_finite(n))


def _psub(r, n):
    return None if r is None else r.add(-_finite(n))


def _pmul(r, n):
    return None if r is None else r.mul(_finite(n))


_RUNTIME = {
    "_val": _val, "_min": _min, "_max": _max, "_dom": _dom, "_single": _single,
    "_set": _set, "_compl": _compl, "_union": _union, "_inter": _inter,
    "_padd": _padd, "_psub": _psub, "_pmul": _pmul,
    "_badd": bound_add, "_bsub": bound_sub, "_bmul": bound_mul,
}


# -- analysis -------------------------------------------------------------------------


def rule_dependencies(rule):
    """``{(param, ChainType)}`` a rule must subscribe to."""
    deps = set()
    for node in ast.walk(rule.range):
        chain = _CHAIN_OF.get(type(node))
        if chain is not None and node.param != rule.target:
            deps.add((node.param, chain))
    return frozenset(deps)


def analyze_dependencies(defn):
    return [rule_dependencies(r) for r in defn.rules]


# -- code generation -------------------------------------------------------------------


def _ident(name):
    return f"p_{name}"


class _RuleGen:
    def __init__(self, defn, rule):
        self.defn = defn
        self.rule = rule
        self.prologue = []
        self.cached = {}

    def local(self, key, init):
        name = self.cached.get(key)
        if name is None:
            name = f"t{len(self.cached)}"
            self.cached[key] = name
            self.prologue.append(f"    {name} = {init}")
        return name

    def term(self, node):
        """Return ``(python_expr, statically_finite)``."""
        if isinstance(node, ast.IntLit):
            return repr(node.value), True
        if isinstance(node, ast.NamedBound):
            return self.local(("bound", node.name), f"kind.bound_const({node.name!r})"), False
        if isinstance(node, ast.Const):
            return _ident(node.param), True
        if isinstance(node, ast.Val):
            return self.vals[node.param], True
        if isinstance(node, ast.Min):
            return self.local(("min", node.param), f"_min({_ident(node.param)})"), False
        if isinstance(node, ast.Max):
            return self.local(("max", node.param), f"_max({_ident(node.param)})"), False
        if isinstance(node, ast.BinTerm):
            a, fa = self.term(node.left)
            b, fb = self.term(node.right)
            if fa and fb:
                return f"({a} {node.op} {b})", True
            return f"{_BOUND_OPS[node.op]}({a}, {b})", False
        raise ContractError(f"not a term: {node!r}")

    def singletons(self, node):
        """Terms of a union made only of singletons, else ``None``."""
        if isinstance(node, ast.Singleton):
            return [node.term]
        if isinstance(node, ast.Union):
            a = self.singletons(node.left)
            b = self.singletons(node.right)
            if a is not None and b is not None:
                return a + b
        return None

    def range(self, node):
        items = self.singletons(node)
        if items is not None:
            if len(items) == 1:
                code, finite = self.term(items[0])
                return f"kind.singleton({code})" if finite else f"_single(kind, {code})"
            codes = ", ".join(self.term(t)[0] for t in items)
            return f"_set(kind, ({codes},))"
        if isinstance(node, ast.Interval):
            return f"kind.interval({self.term(node.lo)[0]}, {self.term(node.hi)[0]})"
        if isinstance(node, ast.Dom):
            return f"_dom(kind, {_ident(node.param)})"
        if isinstance(node, ast.Union):
            return f"_union({self.range(node.left)}, {self.range(node.right)})"
        if isinstance(node, ast.Intersect):
            return f"_inter({self.range(node.left)}, {self.range(node.right)})"
        if isinstance(node, ast.Complement):
            return f"_compl(kind, {self.range(node.arg)})"
        if isinstance(node, ast.Pointwise):
            return f"{_POINTWISE[node.op]}({self.range(node.range)}, {self.term(node.term)[0]})"
        raise ContractError(f"not a range expression: {node!r}")

    def source(self, fname):
        rule = self.rule
        val_params = sorted({n.param for n in ast.walk(rule.range) if isinstance(n, ast.Val)})
        self.vals = {p: f"v_{p}" for p in val_params}
        head = ", ".join(_ident(p.name) for p in self.defn.params)
        lines = [f"def {fname}(store, {head}):", f"    # {rule}"]
        for p in val_params:
            lines.append(f"    v_{p} = _val({_ident(p)})")
            lines.append(f"    if v_{p} is None:")
            lines.append("        return True")
        lines.append("    kind = store.kind")
        expr = self.range(rule.range)
        lines.extend(self.prologue)
        lines.append(f"    r = {expr}")
        lines.append("    if r is None:")
        lines.append("        store.stats.failures += 1")
        lines.append("        return False")
        lines.append(f"    return store.tell_range({_ident(rule.target)}, r)")
        return "\n".join(lines) + "\n"


class CompiledRule:
    __slots__ = ("rule", "target", "fn", "subscriptions", "source")

    def __init__(self, rule, target, fn, subscriptions, source):
        self.rule = rule
        self.target = target
        self.fn = fn
        self.subscriptions = subscriptions
        self.source = source


class CompiledIndexical:
    """An indexical definition ready to be posted on any store."""

    def __init__(self, defn):
        self.defn = defn
        self.name = defn.name
        self.arity = defn.arity
        self.const_positions = tuple(i for i, p in enumerate(defn.params) if p.is_const)
        self.rules = []
        for k, rule in enumerate(defn.rules):
            fname = f"rule_{k}"
            src = _RuleGen(defn, rule).source(fname)
            namespace = dict(_RUNTIME)
            exec(compile(src, f"<indexical {defn.name}/{k}>", "exec"), namespace)
            subs = tuple(sorted((defn.param_index(p), c) for p, c in rule_dependencies(rule)))
            self.rules.append(CompiledRule(rule, defn.param_index(rule.target),
                                           namespace[fname], subs, src))

    @property
    def source(self):
        return "\n".join(r.source for r in self.rules)

    def post(self, store, *args):
        """Install the rules on *args* and run each once."""
        if len(args) != self.arity:
            raise ContractError(f"{self.name} expects {self.arity} arguments, got {len(args)}")
        for i in self.const_positions:
            if args[i].__class__ is not int:
                raise ContractError(f"argument {i + 1} of {self.name} must be an integer")
        props = []
        for k, rule in enumerate(self.rules):
            g = store.propagator(rule.fn, *args, name=f"{self.name}#{k}")
            seen = set()
            for i, chain in rule.subscriptions:
                t = args[i]
                if t.__class__ is int:
                    continue
                key = (t.index, chain)
                if key not in seen:
                    seen.add(key)
                    store.add_propag(t, chain, g)
            props.append(g)
        for g in props:
            if not g(store):
                return False
        return True

    __call__ = post

    def __repr__(self):
        return f"<CompiledIndexical {self.name}/{self.arity}>"


def compile_indexical(defn):
    if isinstance(defn, str):
        defn = parse_indexical(defn)
    return CompiledIndexical(defn)


def compile_indexicals(text, source=None):
    """Compile every definition in *text*; returns ``{name: CompiledIndexical}``."""
    return {d.name: CompiledIndexical(d) for d in parse_indexicals(text, source)}
