"""Model variables, arithmetic expressions and relations.

Python operators build the trees: ``x + 2 * y <= z`` is a :class:`Rel`.
Relations refuse to be used as booleans so that ``if x == y`` cannot pass
silently.
"""

import itertools

from ..errors import ClpfdTypeError

OPS = ("#=", "#\\=", "#<", "#=<", "#>", "#>=")

_counter = itertools.count(1)


def _check_operand(x):
    if isinstance(x, bool) or not isinstance(x, (int, Expr)):
        raise ClpfdTypeError(f"not an integer expression: {x!r}")
    return x


class Expr:
    __slots__ = ()

    def __add__(self, other):
        return Add(self, _check_operand(other))

    def __radd__(self, other):
        return Add(_check_operand(other), self)

    def __sub__(self, other):
        return Sub(self, _check_operand(other))

    def __rsub__(self, other):
        return Sub(_check_operand(other), self)

    def __mul__(self, other):
        return Mul(self, _check_operand(other))

    def __rmul__(self, other):
        return Mul(_check_operand(other), self)

    def __neg__(self):
        return Mul(-1, self)

    def __pos__(self):
        return self

    def __eq__(self, other):
        return Rel("#=", self, _check_operand(other))

    def __ne__(self, other):
        return Rel("#\\=", self, _check_operand(other))

    def __lt__(self, other):
        return Rel("#<", self, _check_operand(other))

    def __le__(self, other):
        return Rel("#=<", self, _check_operand(other))

    def __gt__(self, other):
        return Rel("#>", self, _check_operand(other))

    def __ge__(self, other):
        return Rel("#>=", self, _check_operand(other))

    __hash__ = object.__hash__


class ModelVar(Expr):
    """A logical variable of the modeling layer.

    It starts unbound; the first constraint that mentions it attaches a
    fresh FD variable (``fd``).  ``alias`` links variables made equal by
    :func:`~fdsolve.model.unify` before either was attached.  ``ground``
    receives the value once the FD variable becomes a singleton.
    """

    __slots__ = ("id", "name", "fd", "alias", "ground")
    hidden = False

    def __init__(self, name=None):
        self.id = next(_counter)
        self.name = name or f"_G{self.id}"
        self.fd = None
        self.alias = None
        self.ground = None

    @property
    def value(self):
        root = deref(self)
        if root.fd.__class__ is int:
            return root.fd
        return root.ground

    def __repr__(self):
        return self.name


class Temp(ModelVar):
    """Auxiliary variable introduced by linearization."""

    __slots__ = ()
    hidden = True

    def __init__(self, name=None):
        super().__init__(name)
        if name is None:
            self.name = f"_T{self.id}"


class Param(Expr):
    """Placeholder for an argument of a compiled predicate."""

    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


class Add(Expr):
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a, self.b = a, b

    def __repr__(self):
        return f"{self.a!r}+{_paren(self.b, Sub, Add)}"


class Sub(Expr):
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a, self.b = a, b

    def __repr__(self):
        return f"{self.a!r}-{_paren(self.b, Add, Sub)}"


class Mul(Expr):
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a, self.b = a, b

    def __repr__(self):
        return f"{_paren(self.a, Add, Sub)}*{_paren(self.b, Add, Sub)}"


class Sum(Expr):
    __slots__ = ("items",)

    def __init__(self, items):
        self.items = tuple(_check_operand(x) for x in items)

    def __repr__(self):
        return "sum([" + ", ".join(map(repr, self.items)) + "])"


def _paren(x, *kinds):
    return f"({x!r})" if isinstance(x, kinds) or (isinstance(x, int) and x < 0) else repr(x)


class Rel:
    """``lhs op rhs`` with ``op`` one of :data:`OPS`."""

    __slots__ = ("op", "lhs", "rhs")

    def __init__(self, op, lhs, rhs):
        if op not in OPS:
            raise ValueError(f"unknown relation {op!r}")
        self.op = op
        self.lhs = _check_operand(lhs)
        self.rhs = _check_operand(rhs)

    def __bool__(self):
        raise TypeError("a constraint has no truth value; post it instead")

    def __repr__(self):
        return f"{self.lhs!r} {self.op} {self.rhs!r}"


def rel(lhs, op, rhs):
    return Rel(op, lhs, rhs)


def deref(v):
    while v.alias is not None:
        v = v.alias
    return v
