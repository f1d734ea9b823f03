"""Translation of arithmetic relations into library constraints.

A relation is first flattened into a linear form ``sum(c_i * x_i) + k``.
Positive and negative terms go to opposite sides, so subtraction never
reaches the solver: ``A #= B - C`` becomes ``'a=b+c'(B, A, C)``.  Sums of
more than two terms are split in half recursively, each half summed into a
fresh temporary, which gives for ``A #= B+C+D+E``::

    'a=b+c'(_T1, D, E)
    'a=b+c'(_T2, B, C)
    'a=b+c'(A, _T1, _T2)

Integer coefficients other than one are expanded by doubling.  Leaves known
to be integers at this point (literals, or model variables already bound to
an integer) are folded into the constant and select the ``t`` variants of
the library constraints.
"""

from typing import NamedTuple

from ..errors import UnsupportedConstraint
from .expr import Add, ModelVar, Mul, Param, Rel, Sub, Sum, Temp, deref


class Post(NamedTuple):
    """One library constraint call: name plus arguments (leaves or ints)."""

    name: str
    args: tuple

    def __str__(self):
        return f"'{self.name}'(" + ", ".join(map(repr, self.args)) + ")"


FAIL = Post("false", ())

# L op R + k  is the same relation as  R mirror(op) L - k
_MIRROR = {"#=": "#=", "#\\=": "#\\=", "#<": "#>", "#=<": "#>=", "#>": "#<", "#>=": "#=<"}

_CHECK = {
    "#=": lambda a, b: a == b,
    "#\\=": lambda a, b: a != b,
    "#<": lambda a, b: a < b,
    "#=<": lambda a, b: a <= b,
    "#>": lambda a, b: a > b,
    "#>=": lambda a, b: a >= b,
}

_BINARY = {"#=": "a=b", "#\\=": "a<>b", "#<": "a<b", "#=<": "a<=b"}
_OFFSET = {"#=": "a=b+t", "#\\=": "a<>b+t", "#=<": "a<=b+t"}

_UNARY = {"#=": "a=t", "#\\=": "a<>t", "#<": "a<t", "#=<": "a<=t", "#>": "a>t", "#>=": "a>=t"}


def _leaf(e):
    """An int for ground leaves, else the leaf object itself."""
    if isinstance(e, ModelVar):
        root = deref(e)
        return root.fd if root.fd.__class__ is int else root
    return e


def linear_form(e):
    """``(coeffs, k)`` with *coeffs* an insertion-ordered ``{leaf: int}``."""
    coeffs = {}
    k = _accumulate(e, 1, coeffs)
    return {x: c for x, c in coeffs.items() if c}, k


def _accumulate(e, scale, coeffs):
    if isinstance(e, int):
        return scale * e
    if isinstance(e, (ModelVar, Param)):
        leaf = _leaf(e)
        if isinstance(leaf, int):
            return scale * leaf
        coeffs[leaf] = coeffs.get(leaf, 0) + scale
        return 0
    if isinstance(e, Add):
        return _accumulate(e.a, scale, coeffs) + _accumulate(e.b, scale, coeffs)
    if isinstance(e, Sub):
        return _accumulate(e.a, scale, coeffs) + _accumulate(e.b, -scale, coeffs)
    if isinstance(e, Sum):
        return sum(_accumulate(x, scale, coeffs) for x in e.items)
    if isinstance(e, Mul):
        ca, ka = linear_form(e.a)
        cb, kb = linear_form(e.b)
        if ca and cb:
            raise UnsupportedConstraint(f"nonlinear product {e!r}")
        lin, k0, factor = (ca, ka, kb) if ca else (cb, kb, ka)
        for x, c in lin.items():
            coeffs[x] = coeffs.get(x, 0) + scale * c * factor
        return scale * k0 * factor
    raise TypeError(f"not an expression: {e!r}")


class Linearizer:
    """Accumulates the posts for one or more relations."""

    def __init__(self, temp_factory=Temp):
        self.posts = []
        self._temp = temp_factory

    def emit(self, name, *args):
        self.posts.append(Post(name, args))

    def add(self, rel: Rel):
        lhs, kl = linear_form(rel.lhs)
        rhs, kr = linear_form(rel.rhs)
        diff = dict(lhs)
        for x, c in rhs.items():
            diff[x] = diff.get(x, 0) - c
        left, right = [], []
        for x, c in diff.items():
            if c > 0:
                left.append(self._scaled(x, c))
            elif c < 0:
                right.append(self._scaled(x, -c))
        self._relate(left, rel.op, right, kr - kl)
        return self

    # -- helpers -------------------------------------------------------------------

    def _new_temp(self):
        return self._temp()

    def _scaled(self, x, c):
        if c == 1:
            return x
        if c % 2 == 0:
            h = self._scaled(x, c // 2)
            t = self._new_temp()
            self.emit("a=b+c", t, h, h)
            return t
        r = self._scaled(x, c - 1)
        t = self._new_temp()
        self.emit("a=b+c", t, r, x)
        return t

    def _pair(self, terms):
        """Reduce *terms* (two or more) to two operands."""
        if len(terms) == 2:
            return terms[0], terms[1]
        half = len(terms) // 2
        right = self._single(terms[half:])
        left = self._single(terms[:half])
        return right, left

    def _single(self, terms):
        if len(terms) == 1:
            return terms[0]
        a, b = self._pair(terms)
        t = self._new_temp()
        self.emit("a=b+c", t, a, b)
        return t

    def _relate(self, left, op, right, k):
        # left op right + k
        if len(left) < len(right):
            left, right, op, k = right, left, _MIRROR[op], -k
        if len(right) >= 2:
            right = [self._single(right)]
        if len(left) >= 3:
            left = list(self._pair(left))
        nl, nr = len(left), len(right)
        if nl == 0:
            if not _CHECK[op](0, k):
                self.posts.append(FAIL)
        elif nr == 0:
            if nl == 2:
                if op == "#=":
                    self.emit("a=b+c", k, left[0], left[1])
                    return
                # no 'a+b<>c'(L0, L1, k) here: k may lie outside a bounded
                # universe, where the complement rule cannot represent it
                left = [self._single(left)]
            self.emit(_UNARY[op], left[0], k)
        elif nl == 2:
            if k == 0 and op == "#=":
                self.emit("a=b+c", right[0], left[0], left[1])
            elif k == 0 and op == "#\\=":
                self.emit("a+b<>c", left[0], left[1], right[0])
            else:
                self._binary(self._single(left), op, right[0], k)
        else:
            self._binary(left[0], op, right[0], k)

    def _binary(self, a, op, b, k):
        # a op b + k; > and >= are turned around into < and =<
        if op == "#>":
            a, b, op, k = b, a, "#<", -k
        elif op == "#>=":
            a, b, op, k = b, a, "#=<", -k
        if k == 0:
            self.emit(_BINARY[op], a, b)
        elif op == "#<":
            self.emit("a<=b+t", a, b, k - 1)
        else:
            self.emit(_OFFSET[op], a, b, k)


def linearize(r: Rel, temp_factory=Temp):
    """The list of :class:`Post` records equivalent to *r*.

    >>> from fdsolve.model import ModelVar
    >>> a, b, c, d, e = (ModelVar(n) for n in "ABCDE")
    >>> [p.name for p in linearize(a == b + c + d + e)]
    ['a=b+c', 'a=b+c', 'a=b+c']
    >>> print(*linearize(a != b + 3))
    'a<>b+t'(A, B, 3)
    """
    if not isinstance(r, Rel):
        raise TypeError(f"not a relation: {r!r}")
    return Linearizer(temp_factory).add(r).posts

