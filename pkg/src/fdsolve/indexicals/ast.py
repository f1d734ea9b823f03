"""Syntax trees for indexical definitions (``name(P1, ..., Pn) +: X in r, ...``)."""

from dataclasses import dataclass

# -- terms (evaluate to bounds) ------------------------------------------------


@dataclass(frozen=True)
class IntLit:
    value: int

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class NamedBound:
    name: str  # "inf" or "sup"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Min:
    param: str

    def __str__(self):
        return f"min({self.param})"


@dataclass(frozen=True)
class Max:
    param: str

    def __str__(self):
        return f"max({self.param})"


@dataclass(frozen=True)
class Val:
    param: str

    def __str__(self):
        return f"val({self.param})"


@dataclass(frozen=True)
class Const:
    """``c(I)``: a parameter bound to an integer when the constraint is posted."""

    param: str

    def __str__(self):
        return f"c({self.param})"


@dataclass(frozen=True)
class BinTerm:
    op: str  # "+", "-" or "*"
    left: object
    right: object

    def __str__(self):
        return f"({self.left}{self.op}{self.right})"


# -- range expressions ---------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object

    def __str__(self):
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class Singleton:
    term: object

    def __str__(self):
        return "{" + str(self.term) + "}"


@dataclass(frozen=True)
class Dom:
    param: str

    def __str__(self):
        return f"dom({self.param})"


@dataclass(frozen=True)
class Union:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} \\/ {self.right})"


@dataclass(frozen=True)
class Intersect:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} /\\ {self.right})"


@dataclass(frozen=True)
class Complement:
    arg: object

    def __str__(self):
        inner = str(self.arg)
        return f"-{inner}" if inner[0] in "({" else f"-({inner})"


@dataclass(frozen=True)
class Pointwise:
    op: str  # "+", "-" or "*"
    range: object
    term: object

    def __str__(self):
        return f"({self.range}{self.op}{self.term})"


# -- definitions -----------------------------------------------------------------


@dataclass(frozen=True)
class Param:
    name: str
    is_const: bool = False


@dataclass(frozen=True)
class Rule:
    target: str
    range: object

    def __str__(self):
        return f"{self.target} in {self.range}"


@dataclass(frozen=True)
class IndexicalDef:
    name: str
    params: tuple
    rules: tuple

    @property
    def arity(self):
        return len(self.params)

    def param_index(self, name):
        for i, p in enumerate(self.params):
            if p.name == name:
                return i
        raise KeyError(name)

    def __str__(self):
        head = ", ".join(p.name for p in self.params)
        body = ",\n    ".join(str(r) for r in self.rules)
        return f"{self.name}({head}) +:\n    {body}."


def walk(node):
    """Yield *node* and all its sub-nodes, depth first."""
    yield node
    for child in children(node):
        yield from walk(child)


def children(node):
    if isinstance(node, (BinTerm, Union, Intersect)):
        return (node.left, node.right)
    if isinstance(node, Interval):
        return (node.lo, node.hi)
    if isinstance(node, Singleton):
        return (node.term,)
    if isinstance(node, Complement):
        return (node.arg,)
    if isinstance(node, Pointwise):
        return (node.range, node.term)
    return ()
