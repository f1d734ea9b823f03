"""Text format for small constraint models.

::

    % comments run to the end of the line
    var x, y in 1..3;
    x #\\= y;
    x + y #= 4;
    solve maximize x;

A model has variable declarations, relations between linear expressions
(``+ - *`` over integers and declared names) and at most one ``solve``
statement (``satisfy`` when omitted).  Names must be declared before use.
"""

import re
from dataclasses import dataclass, field

from .errors import FdSyntaxError
from .model import OPS, Model, Rel, Sum

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|%[^\n]*)
  | (?P<nl>\n)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\#\\=|\#=<|\#>=|\#=|\#<|\#>|\.\.|[-+*(),;])
""", re.VERBOSE)

KEYWORDS = {"var", "in", "solve", "satisfy", "minimize", "maximize", "sum"}


@dataclass
class Decl:
    name: str
    lo: int
    hi: int
    line: int


@dataclass
class Constraint:
    op: str
    lhs: tuple
    rhs: tuple
    line: int


@dataclass
class ModelFile:
    decls: list = field(default_factory=list)
    constraints: list = field(default_factory=list)
    goal: str = "satisfy"
    objective: tuple = None
    source: str = "<model>"

    @property
    def names(self):
        return [d.name for d in self.decls]

    def build(self, kind=None):
        """A :class:`~fdsolve.model.Model` with every declaration and relation posted.

        Returns ``(model, env, objective)`` where *env* maps names to model
        variables and *objective* is an expression or ``None``.
        """
        m = Model(kind)
        env = {}
        for d in self.decls:
            env[d.name] = m.var(d.lo, d.hi, d.name)
        for c in self.constraints:
            if not m.post(Rel(c.op, to_expr(c.lhs, env), to_expr(c.rhs, env))):
                break
        objective = to_expr(self.objective, env) if self.objective is not None else None
        return m, env, objective


def to_expr(node, env):
    """Turn a parsed expression tuple into a model expression."""
    tag = node[0]
    if tag == "int":
        return node[1]
    if tag == "var":
        return env[node[1]]
    if tag == "neg":
        return -to_expr(node[1], env)
    if tag == "sum":
        return Sum([to_expr(x, env) for x in node[1]])
    a, b = to_expr(node[1], env), to_expr(node[2], env)
    if tag == "+":
        return a + b
    if tag == "-":
        return a - b
    return a * b


def tokenize(text, source="<model>"):
    pos, line, col0 = 0, 1, 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FdSyntaxError(f"unexpected character {text[pos]!r}", line, pos - col0 + 1, source)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            col0 = m.end()
        elif kind != "ws":
            value = m.group()
            if kind == "int":
                value = int(value)
            elif kind == "name" and value in KEYWORDS:
                kind = "kw"
            out.append((kind, value, line, pos - col0 + 1))
        pos = m.end()
    out.append(("eof", None, line, pos - col0 + 1))
    return out


class _Parser:
    def __init__(self, text, source):
        self.toks = tokenize(text, source)
        self.i = 0
        self.source = source
        self.declared = set()

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return FdSyntaxError(msg, tok[2], tok[3], self.source)

    def at(self, value):
        return self.peek()[1] == value and self.peek()[0] in ("op", "kw")

    def expect(self, value):
        tok = self.next()
        if tok[1] != value or tok[0] not in ("op", "kw"):
            raise self.error(f"expected {value!r}, found {_describe(tok)}", tok)
        return tok

    def parse(self):
        mf = ModelFile(source=self.source)
        solved = False
        while self.peek()[0] != "eof":
            if self.at("var"):
                mf.decls.extend(self.declaration())
            elif self.at("solve"):
                tok = self.next()
                if solved:
                    raise self.error("more than one solve statement", tok)
                solved = True
                self.solve(mf)
            else:
                mf.constraints.append(self.relation())
        return mf

    def declaration(self):
        tok = self.expect("var")
        names = [self.name()]
        while self.at(","):
            self.next()
            names.append(self.name())
        self.expect("in")
        lo = self.signed_int()
        self.expect("..")
        hi = self.signed_int()
        self.expect(";")
        if lo > hi:
            raise self.error(f"empty domain {lo}..{hi}", tok)
        for n, t in names:
            if n in self.declared:
                raise self.error(f"variable {n!r} declared twice", t)
            self.declared.add(n)
        return [Decl(n, lo, hi, tok[2]) for n, _ in names]

    def name(self):
        tok = self.next()
        if tok[0] != "name":
            raise self.error(f"expected a variable name, found {_describe(tok)}", tok)
        return tok[1], tok

    def signed_int(self):
        sign = 1
        if self.at("-"):
            self.next()
            sign = -1
        tok = self.next()
        if tok[0] != "int":
            raise self.error(f"expected an integer, found {_describe(tok)}", tok)
        return sign * tok[1]

    def solve(self, mf):
        tok = self.next()
        if tok[1] == "satisfy" and tok[0] == "kw":
            mf.goal = "satisfy"
        elif tok[1] in ("minimize", "maximize") and tok[0] == "kw":
            mf.goal = tok[1]
            mf.objective = self.expr()
        else:
            raise self.error(f"expected satisfy, minimize or maximize, found {_describe(tok)}", tok)
        self.expect(";")

    def relation(self):
        line = self.peek()[2]
        lhs = self.expr()
        tok = self.next()
        if tok[1] not in OPS:
            raise self.error(f"expected a relation operator, found {_describe(tok)}", tok)
        rhs = self.expr()
        self.expect(";")
        return Constraint(tok[1], lhs, rhs, line)

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.next()[1]
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.at("*"):
            self.next()
            node = ("*", node, self.factor())
        return node

    def factor(self):
        tok = self.next()
        kind, value = tok[0], tok[1]
        if kind == "int":
            return ("int", value)
        if kind == "name":
            if value not in self.declared:
                raise self.error(f"undeclared variable {value!r}", tok)
            return ("var", value)
        if kind == "kw" and value == "sum":
            self.expect("(")
            items = [self.expr()]
            while self.at(","):
                self.next()
                items.append(self.expr())
            self.expect(")")
            return ("sum", items)
        if kind == "op" and value == "-":
            return ("neg", self.factor())
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise self.error(f"expected an expression, found {_describe(tok)}", tok)


def _describe(tok):
    return "end of input" if tok[0] == "eof" else repr(tok[1])


def parse_model_text(text, source="<model>"):
    return _Parser(text, source).parse()


def parse_model(path):
    with open(path, encoding="utf-8") as f:
        return parse_model_text(f.read(), str(path))
