"""Parser for indexical definitions.

Concrete syntax::

    % comment to end of line
    name(P1, ..., Pn) +:
        P in RANGE,
        ...
        P in RANGE.

    RANGE ::= RANGE \\/ RANGE | RANGE /\\ RANGE        (\\/ binds loosest)
            | RANGE + T | RANGE - T | RANGE * T        (T is an atomic term)
            | - RANGE | dom(P) | {TERM, ...} | TERM .. TERM | ( RANGE )
    TERM  ::= TERM + TERM | TERM - TERM | TERM * TERM | - TERM
            | min(P) | max(P) | val(P) | c(P) | inf | sup | INT | ( TERM )

Definition names may be quoted, Prolog style: ``'a<>b+t'(A, B, T) +: ...``.
A leading ``-`` is read as a negative bound when what follows parses as an
interval (``-1..5``) and as complementation otherwise (``-{val(Y)}``).
"""

import re

from ..errors import FdSyntaxError, UnknownParameter
from . import ast

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|%[^\n]*)
  | (?P<int>\d+)
  | (?P<quoted>'(?:[^'\\]|\\.)*')
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\+:|\.\.|\\/|/\\|[-+*(){},.])
    """,
    re.VERBOSE,
)

_TERM_FUNCS = {"min": ast.Min, "max": ast.Max, "val": ast.Val, "c": ast.Const}


class Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def tokenize(text, source=None):
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FdSyntaxError(f"unexpected character {text[pos]!r}",
                                line, pos - line_start + 1, source)
        kind = m.lastgroup
        if kind != "ws":
            tok_text = m.group()
            if kind == "quoted":
                tok_text = tok_text[1:-1].replace("\\'", "'")
                kind = "ident"
            tokens.append(Token(kind, tok_text, line, pos - line_start + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Backtrack(Exception):
    pass


class Parser:
    def __init__(self, text, source=None):
        self.source = source
        self.toks = tokenize(text, source)
        self.i = 0
        self.speculating = 0

    # -- token helpers ---------------------------------------------------------

    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        j = min(self.i + k, len(self.toks) - 1)
        return self.toks[j]

    def error(self, message, tok=None):
        if self.speculating:
            raise _Backtrack()
        tok = tok or self.tok
        raise FdSyntaxError(message, tok.line, tok.col, self.source)

    def at(self, text):
        t = self.tok
        return t.kind in ("op", "ident") and t.text == text

    def expect(self, text):
        if not self.at(text):
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        tok = self.tok
        self.i += 1
        return tok

    def ident(self):
        tok = self.tok
        if tok.kind != "ident":
            self.error(f"expected a name, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok

    # -- definitions -----------------------------------------------------------

    def parse_all(self):
        defs = []
        while self.tok.kind != "eof":
            defs.append(self.definition())
        return defs

    def definition(self):
        name = self.ident().text
        self.expect("(")
        heads = [self.ident()]
        while self.at(","):
            self.i += 1
            heads.append(self.ident())
        self.expect(")")
        self.expect("+:")
        names = [t.text for t in heads]
        if len(set(names)) != len(names):
            self.error(f"repeated parameter in head of {name}", heads[0])
        self.params = {t.text: t for t in heads}
        rules = [self.rule()]
        while self.at(","):
            self.i += 1
            rules.append(self.rule())
        if self.at("."):
            self.i += 1
        elif self.tok.kind != "eof":
            self.error(f"expected ',' or '.', found {self.tok.text!r}")
        return _finish(name, names, rules, self.source)

    def rule(self):
        target = self.param_ref()
        self.expect("in")
        return ast.Rule(target.text, self.range_expr()), target

    def param_ref(self):
        tok = self.ident()
        if tok.text not in self.params:
            raise UnknownParameter(f"unknown parameter {tok.text}", tok.line, tok.col, self.source)
        return tok

    # -- ranges ------------------------------------------------------------------

    def range_expr(self):
        node = self.range_inter()
        while self.at("\\/"):
            self.i += 1
            node = ast.Union(node, self.range_inter())
        return node

    def range_inter(self):
        node = self.range_point()
        while self.at("/\\"):
            self.i += 1
            node = ast.Intersect(node, self.range_point())
        return node

    def range_point(self):
        # r + t, r - t, r * t with the usual arithmetic precedence on the term side
        node = self.range_unary()
        while self.tok.kind == "op" and self.tok.text in "+-*":
            op = self.tok.text
            self.i += 1
            term = self.term_unary() if op == "*" else self.term_product()
            node = ast.Pointwise(op, node, term)
        return node

    def range_unary(self):
        interval = self.try_interval()
        if interval is not None:
            return interval
        if self.at("-"):
            self.i += 1
            return ast.Complement(self.range_unary())
        if self.at("dom") and self.peek().text == "(":
            self.i += 2
            p = self.param_ref()
            self.expect(")")
            return ast.Dom(p.text)
        if self.at("{"):
            self.i += 1
            node = ast.Singleton(self.term())
            while self.at(","):
                self.i += 1
                node = ast.Union(node, ast.Singleton(self.term()))
            self.expect("}")
            return node
        if self.at("("):
            self.i += 1
            node = self.range_expr()
            self.expect(")")
            return node
        self.error(f"expected a range expression, found {self.tok.text or 'end of input'!r}")

    def try_interval(self):
        start = self.i
        self.speculating += 1
        try:
            lo = self.term()
            if not self.at(".."):
                raise _Backtrack()
        except _Backtrack:
            self.i = start
            return None
        finally:
            self.speculating -= 1
        self.i += 1
        return ast.Interval(lo, self.term())

    # -- terms ----------------------------------------------------------------------

    def term(self):
        node = self.term_product()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            node = ast.BinTerm(op, node, self.term_product())
        return node

    def term_product(self):
        node = self.term_unary()
        while self.at("*"):
            self.i += 1
            node = ast.BinTerm("*", node, self.term_unary())
        return node

    def term_unary(self):
        if self.at("-"):
            self.i += 1
            arg = self.term_unary()
            if isinstance(arg, ast.IntLit):
                return ast.IntLit(-arg.value)
            return ast.BinTerm("-", ast.IntLit(0), arg)
        return self.term_atom()

    def term_atom(self):
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return ast.IntLit(int(tok.text))
        if tok.kind == "ident":
            if tok.text in ("inf", "sup"):
                self.i += 1
                return ast.NamedBound(tok.text)
            if tok.text in _TERM_FUNCS and self.peek().text == "(":
                self.i += 2
                p = self.param_ref()
                self.expect(")")
                return _TERM_FUNCS[tok.text](p.text)
        if tok.text == "(" and tok.kind == "op":
            self.i += 1
            node = self.term()
            self.expect(")")
            return node
        self.error(f"expected a term, found {tok.text or 'end of input'!r}")


def _finish(name, names, rules_with_tokens, source):
    usage = {n: set() for n in names}
    where = {}
    for rule, target_tok in rules_with_tokens:
        usage[rule.target].add("var")
        where.setdefault(rule.target, target_tok)
        for node in ast.walk(rule.range):
            if isinstance(node, ast.Const):
                usage[node.param].add("const")
            elif isinstance(node, (ast.Min, ast.Max, ast.Val, ast.Dom)):
                usage[node.param].add("var")
    for n, kinds in usage.items():
        if len(kinds) > 1:
            tok = where.get(n)
            raise FdSyntaxError(
                f"parameter {n} of {name} is used both as a variable and as c({n})",
                tok.line if tok else None, tok.col if tok else None, source)
    params = tuple(ast.Param(n, usage[n] == {"const"}) for n in names)
    rules = tuple(r for r, _ in rules_with_tokens)
    return ast.IndexicalDef(name, params, rules)


def parse_indexicals(text, source=None):
    """Parse every definition in *text*."""
    return Parser(text, source).parse_all()


def parse_indexical(text, source=None):
    """Parse exactly one definition."""
    defs = parse_indexicals(text, source)
    if len(defs) != 1:
        raise FdSyntaxError(f"expected one definition, found {len(defs)}")
    return defs[0]
