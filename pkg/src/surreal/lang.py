"""Surface syntax for surreal expressions and REPL commands.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := rational | 'w' ['^' power] | '(' expr ')' | '-' factor
            | '{' [exprlist] '|' [exprlist] '}' | name
    power  := natural | '(' expr ')' | 'w' | '-' natural

A line is either an expression, ``let name = expr``, or a command
``:verb arguments``.  ``ω`` is accepted as a synonym for ``w``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .conway import OMEGA, Surreal, monomial, srl_mul
from .errors import CutViolation, ParseError, PreconditionError, SurrealError
from .expansion import srl_simplest_between

__all__ = [
    "Num", "Omega", "Power", "Neg", "Add", "Sub", "Mul", "Cut", "Var",
    "Let", "Command",
    "parse_expr", "parse_line", "evaluate", "show",
]


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class Power:
    exponent: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Cut:
    left: tuple
    right: tuple


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Let:
    name: str
    expr: object


@dataclass(frozen=True)
class Command:
    verb: str
    argument: str
    offset: int


def show(e):
    """Prefix rendering of an Expr, e.g. ``add(omega, 1/2)``."""
    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)
    if isinstance(e, Omega):
        return "omega"
    if isinstance(e, Power):
        return "power(w, %s)" % show(e.exponent)
    if isinstance(e, Neg):
        return "neg(%s)" % show(e.arg)
    if isinstance(e, Cut):
        return "cut([%s], [%s])" % (", ".join(map(show, e.left)), ", ".join(map(show, e.right)))
    if isinstance(e, Var):
        return e.name
    spine = []
    while isinstance(e, (Add, Sub, Mul)):
        spine.append(e)
        e = e.left
    text = show(e)
    for node in reversed(spine):
        name = {Add: "add", Sub: "sub", Mul: "mul"}[type(node)]
        text = "%s(%s, %s)" % (name, text, show(node.right))
    return text


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<name>[A-Za-z_ω][A-Za-z0-9_]*)
  | (?P<sym>[-+*^(){}|,=])
""", re.VERBOSE)

_MAX_DEPTH = 200


def _tokenize(text, base=0):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], text, pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group(kind)
            if kind == "name" and value in ("w", "ω"):
                kind, value = "omega", "w"
            toks.append((kind, value, pos))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.depth = 0

    def peek(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def accept(self, value):
        t = self.peek()
        if t[0] == "sym" and t[1] == value:
            self.i += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            t = self.peek()
            found = "end of input" if t[0] == "end" else repr(t[1])
            raise self.error("expected %r, found %s" % (value, found))

    def enter(self):
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise self.error("expression nested too deeply")

    def expr(self):
        self.enter()
        node = self.term()
        while True:
            if self.accept("+"):
                node = Add(node, self.term())
            elif self.accept("-"):
                node = Sub(node, self.term())
            else:
                break
        self.depth -= 1
        return node

    def term(self):
        node = self.factor()
        while self.accept("*"):
            node = Mul(node, self.factor())
        return node

    def number(self, tok):
        self.i += 1
        text = tok[1].replace(" ", "")
        if "/" in text:
            p, q = text.split("/")
            if int(q) == 0:
                raise self.error("zero denominator", tok)
            return Num(Fraction(int(p), int(q)))
        return Num(Fraction(int(text)))

    def factor(self):
        self.enter()
        t = self.peek()
        if t[0] == "num":
            node = self.number(t)
        elif t[0] == "omega":
            self.i += 1
            node = Omega()
            if self.accept("^"):
                node = Power(self.power())
        elif t[0] == "name":
            self.i += 1
            node = Var(t[1])
        elif self.accept("("):
            node = self.expr()
            self.expect(")")
        elif self.accept("-"):
            node = Neg(self.factor())
        elif self.accept("{"):
            left = self.exprlist("|")
            self.expect("|")
            right = self.exprlist("}")
            self.expect("}")
            node = Cut(tuple(left), tuple(right))
        else:
            found = "end of input" if t[0] == "end" else repr(t[1])
            raise self.error("expected a number, w, '(', '-', '{' or a name, found %s" % found)
        self.depth -= 1
        return node

    def power(self):
        t = self.peek()
        if t[0] == "num":
            return self.number(t)
        if t[0] == "omega":
            self.i += 1
            return Omega()
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        if self.accept("-"):
            t = self.peek()
            if t[0] != "num":
                raise self.error("expected a number after '^-'")
            return Neg(self.number(t))
        raise self.error("expected an exponent after '^'")

    def exprlist(self, stop):
        items = []
        t = self.peek()
        if t[0] == "sym" and t[1] == stop:
            return items
        items.append(self.expr())
        while self.accept(","):
            items.append(self.expr())
        return items

    def finish(self):
        t = self.peek()
        if t[0] != "end":
            raise self.error("unexpected %r" % (t[1],))


def parse_expr(text):
    p = _Parser(text)
    e = p.expr()
    p.finish()
    return e


_LET = re.compile(r"\s*let\s+([A-Za-z_][A-Za-z0-9_]*)\s*=(.*)$", re.DOTALL)
_CMD = re.compile(r"\s*:([a-z]+)\b\s*(.*)$", re.DOTALL)
_RESERVED = {"w", "let"}


def parse_line(text):
    """Expression, ``let`` binding, or ``:command``."""
    m = _CMD.match(text)
    if m:
        return Command(m.group(1), m.group(2).rstrip(), m.start(2))
    if text.lstrip().startswith(":"):
        raise ParseError("expected a command name after ':'", text, text.index(":") + 1)
    m = _LET.match(text)
    if m:
        name = m.group(1)
        if name in _RESERVED:
            raise ParseError("%r cannot be rebound" % name, text, m.start(1))
        try:
            expr = parse_expr(m.group(2))
        except ParseError as exc:
            raise ParseError(exc.message, text, m.start(2) + exc.pos) from None
        return Let(name, expr)
    return parse_expr(text)


def evaluate(e, env=None, fuel=64):
    """Value of an Expr; cuts go through the simplest-between machinery."""
    env = env or {}
    if isinstance(e, Num):
        return Surreal.from_rational(e.value)
    if isinstance(e, Omega):
        return OMEGA
    if isinstance(e, Power):
        return monomial(evaluate(e.exponent, env, fuel))
    if isinstance(e, Neg):
        return -evaluate(e.arg, env, fuel)
    if isinstance(e, (Add, Sub, Mul)):
        # walk the left spine so long chains like 1+1+...+1 need no deep recursion
        spine = []
        while isinstance(e, (Add, Sub, Mul)):
            spine.append(e)
            e = e.left
        acc = evaluate(e, env, fuel)
        for node in reversed(spine):
            rhs = evaluate(node.right, env, fuel)
            if isinstance(node, Add):
                acc = acc + rhs
            elif isinstance(node, Sub):
                acc = acc - rhs
            else:
                acc = srl_mul(acc, rhs, fuel)
        return acc
    if isinstance(e, Var):
        if e.name not in env:
            raise PreconditionError("unbound name %r" % e.name)
        return env[e.name]
    if isinstance(e, Cut):
        left = [evaluate(x, env, fuel) for x in e.left]
        right = [evaluate(x, env, fuel) for x in e.right]
        try:
            return srl_simplest_between(left, right, fuel)
        except CutViolation as exc:
            raise CutViolation(exc.left, exc.right, "%s (in %s)" % (exc, show(e))) from None
        except SurrealError as exc:
            exc.args = ("%s (in %s)" % (exc.args[0] if exc.args else exc, show(e)),)
            raise
    raise TypeError("not an expression: %r" % (e,))
