"""Expression front end for the CLI.

Grammar (juxtaposition is multiplication, order is kept):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'|'/'] factor)*
    factor := unary ('^' ['-'] int | '^' '(' ['-'] int ')')?
    unary  := '-' factor | atom
    atom   := a | a* | c | c* | B0 | B+ | B- | q | v | i | number | '(' expr ')'

A star binds to a generator only when written directly after it: ``a*c`` is
a* c, while ``a * c`` is a c.  ``a^-k`` means a*^k.  Division is only
allowed by scalars.  ``v`` is q^(1/2).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import B_minus, B_plus, B_zero, AlgebraElement, a, a_star, c, c_star, mul
from .scalar import I, Scalar, vpow


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str  # a, a*, c, c*, B0, B+, B-, q, v, i


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<gen>a\*|c\*|B0|B\+|B-|a|c|q|v|i)|(?P<op>[-+*/^()]))"
)


def tokenize(text: str) -> list:
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            j = pos
            while j < len(text) and text[j].isspace():
                j += 1
            raise ParseError(f"unexpected character {text[j]!r}", j)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value:
            raise ParseError(f"expected {value!r}, got {t[1] or 'end of input'!r}", t[2])
        return t

    def parse(self):
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {t[1]!r}", t[2])
        return e

    def expr(self):
        t = self.peek()
        if t[1] in ("+", "-") and t[0] == "op":
            self.take()
            left = self.term()
            if t[1] == "-":
                left = Neg(left)
        else:
            left = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in ("+", "-"):
                self.take()
                left = BinOp(t[1], left, self.term())
            else:
                return left

    def _starts_factor(self, t) -> bool:
        return t[0] in ("num", "gen") or (t[0] == "op" and t[1] == "(")

    def term(self):
        left = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in ("*", "/"):
                self.take()
                left = BinOp(t[1], left, self.factor())
            elif self._starts_factor(t):
                left = BinOp("*", left, self.factor())
            else:
                return left

    def factor(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            return Neg(self.factor())
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            paren = False
            if self.peek()[1] == "(":
                self.take()
                paren = True
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            t = self.take()
            if t[0] != "num" or "." in t[1]:
                raise ParseError("exponent must be an integer", t[2])
            if paren:
                self.expect(")")
            return Pow(base, sign * int(t[1]))
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return Num(Fraction(t[1]))
        if t[0] == "gen":
            return Sym(t[1])
        if t[1] == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {t[1] or 'end of input'!r}", t[2])


def parse(text: str):
    return _Parser(text).parse()


_NAMED = {
    "a": a, "a*": a_star, "c": c, "c*": c_star,
    "B0": B_zero, "B+": B_plus, "B-": B_minus,
}
_SCALARS = {"q": vpow(2), "v": vpow(1), "i": I}


def _scalar_part(x: AlgebraElement):
    """The Scalar s if x = s * 1, else None."""
    if not x.terms:
        return Scalar()
    if len(x.terms) == 1 and (0, 0, 0) in x.terms:
        return x.terms[(0, 0, 0)]
    return None


def eval_expr(e) -> AlgebraElement:
    if isinstance(e, Num):
        return AlgebraElement.scalar(Scalar.from_gaussian(e.value))
    if isinstance(e, Sym):
        if e.name in _NAMED:
            return _NAMED[e.name]
        return AlgebraElement.scalar(_SCALARS[e.name])
    if isinstance(e, Neg):
        return -eval_expr(e.arg)
    if isinstance(e, Pow):
        base = eval_expr(e.base)
        if e.exp >= 0:
            return base ** e.exp
        s = _scalar_part(base)
        if s is not None:
            if s.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return AlgebraElement.scalar(s.inverse() ** (-e.exp))
        if isinstance(e.base, Sym) and e.base.name == "a":
            return a_star ** (-e.exp)
        raise ValueError("negative powers are only defined for scalars and a")
    if isinstance(e, BinOp):
        left = eval_expr(e.left)
        right = eval_expr(e.right)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return mul(left, right)
        if e.op == "/":
            s = _scalar_part(right)
            if s is None:
                raise ValueError("division by a non-scalar")
            if s.is_zero():
                raise ZeroDivisionError("division by zero")
            return left.scale(s.inverse())
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(text: str) -> AlgebraElement:
    return eval_expr(parse(text))


def count_leaves(e, generators_only: bool = False) -> int:
    """Number of atoms; with generators_only, scalars (numbers, q, v, i) are skipped."""
    if isinstance(e, Num):
        return 0 if generators_only else 1
    if isinstance(e, Sym):
        return 0 if generators_only and e.name in _SCALARS else 1
    if isinstance(e, Neg):
        return count_leaves(e.arg, generators_only)
    if isinstance(e, Pow):
        return count_leaves(e.base, generators_only)
    return count_leaves(e.left, generators_only) + count_leaves(e.right, generators_only)


__all__ = ["ParseError", "Num", "Sym", "BinOp", "Neg", "Pow", "tokenize", "parse", "eval_expr", "evaluate", "count_leaves"]
