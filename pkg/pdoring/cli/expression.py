"""
Series expressions: sums, differences and explicit ``*`` products of ring
elements, integers, ``#i`` element indices, ``x^k``, ``D^j(...)``, ``O(x^m)``
and named bindings. Elements of product rings are written as pairs ``(u, v)``.
"""
from dataclasses import dataclass
from typing import Iterator, Tuple, Union

import pyparsing as pp

from pdoring.errors import (ExponentOverflowError, ExpressionError, LexicalError, UnbalancedParenthesesError)

MAX_EXPONENT = 2 ** 31 - 1
_ALLOWED = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_#+-*^(), \t")


@dataclass(frozen=True)
class Name:
    name: str
    position: int


@dataclass(frozen=True)
class IntLiteral:
    value: int
    position: int


@dataclass(frozen=True)
class IndexLiteral:
    index: int
    position: int


@dataclass(frozen=True)
class XPower:
    exponent: int
    position: int


@dataclass(frozen=True)
class BigO:
    exponent: int
    position: int


@dataclass(frozen=True)
class Sum:
    left: 'Expr'
    right: 'Expr'
    position: int


@dataclass(frozen=True)
class Difference:
    left: 'Expr'
    right: 'Expr'
    position: int


@dataclass(frozen=True)
class Product:
    left: 'Expr'
    right: 'Expr'
    position: int


@dataclass(frozen=True)
class Negation:
    operand: 'Expr'
    position: int


@dataclass(frozen=True)
class Group:
    inner: 'Expr'
    position: int


@dataclass(frozen=True)
class Power:
    base: 'Expr'
    exponent: int
    position: int


@dataclass(frozen=True)
class Delta:
    power: int
    operand: 'Expr'
    position: int


@dataclass(frozen=True)
class ElementPair:
    first: 'Expr'
    second: 'Expr'
    position: int


Expr = Union[Name, IntLiteral, IndexLiteral, XPower, BigO, Sum, Difference, Product, Negation, Group, Power,
             Delta, ElementPair]


def _start(s: str, loc: int) -> int:
    """First non-blank position at or after loc."""
    return loc + len(s[loc:]) - len(s[loc:].lstrip())


def _fold(s, loc, tokens):
    node = tokens[0]
    for op, right in zip(tokens[1::2], tokens[2::2]):
        kind = {"+": Sum, "-": Difference, "*": Product}[op]
        node = kind(node, right, _start(s, loc))
    return node


def _parenthesized(s, loc, tokens):
    if len(tokens) == 2:
        return ElementPair(tokens[0], tokens[1], _start(s, loc))
    return Group(tokens[0], _start(s, loc))


def _grammar() -> pp.ParserElement:
    lpar, rpar = pp.Suppress("("), pp.Suppress(")")
    x_kw, d_kw, o_kw = pp.Keyword("x"), pp.Keyword("D"), pp.Keyword("O")
    integer = pp.Word(pp.nums)
    signed = pp.Combine(pp.Optional("-") + integer)
    exponent = signed | (lpar + signed + rpar)
    expr = pp.Forward()
    unary = pp.Forward()

    x_power = (pp.Suppress(x_kw) + pp.Optional(pp.Suppress("^") + exponent, default="1")).set_parse_action(
        lambda s, loc, t: XPower(int(t[0]), _start(s, loc)))
    big_o = (pp.Suppress(o_kw) + lpar + pp.Suppress(x_kw) + pp.Optional(pp.Suppress("^") + exponent, default="1")
             + rpar).set_parse_action(lambda s, loc, t: BigO(int(t[0]), _start(s, loc)))
    delta = (pp.Suppress(d_kw) + pp.Optional(pp.Suppress("^") + integer, default="1") + lpar + expr
             + rpar).set_parse_action(lambda s, loc, t: Delta(int(t[0]), t[1], _start(s, loc)))
    index_literal = (pp.Suppress("#") + integer).set_parse_action(
        lambda s, loc, t: IndexLiteral(int(t[0]), _start(s, loc)))
    int_literal = integer.copy().set_parse_action(lambda s, loc, t: IntLiteral(int(t[0]), _start(s, loc)))
    name = (~(x_kw | d_kw | o_kw) + pp.Word(pp.alphas + "_", pp.alphanums + "_")).set_parse_action(
        lambda s, loc, t: Name(t[0], _start(s, loc)))
    group = (lpar + expr + pp.Optional(pp.Suppress(",") + expr) + rpar).set_parse_action(_parenthesized)

    atom = big_o | delta | x_power | index_literal | int_literal | name | group
    powered = (atom + pp.Optional(pp.Suppress("^") + integer)).set_parse_action(
        lambda s, loc, t: Power(t[0], int(t[1]), _start(s, loc)) if len(t) == 2 else t[0])
    unary <<= (pp.Literal("-") + unary).set_parse_action(lambda s, loc, t: Negation(t[1], _start(s, loc))) | powered
    product = (unary + pp.ZeroOrMore(pp.Literal("*") + unary)).set_parse_action(_fold)
    expr <<= (product + pp.ZeroOrMore(pp.one_of("+ -") + product)).set_parse_action(_fold)
    return expr


GRAMMAR = _grammar()


def _scan(text: str):
    for i, ch in enumerate(text):
        if ch not in _ALLOWED:
            raise LexicalError(f"unexpected character '{ch}'", i)
    opened = []
    for i, ch in enumerate(text):
        if ch == "(":
            opened.append(i)
        elif ch == ")":
            if not opened:
                raise UnbalancedParenthesesError("unmatched ')'", i)
            opened.pop()
    if opened:
        raise UnbalancedParenthesesError("unclosed '('", opened[-1])
    stripped = text.rstrip()
    if not stripped:
        raise ExpressionError("empty expression", 0)
    if stripped[-1] in "+-*^#":
        raise ExpressionError("incomplete expression at end of input", len(stripped))


def children(node: Expr) -> Tuple[Expr, ...]:
    if isinstance(node, (Sum, Difference, Product)):
        return node.left, node.right
    if isinstance(node, ElementPair):
        return node.first, node.second
    if isinstance(node, (Negation, Delta)):
        return (node.operand,)
    if isinstance(node, Power):
        return (node.base,)
    if isinstance(node, Group):
        return (node.inner,)
    return ()


def walk(node: Expr) -> Iterator[Expr]:
    yield node
    for child in children(node):
        yield from walk(child)


def parse_expr(text: str) -> Expr:
    """
    Parse with precedence sum/difference < product < unary minus < x^k, D^j(...), a^n < atoms.

    Errors carry the offending position: LexicalError, UnbalancedParenthesesError,
    ExponentOverflowError, or a plain ExpressionError for malformed input.
    """
    _scan(text)
    try:
        node = GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseException as exc:
        loc = _start(text, exc.loc)
        found = text[loc:loc + 1]
        message = f"unexpected '{found}'" if found else "incomplete expression at end of input"
        raise ExpressionError(message, loc)
    for sub in walk(node):
        value = getattr(sub, "exponent", getattr(sub, "power", 0))
        if abs(value) > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {value} outside the machine range", sub.position)
    return node
