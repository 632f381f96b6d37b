""" Closed-form analytic expressions in the variable z

Grammar, lowest to highest precedence::

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom (('^' | '**') ['-'] INTEGER)?
    atom    := NUMBER | NUMBER 'i' | 'i' | 'z' | 'exp' '(' sum ')'
             | '(' sum ')'

Negative powers are parsed as 1 / base^n, so the tree only ever holds
exponents >= 0. Expressions compile to TaylorSeries and evaluate exactly
with complex arithmetic.

    >>> spec = parse('z/(1-z)^2')
    >>> pointwise_eval(spec, 0.5)
    (2+0j)
"""
import re
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Union

import numpy as np

from . import series as ts
from .errors import (DivisionNearZero, ExpressionSyntaxError,
                     SingularAtOrigin, UnknownIdentifier, ZeroConstantTerm)

NEAR_ZERO = 1e-14
BINARY_OPERATORS = ('+', '-', '*', '/')


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Constant:
    value: complex


@dataclass(frozen=True)
class Negate:
    operand: 'Node'


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: 'Node'
    right: 'Node'


@dataclass(frozen=True)
class Power:
    base: 'Node'
    exponent: int


@dataclass(frozen=True)
class Exp:
    argument: 'Node'


Node = Union[Variable, Constant, Negate, BinaryOp, Power, Exp]


@dataclass(frozen=True)
class FunctionSpec:
    """ Parsed expression together with the text it came from """
    ast: Node
    source: str

    def __str__(self) -> str:
        return self.source

    def __call__(self, z):
        return pointwise_eval(self, z)


class _Token(NamedTuple):
    kind: str
    text: str
    offset: int


_TOKEN_PATTERN = re.compile(
    r'''
      (?P<space>\s+)
    | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?i?)
    | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
    | (?P<op>\*\*|[-+*/^()−])
    ''', re.VERBOSE)

_IDENTIFIERS = {'z', 'i', 'exp'}


def _byte_offset(source: str, position: int) -> int:
    return len(source[:position].encode('utf-8'))


def _tokenize(source: str) -> Iterator[_Token]:
    position = 0
    while position < len(source):
        match = _TOKEN_PATTERN.match(source, position)
        if match is None:
            raise ExpressionSyntaxError(
                f'unexpected character {source[position]!r}',
                _byte_offset(source, position))
        kind = match.lastgroup
        text = match.group()
        offset = _byte_offset(source, position)
        position = match.end()
        if kind == 'space':
            continue
        if kind == 'name' and text not in _IDENTIFIERS:
            raise UnknownIdentifier(text, offset)
        if text == '−':
            text = '-'
        if text == '**':
            text = '^'
        yield _Token(kind, text, offset)
    yield _Token('end', '', _byte_offset(source, len(source)))


class _Parser:

    def __init__(self, source: str):
        self._tokens: List[_Token] = list(_tokenize(source))
        self._index = 0

    @property
    def _current(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._current
        self._index += 1
        return token

    def _accept(self, text: str) -> bool:
        if self._current.kind != 'end' and self._current.text == text:
            self._index += 1
            return True
        return False

    def _expect(self, text: str) -> None:
        if not self._accept(text):
            self._fail(f'expected {text!r}')

    def _fail(self, message: str):
        token = self._current
        found = 'end of input' if token.kind == 'end' else repr(token.text)
        raise ExpressionSyntaxError(f'{message}, found {found}', token.offset)

    def parse(self) -> Node:
        node = self._sum()
        if self._current.kind != 'end':
            self._fail('expected an operator')
        return node

    def _sum(self) -> Node:
        node = self._product()
        while self._current.text in ('+', '-') and \
                self._current.kind == 'op':
            op = self._advance().text
            node = BinaryOp(op, node, self._product())
        return node

    def _product(self) -> Node:
        node = self._unary()
        while self._current.text in ('*', '/') and \
                self._current.kind == 'op':
            op = self._advance().text
            node = BinaryOp(op, node, self._unary())
        return node

    def _unary(self) -> Node:
        if self._accept('-'):
            return Negate(self._unary())
        return self._power()

    def _power(self) -> Node:
        base = self._atom()
        if not self._accept('^'):
            return base
        negative = self._accept('-')
        token = self._current
        if token.kind != 'number' or not token.text.isdigit():
            self._fail('expected a non-negative integer exponent')
        self._advance()
        exponent = Power(base, int(token.text))
        return BinaryOp('/', Constant(1. + 0j), exponent) \
            if negative else exponent

    def _atom(self) -> Node:
        token = self._current
        if token.kind == 'number':
            self._advance()
            if token.text.endswith('i'):
                return Constant(complex(0., float(token.text[:-1])))
            return Constant(complex(float(token.text), 0.))
        if token.kind == 'name':
            self._advance()
            if token.text == 'z':
                return Variable()
            if token.text == 'i':
                return Constant(1j)
            self._expect('(')
            argument = self._sum()
            self._expect(')')
            return Exp(argument)
        if self._accept('('):
            node = self._sum()
            self._expect(')')
            return node
        self._fail('expected a number, z, i, exp(...) or (')


def parse(source: str) -> FunctionSpec:
    """ Parses an expression in z

    @raises ExpressionSyntaxError: malformed input, with the byte offset
    @raises UnknownIdentifier: any name other than z, i and exp
    """
    assert isinstance(source, str), \
        f'Expected expression text, got type {type(source)}'
    return FunctionSpec(_Parser(source).parse(), source)


def _format_real(value: float) -> str:
    return repr(float(value))


def format_expression(node: Union[Node, FunctionSpec]) -> str:
    """ Canonical, fully parenthesised text; parse(format(x)) == x """
    if isinstance(node, FunctionSpec):
        node = node.ast
    if isinstance(node, Variable):
        return 'z'
    if isinstance(node, Constant):
        if node.value.imag == 0.:
            return _format_real(node.value.real)
        if node.value.real == 0.:
            return f'{_format_real(node.value.imag)}i'
        # never produced by the parser
        return f'({_format_real(node.value.real)} + ' \
               f'{_format_real(node.value.imag)}i)'
    if isinstance(node, Negate):
        return f'(-{format_expression(node.operand)})'
    if isinstance(node, BinaryOp):
        return f'({format_expression(node.left)} {node.op} ' \
               f'{format_expression(node.right)})'
    if isinstance(node, Power):
        base = format_expression(node.base)
        if isinstance(node.base, Power):
            base = f'({base})'
        return f'{base}^{node.exponent}'
    if isinstance(node, Exp):
        return f'exp({format_expression(node.argument)})'
    raise TypeError(f'not an expression node: {node!r}')


def _series_power(base: ts.TaylorSeries, exponent: int) -> ts.TaylorSeries:
    result = ts.constant(1., base.order, base.radius_hint)
    while exponent:
        if exponent & 1:
            result = ts.mul(result, base)
        exponent >>= 1
        if exponent:
            base = ts.mul(base, base)
    return result


def _compile(node: Node, order: int, radius_hint: float) -> ts.TaylorSeries:
    if isinstance(node, Variable):
        return ts.variable(order, radius_hint)
    if isinstance(node, Constant):
        return ts.constant(node.value, order, radius_hint)
    if isinstance(node, Negate):
        return -_compile(node.operand, order, radius_hint)
    if isinstance(node, Power):
        return _series_power(_compile(node.base, order, radius_hint),
                             node.exponent)
    if isinstance(node, Exp):
        return ts.exp_series(_compile(node.argument, order, radius_hint))

    left = _compile(node.left, order, radius_hint)
    right = _compile(node.right, order, radius_hint)
    if node.op == '+':
        return ts.add(left, right)
    if node.op == '-':
        return ts.add(left, -right)
    if node.op == '*':
        return ts.mul(left, right)
    try:
        return ts.div(left, right)
    except ZeroConstantTerm as err:
        raise SingularAtOrigin(
            f'denominator {format_expression(node.right)} vanishes at '
            'z = 0') from err


def compile_series(f: FunctionSpec,
                   order: int = ts.DEFAULT_ORDER,
                   radius_hint: float = ts.DEFAULT_RADIUS_HINT
                   ) -> ts.TaylorSeries:
    """ Maps the expression tree onto series operations

    @raises SingularAtOrigin: a denominator vanishes at z = 0
    """
    assert order >= 1, f'order must be >= 1, got {order}'
    return _compile(f.ast, order, radius_hint)


def _pointwise(node: Node, z: np.ndarray) -> np.ndarray:
    if isinstance(node, Variable):
        return z
    if isinstance(node, Constant):
        return np.full_like(z, node.value)
    if isinstance(node, Negate):
        return -_pointwise(node.operand, z)
    if isinstance(node, Power):
        return _pointwise(node.base, z)**node.exponent
    if isinstance(node, Exp):
        return np.exp(_pointwise(node.argument, z))

    left = _pointwise(node.left, z)
    right = _pointwise(node.right, z)
    if node.op == '+':
        return left + right
    if node.op == '-':
        return left - right
    if node.op == '*':
        return left * right
    if np.any(np.abs(right) < NEAR_ZERO):
        raise DivisionNearZero(
            f'denominator {format_expression(node.right)} has modulus '
            f'below {NEAR_ZERO:g}')
    return left / right


def pointwise_eval(f: Union[FunctionSpec, Node], z):
    """ Exact value of the expression at z (scalar or array)

    @raises DivisionNearZero: a denominator has modulus below 1e-14
    """
    node = f.ast if isinstance(f, FunctionSpec) else f
    points = np.asarray(z, dtype=complex)
    with np.errstate(over='ignore'):
        values = _pointwise(node, points)
    if points.ndim == 0:
        return complex(values)
    return values
