"""Exact elements of the field Q(q).

A :class:`Scalar` is a reduced ratio of two polynomials in the deformation
parameter ``q`` with rational coefficients.  The representation is canonical:
numerator and denominator are coprime and the denominator is an integer
polynomial with content 1 and positive leading coefficient, so equality of
field values is plain structural equality.

Polynomial arithmetic and gcds are delegated to FLINT (``python-flint``).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from flint import fmpq, fmpq_poly

from .errors import DivisionByZero, ParseError, PoleAtPoint

Rational = Fraction

_ONE = fmpq_poly([1])
_ZERO = fmpq_poly([])

# largest q-degree seen while normalizing; diagnostics only
_max_degree = 0


def max_q_degree() -> int:
    return _max_degree


def reset_q_degree() -> None:
    global _max_degree
    _max_degree = 0


def _to_fraction(v: fmpq) -> Fraction:
    return Fraction(int(v.p), int(v.q))


def _to_fmpq(v) -> fmpq:
    if isinstance(v, fmpq):
        return v
    v = Fraction(v)
    return fmpq(v.numerator, v.denominator)


class QPoly:
    """Polynomial in q over the rationals (ascending coefficient view)."""

    __slots__ = ("_p",)

    def __init__(self, coefficients=()):
        if isinstance(coefficients, fmpq_poly):
            self._p = coefficients
        else:
            self._p = fmpq_poly([_to_fmpq(c) for c in coefficients])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(_to_fraction(c) for c in self._p.coeffs())

    @property
    def degree(self) -> int:
        return self._p.degree()

    def __call__(self, q0) -> Fraction:
        return _to_fraction(self._p(_to_fmpq(q0)))

    def __eq__(self, other):
        return isinstance(other, QPoly) and self._p == other._p

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"QPoly({list(self.coefficients)})"


def _normalize(num: fmpq_poly, den: fmpq_poly):
    global _max_degree
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return _ZERO, _ONE
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_one():
            num = num // g
            den = den // g
    dz = den.numer()
    lead = int(dz[dz.degree()])
    content = int(dz.content())
    if lead < 0:
        content = -content
    scale = fmpq(content, int(den.denom()))
    if scale != 1:
        num = num / scale
        den = den / scale
    d = max(num.degree(), den.degree())
    if d > _max_degree:
        _max_degree = d
    return num, den


class Scalar:
    """Exact element of Q(q) in canonical reduced form."""

    __slots__ = ("_num", "_den")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self._num, self._den = value._num, value._den
        elif isinstance(value, str):
            s = parse_scalar(value)
            self._num, self._den = s._num, s._den
        elif isinstance(value, QPoly):
            self._num, self._den = value._p, _ONE
        else:
            self._num = fmpq_poly([_to_fmpq(value)])
            self._den = _ONE

    @classmethod
    def _raw(cls, num, den):
        s = object.__new__(cls)
        s._num = num
        s._den = den
        return s

    @classmethod
    def from_polys(cls, numerator, denominator=(1,)) -> Scalar:
        num = numerator._p if isinstance(numerator, QPoly) else fmpq_poly([_to_fmpq(c) for c in numerator])
        den = denominator._p if isinstance(denominator, QPoly) else fmpq_poly([_to_fmpq(c) for c in denominator])
        return cls._raw(*_normalize(num, den))

    @classmethod
    def q(cls) -> Scalar:
        return cls._raw(fmpq_poly([0, 1]), _ONE)

    @property
    def numerator(self) -> QPoly:
        return QPoly(self._num)

    @property
    def denominator(self) -> QPoly:
        return QPoly(self._den)

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def __bool__(self):
        return not self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.is_one()

    def is_rational(self) -> bool:
        return self._num.is_constant() and self._den.is_one()

    def q_degree(self) -> int:
        return max(self._num.degree(), self._den.degree())

    # arithmetic

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            if self._den.is_one():
                return Scalar._raw(self._num + o._num, _ONE)
            return Scalar._raw(*_normalize(self._num + o._num, self._den))
        return Scalar._raw(*_normalize(self._num * o._den + o._num * self._den, self._den * o._den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self._num, self._den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._den.is_one() and o._den.is_one():
            return Scalar._raw(self._num * o._num, _ONE)
        return Scalar._raw(*_normalize(self._num * o._num, self._den * o._den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o._num.is_zero():
            raise DivisionByZero("division by zero scalar")
        return Scalar._raw(*_normalize(self._num * o._den, self._den * o._num))

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (Scalar(1) / self) ** (-n)
        return Scalar._raw(self._num ** n, self._den ** n)

    def inverse(self) -> Scalar:
        return Scalar(1) / self

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        return hash((tuple(self._num.coeffs()), tuple(self._den.coeffs())))

    # evaluation

    def eval(self, q0) -> Fraction:
        """Exact value at ``q = q0``."""
        q0 = _to_fmpq(q0)
        d = self._den(q0)
        if d == 0:
            raise PoleAtPoint(f"{self} has a pole at q = {q0}")
        return _to_fraction(self._num(q0) / d)

    def classical_limit(self) -> Fraction:
        return self.eval(1)

    # text form

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar('{format_scalar(self)}')"


def _coerce(v):
    if isinstance(v, Scalar):
        return v
    if isinstance(v, (int, Fraction)):
        return Scalar(v)
    return None


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def scalar_eval(a: Scalar, q0) -> Fraction:
    return Scalar(a).eval(q0)


def classical_limit(a: Scalar) -> Fraction:
    return Scalar(a).classical_limit()


# canonical text


def _int_poly_terms(coeffs: list[int]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "q" if i == 1 else f"q^{i}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) if parts else "0"


def _integer_pair(s: Scalar):
    nd, dd = int(s._num.denom()), int(s._den.denom())
    lcm = nd * dd // math.gcd(nd, dd)
    N = [int(c) * (lcm // nd) for c in s._num.numer().coeffs()]
    D = [int(c) * (lcm // dd) for c in s._den.numer().coeffs()]
    g = 0
    for c in N + D:
        g = math.gcd(g, c)
    if g > 1:
        N = [c // g for c in N]
        D = [c // g for c in D]
    return N, D


def format_scalar(s: Scalar) -> str:
    if s.is_zero():
        return "0"
    N, D = _integer_pair(s)
    num = _int_poly_terms(N)
    if D == [1]:
        return num
    den = _int_poly_terms(D)
    if sum(1 for c in N if c) > 1:
        num = f"({num})"
    if sum(1 for c in D if c) > 1 or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


# expression parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str):
    toks = []
    for m in _TOKEN.finditer(text):
        num, ident, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif ident is not None:
            toks.append(("id", ident))
        elif op is not None and not op.isspace():
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r} in {text!r}")
            toks.append(("op", op))
    return toks


class _Parser:
    def __init__(self, text, env):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.env = env

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            r = self.term()
            v = v + r if op == "+" else v - r
        return v

    def term(self):
        v = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                r = self.unary()
                v = v * r if val == "*" else v / r
            elif kind == "id" or (kind == "op" and val == "("):
                v = v * self.unary()
            else:
                return v

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            v = self.unary()
            return -v if val == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Scalar(val)
        if kind == "id":
            if val not in self.env:
                raise ParseError(f"unknown symbol {val!r} in {self.text!r}")
            return self.env[val]
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token in {self.text!r}")


def evaluate_expression(text: str, env: dict | None = None) -> Scalar:
    """Evaluate an arithmetic expression in ``q`` and any extra bound symbols."""
    full = {"q": Scalar.q()}
    if env:
        full.update(env)
    return Scalar(_Parser(text, full).parse())


def parse_scalar(text: str) -> Scalar:
    return evaluate_expression(text)


def parse_rational(text: str) -> Fraction:
    s = parse_scalar(text)
    if not s.is_rational():
        raise ParseError(f"{text!r} is not a rational number")
    return s.eval(0)


ZERO = Scalar(0)
ONE = Scalar(1)
Q = Scalar.q()
