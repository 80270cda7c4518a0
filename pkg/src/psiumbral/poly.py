"""Polynomials over Q(q) and the basic degree operators acting on them."""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NotInRange
from .scalar import ONE, ZERO, Scalar

_PLAIN = re.compile(r"^-?(\d+|q(\^\d+)?|\d+\*q(\^\d+)?)$")


def _as_scalar(c) -> Scalar:
    return c if isinstance(c, Scalar) else Scalar(c)


def _coef_text(c: Scalar) -> str:
    s = str(c)
    return s if _PLAIN.match(s) else f"({s})"


def _term_text(mono: str, c: Scalar) -> str:
    if not mono:
        return str(c)
    if c == ONE:
        return mono
    return f"{_coef_text(c)}*{mono}"


def _join_terms(pairs) -> str:
    """Render (monomial, coefficient) pairs as 'a + b*x - c*x^2'."""
    out = ""
    for mono, c in pairs:
        if c.is_zero():
            continue
        neg = -c
        if str(c).startswith("-") and not any(ch in str(neg) for ch in "+-"):
            body = _term_text(mono, neg)
            out = f"-{body}" if not out else f"{out} - {body}"
        else:
            body = _term_text(mono, c)
            out = body if not out else f"{out} + {body}"
    return out or "0"


class Poly:
    """Dense polynomial in x, coefficient of x^i at index i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _trusted(cls, cs):
        p = object.__new__(cls)
        cs = list(cs)
        while cs and cs[-1].is_zero():
            cs.pop()
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def monomial(cls, n: int, c=ONE) -> Poly:
        return cls._trusted([ZERO] * n + [_as_scalar(c)])

    @classmethod
    def constant(cls, c) -> Poly:
        return cls._trusted([_as_scalar(c)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def at_zero(self) -> Scalar:
        return self.coeff(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Scalar)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._trusted([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly._trusted(out)
        c = _as_scalar(other)
        return Poly._trusted([c * a for a in self.coeffs])

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        c = _as_scalar(c)
        return Poly._trusted([c * a for a in self.coeffs])

    def __call__(self, x0) -> Scalar:
        x0 = _as_scalar(x0)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def map_coeffs(self, f) -> Poly:
        return Poly([f(c) for c in self.coeffs])

    def eval_q(self, q0) -> Poly:
        """Coefficients evaluated at q = q0."""
        return Poly([Scalar(c.eval(q0)) for c in self.coeffs])

    def classical_limit(self) -> Poly:
        return self.eval_q(1)

    def __str__(self):
        return _join_terms(
            ("" if i == 0 else ("x" if i == 1 else f"x^{i}"), c) for i, c in enumerate(self.coeffs)
        )

    def __repr__(self):
        return f"Poly({str(self)!r})"


def _as_poly(v) -> Poly:
    return v if isinstance(v, Poly) else Poly.constant(v)


X = Poly([0, 1])


def mul_x(p: Poly) -> Poly:
    return Poly._trusted([ZERO] + list(p.coeffs)) if p.coeffs else Poly()


def psi_derivative(psi, p: Poly) -> Poly:
    """x^n -> n_psi x^(n-1)."""
    return Poly._trusted([psi.number(n) * c for n, c in enumerate(p.coeffs)][1:])


def psi_derivative_power(psi, p: Poly, k: int) -> Poly:
    for _ in range(k):
        if not p.coeffs:
            break
        p = psi_derivative(psi, p)
    return p


def x_hat_psi(psi, p: Poly) -> Poly:
    """x^n -> ((n+1)/(n+1)_psi) x^(n+1)."""
    if not p.coeffs:
        return Poly()
    return Poly._trusted([ZERO] + [c * (n + 1) / psi.number(n + 1) for n, c in enumerate(p.coeffs)])


def x_hat_psi_inv(psi, p: Poly) -> Poly:
    """x^n -> (n_psi/n) x^(n-1), defined on polynomials vanishing at 0."""
    if not p.at_zero().is_zero():
        raise NotInRange("x_hat_psi_inv needs a polynomial without constant term")
    return Poly._trusted([c * psi.number(n) / n for n, c in enumerate(p.coeffs) if n > 0])


def psi_shifted_power(psi, a, n: int) -> Poly:
    """(x +_psi a)^n = sum_k binom_psi(n,k) a^k x^(n-k)."""
    a = _as_scalar(a)
    cs = [ZERO] * (n + 1)
    ak = ONE
    for k in range(n + 1):
        cs[n - k] = psi.binomial(n, k) * ak
        ak = ak * a
    return Poly._trusted(cs)


def translate(psi, a, p: Poly) -> Poly:
    """E^a(d_psi) p = sum_k a^k/k_psi! d_psi^k p, a finite sum."""
    a = _as_scalar(a)
    out = Poly()
    d = p
    ak = ONE
    k = 0
    while d.coeffs:
        out = out + d.scale(ak / psi.factorial(k))
        d = psi_derivative(psi, d)
        ak = ak * a
        k += 1
    return out


class DiagonalOp:
    """x^n -> weight(n) x^n."""

    def __init__(self, weight, name: str = "diag"):
        self.weight = weight
        self.name = name

    def __call__(self, p: Poly) -> Poly:
        return diagonal_apply(self, p)

    def __repr__(self):
        return f"DiagonalOp({self.name})"


def diagonal_apply(d: DiagonalOp, p: Poly) -> Poly:
    return Poly._trusted([_as_scalar(d.weight(n)) * c for n, c in enumerate(p.coeffs)])


def one_hat(psi) -> DiagonalOp:
    """x^n -> ((n+1)/(n+1)_psi) x^n, so that x_hat_psi = x * one_hat."""
    return DiagonalOp(lambda n: Scalar(n + 1) / psi.number(n + 1), "one_hat")


def one_hat_inv(psi) -> DiagonalOp:
    """x^n -> (n_psi/n) x^n for n > 0, fixing 1."""
    return DiagonalOp(lambda n: ONE if n == 0 else psi.number(n) / n, "one_hat_inv")


def dilation(weights) -> DiagonalOp:
    ws = list(weights)
    return DiagonalOp(lambda n: ws[n], "dilation")


class BiPoly:
    """Polynomial in x and y stored sparsely as {(i, j): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for k, v in (terms or {}).items():
            v = _as_scalar(v)
            if not v.is_zero():
                out[k] = v
        self.terms = out

    @classmethod
    def from_x(cls, p: Poly) -> BiPoly:
        return cls({(i, 0): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def from_y(cls, p: Poly) -> BiPoly:
        return cls({(0, j): c for j, c in enumerate(p.coeffs)})

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return BiPoly(out)

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            out: dict = {}
            for (i, j), a in self.terms.items():
                for (k, l), b in other.terms.items():
                    key = (i + k, j + l)
                    out[key] = out[key] + a * b if key in out else a * b
            return BiPoly(out)
        c = _as_scalar(other)
        return BiPoly({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1]))

    def eval_y(self, y0) -> Poly:
        y0 = _as_scalar(y0)
        deg = max((i for i, _ in self.terms), default=-1)
        cs = [ZERO] * (deg + 1)
        for (i, j), v in self.terms.items():
            cs[i] = cs[i] + v * y0 ** j
        return Poly(cs)

    def __str__(self):
        def mono(i, j):
            m = []
            if i:
                m.append("x" if i == 1 else f"x^{i}")
            if j:
                m.append("y" if j == 1 else f"y^{j}")
            return "*".join(m)

        return _join_terms((mono(i, j), c) for (i, j), c in self.sorted_terms())

    def __repr__(self):
        return f"BiPoly({str(self)!r})"
