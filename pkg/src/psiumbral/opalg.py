"""Shift-invariant operators as truncated indicator series.

An operator T = sum_k t_k d_psi^k is stored by its normalized coefficients
t_k = a_k / k_psi!.  With that normalization operator composition is the
ordinary Cauchy product, so most of the algebra is plain series arithmetic.
"""

from __future__ import annotations

from .errors import CompositionDiverges, MismatchedContext, NotDelta, NotInvertible, TruncationExceeded
from .poly import Poly, psi_derivative, translate, x_hat_psi
from .scalar import ONE, ZERO, Scalar

DEFAULT_ORDER = 16


class Indicator:
    __slots__ = ("psi", "order", "t")

    def __init__(self, psi, normalized, order: int | None = None):
        t = [c if isinstance(c, Scalar) else Scalar(c) for c in normalized]
        if order is None:
            order = len(t) - 1
        if len(t) > order + 1:
            t = t[: order + 1]
        t += [ZERO] * (order + 1 - len(t))
        self.psi = psi
        self.order = order
        self.t = tuple(t)

    # constructors

    @classmethod
    def zero(cls, psi, order=DEFAULT_ORDER):
        return cls(psi, [], order)

    @classmethod
    def identity(cls, psi, order=DEFAULT_ORDER):
        return cls(psi, [ONE], order)

    @classmethod
    def scalar(cls, psi, c, order=DEFAULT_ORDER):
        return cls(psi, [Scalar(c)], order)

    @classmethod
    def d(cls, psi, order=DEFAULT_ORDER):
        """d_psi itself."""
        return cls(psi, [ZERO, ONE], order)

    @classmethod
    def exp(cls, psi, a, order=DEFAULT_ORDER):
        """E^a(d_psi)."""
        a = Scalar(a)
        return cls(psi, [a ** k / psi.factorial(k) for k in range(order + 1)], order)

    @classmethod
    def from_raw_coeffs(cls, psi, a, order=DEFAULT_ORDER):
        return cls(psi, [Scalar(c) / psi.factorial(k) for k, c in enumerate(a)][: order + 1], order)

    def raw_coeffs(self) -> list[Scalar]:
        return [c * self.psi.factorial(k) for k, c in enumerate(self.t)]

    # basics

    def __eq__(self, other):
        return (
            isinstance(other, Indicator)
            and self.order == other.order
            and self.psi == other.psi
            and self.t == other.t
        )

    def __hash__(self):
        return hash((self.psi, self.order, self.t))

    def __repr__(self):
        return f"Indicator({self.psi.tag}, N={self.order}, {[str(c) for c in self.t]})"

    def _check(self, other):
        if not isinstance(other, Indicator):
            raise TypeError("expected an Indicator")
        if self.psi != other.psi or self.order != other.order:
            raise MismatchedContext(
                f"indicators over ({self.psi.tag}, N={self.order}) and ({other.psi.tag}, N={other.order})"
            )

    def truncate(self, order: int) -> Indicator:
        return Indicator(self.psi, self.t[: order + 1], order)

    def is_delta(self) -> bool:
        return self.t[0].is_zero() and self.order >= 1 and not self.t[1].is_zero()

    def support(self) -> int:
        """Index of the last nonzero coefficient (-1 for zero)."""
        for k in range(self.order, -1, -1):
            if not self.t[k].is_zero():
                return k
        return -1

    # algebra

    def __add__(self, other):
        self._check(other)
        return Indicator(self.psi, [a + b for a, b in zip(self.t, other.t)], self.order)

    def __sub__(self, other):
        self._check(other)
        return Indicator(self.psi, [a - b for a, b in zip(self.t, other.t)], self.order)

    def __neg__(self):
        return Indicator(self.psi, [-a for a in self.t], self.order)

    def scale(self, c) -> Indicator:
        c = Scalar(c)
        return Indicator(self.psi, [c * a for a in self.t], self.order)

    def multiply(self, other: Indicator) -> Indicator:
        self._check(other)
        N = self.order
        a, b = self.t, other.t
        out = [ZERO] * (N + 1)
        for i in range(N + 1):
            if a[i].is_zero():
                continue
            for j in range(N + 1 - i):
                if not b[j].is_zero():
                    out[i + j] = out[i + j] + a[i] * b[j]
        return Indicator(self.psi, out, N)

    __mul__ = multiply

    def power(self, n: int) -> Indicator:
        if n < 0:
            return self.invert().power(-n)
        out = Indicator.identity(self.psi, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    __pow__ = power

    def invert(self) -> Indicator:
        t = self.t
        if t[0].is_zero():
            raise NotInvertible("operator with zero constant term has no inverse")
        inv0 = ONE / t[0]
        u = [inv0]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if not t[k].is_zero():
                    acc = acc + t[k] * u[n - k]
            u.append(-inv0 * acc)
        return Indicator(self.psi, u, self.order)

    def pincherle(self) -> Indicator:
        """Indicator of T' = [T, x_hat_psi]; order drops by one."""
        N = self.order
        return Indicator(self.psi, [self.t[j + 1] * (j + 1) for j in range(N)], N - 1)

    def apply(self, p: Poly) -> Poly:
        if p.degree > self.order:
            raise TruncationExceeded(f"degree {p.degree} exceeds indicator order {self.order}")
        out = Poly()
        d = p
        k = 0
        while d.coeffs:
            if not self.t[k].is_zero():
                out = out + d.scale(self.t[k])
            d = psi_derivative(self.psi, d)
            k += 1
        return out

    __call__ = apply

    def to_json(self) -> dict:
        return {"psi": self.psi.tag, "order": self.order, "normalized": [str(c) for c in self.t]}


def from_raw_coeffs(psi, a, N=DEFAULT_ORDER) -> Indicator:
    return Indicator.from_raw_coeffs(psi, a, N)


def apply(T: Indicator, p: Poly) -> Poly:
    return T.apply(p)


def multiply(T: Indicator, S: Indicator) -> Indicator:
    return T.multiply(S)


def invert(T: Indicator) -> Indicator:
    return T.invert()


def is_delta(T: Indicator) -> bool:
    return T.is_delta()


def pincherle(T: Indicator) -> Indicator:
    return T.pincherle()


def pincherle_commutator(T: Indicator, budget: int):
    """p -> T(x_hat p) - x_hat(T p) on degrees <= budget."""
    if budget > T.order - 1:
        raise TruncationExceeded(f"budget {budget} exceeds order {T.order} - 1")
    psi = T.psi

    def action(p: Poly) -> Poly:
        if p.degree > budget:
            raise TruncationExceeded(f"degree {p.degree} exceeds budget {budget}")
        return T.apply(x_hat_psi(psi, p)) - x_hat_psi(psi, T.apply(p))

    return action


def psi_compose(psi, r, inner: Indicator) -> Indicator:
    """sum_n (r_n / n_psi!) inner^n for raw coefficients r_n = [R x^n](0)."""
    if inner.psi != psi:
        raise MismatchedContext("outer and inner series use different psi")
    r = [Scalar(c) for c in r]
    if not inner.t[0].is_zero() and any(not c.is_zero() for c in r[1:]):
        raise CompositionDiverges("inner series has a constant term")
    N = inner.order
    out = Indicator.zero(psi, N)
    power = Indicator.identity(psi, N)
    for n in range(min(len(r), N + 1)):
        if not r[n].is_zero():
            out = out + power.scale(r[n] / psi.factorial(n))
        power = power * inner
    return out


def comp_inverse(Q: Indicator) -> Indicator:
    """Series g with g(Q) = d_psi, found by a triangular solve."""
    if not Q.is_delta():
        raise NotDelta("compositional inverse needs a delta operator")
    N = Q.order
    psi = Q.psi
    powers = [Indicator.identity(psi, N)]
    for _ in range(N):
        powers.append(powers[-1] * Q)
    f1 = Q.t[1]
    g = [ZERO, ONE / f1]
    for n in range(2, N + 1):
        acc = ZERO
        for m in range(1, n):
            c = powers[m].t[n]
            if not c.is_zero() and not g[m].is_zero():
                acc = acc + g[m] * c
        g.append(-acc / f1 ** n)
    return Indicator(psi, g, N)


def log_pincherle(S: Indicator) -> Indicator:
    """(log S)' as S' * S^-1; log S itself is never formed."""
    dS = S.pincherle()
    return dS * S.invert().truncate(S.order - 1)


def indicator_of(psi, T_action, N=DEFAULT_ORDER) -> Indicator:
    """Indicator of a shift-invariant action, read off from a_k = [T x^k](0)."""
    return Indicator.from_raw_coeffs(psi, [T_action(Poly.monomial(k)).at_zero() for k in range(N + 1)], N)


def first_expansion(psi, T_action, Q: Indicator, basic, N=None) -> list[Scalar]:
    """a_k = [T p_k](0) for the basic polynomials p_0..p_N of Q."""
    if not Q.is_delta():
        raise NotDelta("expansion needs a delta operator")
    polys = basic.polys if hasattr(basic, "polys") else list(basic)
    if N is None:
        N = len(polys) - 1
    if N > len(polys) - 1:
        raise TruncationExceeded(f"basic sequence only reaches n = {len(polys) - 1}")
    return [T_action(polys[k]).at_zero() for k in range(N + 1)]


def expansion_reconstruct(psi, a, Q: Indicator) -> Indicator:
    return psi_compose(psi, a, Q)


def shift_invariance_check(psi, T_action, a_samples, degree_budget):
    """True iff T commutes with every sampled E^a up to degree_budget, else (False, (a, n))."""
    for a in a_samples:
        for n in range(degree_budget + 1):
            p = Poly.monomial(n)
            if T_action(translate(psi, a, p)) != translate(psi, a, T_action(p)):
                return False, (Scalar(a), n)
    return True, None
