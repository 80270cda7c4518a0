"""Incidence algebra of the boolean lattice of subsets of {1..m}.

Subsets are bitmasks.  Functions that only depend on |B - A| ("types") are
stored as value lists a_0..a_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import GroundTooLarge, Inconsistent
from .scalar import ONE, ZERO, Scalar

MAX_GROUND = 12


def _submasks(b: int):
    """All c with c subset of b, in increasing order."""
    out = []
    c = b
    while True:
        out.append(c)
        if c == 0:
            break
        c = (c - 1) & b
    return out[::-1]


class BooleanLattice:
    def __init__(self, m: int):
        if m > MAX_GROUND:
            raise GroundTooLarge(f"ground set of size {m} exceeds {MAX_GROUND}")
        if m < 0:
            raise ValueError("negative ground size")
        self.m = m

    @property
    def elements(self):
        return range(1 << self.m)

    def segment(self, a: int, b: int):
        """Sets c with a <= c <= b."""
        if a & ~b:
            return []
        return [c | a for c in _submasks(b & ~a)]

    def __repr__(self):
        return f"BooleanLattice({self.m})"


@dataclass(frozen=True)
class TypeFunction:
    values: tuple

    def __init__(self, values):
        object.__setattr__(self, "values", tuple(Scalar(v) for v in values))

    def __call__(self, a: int, b: int) -> Scalar:
        if a & ~b:
            return ZERO
        return self.values[bin(b & ~a).count("1")]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def zeta(m: int) -> TypeFunction:
    return TypeFunction([ONE] * (m + 1))


def delta(m: int) -> TypeFunction:
    return TypeFunction([ONE] + [ZERO] * m)


def mobius_type(m: int) -> TypeFunction:
    return TypeFunction([(-1) ** n for n in range(m + 1)])


def enum_convolve(L: BooleanLattice, f: TypeFunction, g: TypeFunction, all_segments: bool = False) -> TypeFunction:
    """(f*g)(A,B) = sum over A <= C <= B of f(A,C) g(C,B), by enumeration."""
    m = L.m
    if len(f) < m + 1 or len(g) < m + 1:
        raise ValueError("type functions must be given up to the ground size")
    out = []
    for n in range(m + 1):
        b = (1 << n) - 1
        total = ZERO
        for c in L.segment(0, b):
            total = total + f(0, c) * g(c, b)
        out.append(total)
    h = TypeFunction(out)
    if all_segments:
        for b in L.elements:
            for a in _submasks(b):
                total = ZERO
                for c in L.segment(a, b):
                    total = total + f(a, c) * g(c, b)
                if total != h(a, b):
                    raise Inconsistent(f"convolution is not a type function on segment ({a}, {b})")
    return h


def enum_convolve_general(L: BooleanLattice, f, g):
    """Convolution of arbitrary incidence functions given as callables on (A, B)."""
    table = {}
    for b in L.elements:
        for a in _submasks(b):
            total = ZERO
            for c in L.segment(a, b):
                total = total + f(a, c) * g(c, b)
            table[(a, b)] = total
    return lambda a, b: table.get((a, b), ZERO)


def series_convolve(psi, f: TypeFunction, g: TypeFunction) -> TypeFunction:
    """c_n = sum_k binom_psi(n,k) a_k b_(n-k)."""
    n_top = min(len(f), len(g))
    out = []
    for n in range(n_top):
        total = ZERO
        for k in range(n + 1):
            total = total + psi.binomial(n, k) * f[k] * g[n - k]
        out.append(total)
    return TypeFunction(out)


def mobius(L: BooleanLattice):
    """mu(A, B) from mu(A,A) = 1, mu(A,B) = -sum_{A <= C < B} mu(A,C)."""

    @lru_cache(maxsize=None)
    def mu(a: int, b: int) -> Scalar:
        if a & ~b:
            return ZERO
        if a == b:
            return ONE
        total = ZERO
        for c in L.segment(a, b):
            if c != b:
                total = total + mu(a, c)
        return -total

    return mu


def mobius_inversion_roundtrip(L: BooleanLattice, f) -> bool:
    """g(x) = sum_{y <= x} f(y), then f(x) = sum_{y <= x} g(y) mu(y, x)."""
    size = 1 << L.m
    if isinstance(f, TypeFunction):
        vals = [f(0, x) for x in range(size)]
    else:
        vals = [Scalar(v) for v in f]
    if len(vals) != size:
        raise ValueError(f"need {size} values, got {len(vals)}")
    mu = mobius(L)
    g = [sum((vals[y] for y in _submasks(x)), ZERO) for x in range(size)]
    back = [sum((g[y] * mu(y, x) for y in _submasks(x)), ZERO) for x in range(size)]
    return back == vals


def toeplitz(coeffs, n: int):
    """Upper-triangular (n+1)x(n+1) matrix with a_(j-i) above the diagonal."""
    cs = [Scalar(c) for c in coeffs]
    return [[cs[j - i] if j >= i and j - i < len(cs) else ZERO for j in range(n + 1)] for i in range(n + 1)]


def matmul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]


def matrix_iso_check(psi, f, g, n: int, exponential: bool = False) -> bool:
    """Toeplitz(f) Toeplitz(g) equals Toeplitz of the convolution of f and g.

    Ordinary case: Cauchy convolution.  Exponential case: the matrices carry the
    normalized coefficients a_k / k_psi!, and the product must match the
    psi-binomial convolution normalized the same way.
    """
    f = [Scalar(c) for c in (f.values if isinstance(f, TypeFunction) else f)][: n + 1]
    g = [Scalar(c) for c in (g.values if isinstance(g, TypeFunction) else g)][: n + 1]
    f += [ZERO] * (n + 1 - len(f))
    g += [ZERO] * (n + 1 - len(g))
    if exponential:
        fn = [c / psi.factorial(k) for k, c in enumerate(f)]
        gn = [c / psi.factorial(k) for k, c in enumerate(g)]
        conv = series_convolve(psi, TypeFunction(f), TypeFunction(g)).values
        target = [c / psi.factorial(k) for k, c in enumerate(conv)]
    else:
        fn, gn = f, g
        target = [sum((f[k] * g[j - k] for k in range(j + 1)), ZERO) for j in range(n + 1)]
    return matmul(toeplitz(fn, n), toeplitz(gn, n)) == toeplitz(target, n)


def incidence_table(psi, m: int, f: TypeFunction | None = None, g: TypeFunction | None = None):
    """Rows (n, enumerated value, series value, equal?)."""
    L = BooleanLattice(m)
    f = f or zeta(m)
    g = g or zeta(m)
    enum = enum_convolve(L, f, g)
    ser = series_convolve(psi, f, g)
    return [(n, enum[n], ser[n], enum[n] == ser[n]) for n in range(m + 1)]
