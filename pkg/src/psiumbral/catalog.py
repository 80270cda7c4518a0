"""Named delta operators, printed closed forms, and classical oracles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import ErrataExcluded, InvalidParams, ParseError
from .opalg import DEFAULT_ORDER, Indicator
from .poly import Poly, one_hat, one_hat_inv, psi_shifted_power, translate, x_hat_psi
from .scalar import ONE, ZERO, Scalar, parse_scalar

NAMES = ("partial_psi", "delta_fwd", "nabla_bwd", "abel", "laguerre")

_ALIASES = {
    "dpsi": "partial_psi",
    "partial_psi": "partial_psi",
    "dfwd": "delta_fwd",
    "delta_fwd": "delta_fwd",
    "nbwd": "nabla_bwd",
    "nabla": "nabla_bwd",
    "nabla_bwd": "nabla_bwd",
    "abel": "abel",
    "laguerre": "laguerre",
}

_SHORT = {"partial_psi": "dpsi", "delta_fwd": "dfwd", "nabla_bwd": "nbwd", "abel": "abel", "laguerre": "laguerre"}

_STEPPED = ("delta_fwd", "nabla_bwd", "abel")


@dataclass
class NamedDelta:
    name: str
    params: dict
    indicator: Indicator

    @property
    def label(self) -> str:
        short = _SHORT[self.name]
        if self.name in _STEPPED:
            return f"{short}:a={self.params['a']}"
        return short


def parse_delta(text: str):
    """'abel:a=1' -> ('abel', {'a': Scalar(1)})."""
    head, _, rest = text.partition(":")
    name = _ALIASES.get(head.strip())
    if name is None:
        raise InvalidParams(f"unknown delta operator {head!r}")
    params = {}
    if rest:
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            if not eq:
                raise InvalidParams(f"malformed parameter {item!r}")
            try:
                params[key.strip()] = parse_scalar(val.strip())
            except ParseError as e:
                raise InvalidParams(str(e)) from e
    if name in _STEPPED:
        params.setdefault("a", ONE)
    extra = set(params) - ({"a"} if name in _STEPPED else set())
    if extra:
        raise InvalidParams(f"{name} takes no parameter(s) {sorted(extra)}")
    return name, params


def build(name: str, params: dict | None, psi, N: int = DEFAULT_ORDER) -> NamedDelta:
    name = _ALIASES.get(name, name)
    params = dict(params or {})
    if name in _STEPPED:
        params["a"] = Scalar(params.get("a", ONE))
    a = params.get("a")
    if name == "partial_psi":
        t = [ZERO, ONE]
    elif name == "delta_fwd":
        if a.is_zero():
            raise InvalidParams("delta_fwd needs a nonzero step")
        t = [ZERO] + [a ** k / psi.factorial(k) for k in range(1, N + 1)]
    elif name == "nabla_bwd":
        if a.is_zero():
            raise InvalidParams("nabla_bwd needs a nonzero step")
        t = [ZERO] + [-((-a) ** k) / psi.factorial(k) for k in range(1, N + 1)]
    elif name == "abel":
        t = [ZERO] + [a ** k / psi.factorial(k) for k in range(N)]
    elif name == "laguerre":
        t = [ZERO] + [-ONE] * N
    else:
        raise InvalidParams(f"unknown delta operator {name!r}")
    return NamedDelta(name, params, Indicator(psi, t, N))


def build_from_text(text: str, psi, N: int = DEFAULT_ORDER) -> NamedDelta:
    name, params = parse_delta(text)
    return build(name, params, psi, N)


def standard_deltas(psi, N: int = DEFAULT_ORDER) -> list[NamedDelta]:
    """d_psi, forward and backward differences, Abel and Laguerre, unit steps."""
    return [
        build("partial_psi", {}, psi, N),
        build("delta_fwd", {"a": 1}, psi, N),
        build("nabla_bwd", {"a": 1}, psi, N),
        build("abel", {"a": 1}, psi, N),
        build("laguerre", {}, psi, N),
    ]


def closed_form(name: str, params: dict | None, psi, n: int) -> Poly:
    """Printed closed forms that are not flagged as errata."""
    name = _ALIASES.get(name, name)
    if name == "partial_psi":
        return Poly.monomial(n)
    if name == "abel":
        if n == 0:
            return Poly.constant(ONE)
        a = Scalar((params or {}).get("a", ONE))
        inner = psi_shifted_power(psi, -a * n, n - 1)
        return x_hat_psi(psi, inner).scale(psi.number(n) / n)
    raise ErrataExcluded(f"no trusted closed form for {name}; see errata fixtures")


def _frac_poly(cs) -> Poly:
    return Poly([Scalar(Fraction(c)) for c in cs])


def _expand_product(roots) -> list:
    cs = [Fraction(1)]
    for r in roots:
        nxt = [Fraction(0)] * (len(cs) + 1)
        for i, c in enumerate(cs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        cs = nxt
    return cs


def classical_oracle(name: str, params: dict | None, n: int) -> Poly:
    """Classical basic polynomials from their textbook closed forms."""
    name = _ALIASES.get(name, name)
    a = (params or {}).get("a", 1)
    if name in _STEPPED:
        a = Scalar(a)
        if not a.is_rational():
            raise InvalidParams("classical oracle needs a rational step")
        a = a.eval(0)
    if name == "partial_psi":
        return Poly.monomial(n)
    if name == "delta_fwd":
        return _frac_poly(_expand_product([k * a for k in range(n)]))
    if name == "nabla_bwd":
        return _frac_poly(_expand_product([-k * a for k in range(n)]))
    if name == "abel":
        if n == 0:
            return Poly.constant(ONE)
        return _frac_poly(_expand_product([0] + [n * a] * (n - 1)))
    if name == "laguerre":
        if n == 0:
            return Poly.constant(ONE)
        cs = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            cs[k] = Fraction((-1) ** k * factorial(n) * comb(n - 1, k - 1), factorial(k))
        return _frac_poly(cs)
    raise InvalidParams(f"unknown delta operator {name!r}")


# Printed formulas that do not survive verification.  They are kept so that
# their divergence from the defining conditions stays pinned by tests.


def printed_difference_product(psi, n: int, backward: bool = False) -> Poly:
    """(n_psi!/n!) (x_hat E^(-+1) 1_hat^-1)^n [1]."""
    step = ONE if backward else -ONE
    inv = one_hat_inv(psi)
    p = Poly.constant(ONE)
    for _ in range(n):
        p = x_hat_psi(psi, translate(psi, step, inv(p)))
    return p.scale(psi.factorial(n) / factorial(n))


def printed_difference_sum(psi, n: int, backward: bool = False) -> Poly:
    """(n_psi/n) sum_k (+-1)^k (n-1)_psi^(k) / (k+1)_psi! * (n-k)/(n-k)_psi x^(n-k)."""
    if n == 0:
        return Poly.constant(ONE)
    cs = [ZERO] * (n + 1)
    for k in range(n):
        sign = -1 if (backward and k % 2) else 1
        c = psi.falling(n - 1, k) / psi.factorial(k + 1) * (n - k) / psi.number(n - k)
        cs[n - k] = c * sign
    return Poly(cs).scale(psi.number(n) / n)


def printed_laguerre(psi, n: int) -> Poly:
    """(n_psi/n) sum_k (-1)^k binom_psi(n,k) (n-1)_psi^(n-k) k/k_psi x^k."""
    if n == 0:
        return Poly.constant(ONE)
    cs = [ZERO] * (n + 1)
    for k in range(1, n + 1):
        c = psi.binomial(n, k) * psi.falling(n - 1, n - k) * k / psi.number(k)
        cs[k] = c if k % 2 == 0 else -c
    return Poly(cs).scale(psi.number(n) / n)


def printed_difference_derivative(psi, p: Poly, backward: bool = False) -> Poly:
    """The claimed derivative 1_hat E^(+-1) of a difference operator, applied to p."""
    return one_hat(psi)(translate(psi, -ONE if backward else ONE, p))

