"""Basic and Sheffer polynomial sequences of delta operators, plus the identity checks.

basic_by_definition is the reference construction; every other route and
closed form is compared against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Inconsistent, NotDelta, NotInvertible, TruncationExceeded
from .opalg import Indicator, comp_inverse, log_pincherle, psi_compose
from .poly import BiPoly, Poly, psi_derivative, translate, x_hat_psi, x_hat_psi_inv
from .scalar import ONE, ZERO, Scalar

ROUTES = ("definition", "rodrigues", "formula1", "formula3")


@dataclass
class CheckResult:
    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.ok


@dataclass
class PolySeq:
    polys: list
    route: str
    psi: object
    delta: Indicator | None = None
    name: str = ""
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, n):
        return self.polys[n]

    def __eq__(self, other):
        return isinstance(other, PolySeq) and self.psi == other.psi and list(self.polys) == list(other.polys)

    @property
    def n_max(self) -> int:
        return len(self.polys) - 1

    def eval_q(self, q0) -> list:
        return [p.eval_q(q0) for p in self.polys]

    def classical_limit(self) -> list:
        return self.eval_q(1)


def _require_delta(Q: Indicator):
    if not Q.is_delta():
        raise NotDelta("operator is not a delta operator (t_0 = 0, t_1 != 0 required)")


def _budget(n_max: int, limit: int, what: str):
    if n_max > limit:
        raise TruncationExceeded(f"{what}: n_max = {n_max} exceeds {limit} for this order")


def basic_by_definition(Q: Indicator, n_max: int, name: str = "") -> PolySeq:
    """Solve Q p_n = n_psi p_(n-1), p_n(0) = 0, degree by degree."""
    _require_delta(Q)
    _budget(n_max, Q.order - 1, "definition")
    psi, t = Q.psi, Q.t
    polys = [Poly.constant(ONE)]
    for n in range(1, n_max + 1):
        rhs = polys[-1].scale(psi.number(n))
        c = [ZERO] * (n + 1)
        # coefficient of x^d in Q p_n involves c_k, k > d, through t_(k-d) (k)_psi^(k-d)
        for d in range(n - 1, -1, -1):
            acc = rhs.coeff(d)
            for k in range(d + 2, n + 1):
                if not c[k].is_zero() and not t[k - d].is_zero():
                    acc = acc - c[k] * t[k - d] * psi.falling(k, k - d)
            c[d + 1] = acc / (t[1] * psi.number(d + 1))
        polys.append(Poly(c))
    return PolySeq(polys, "definition", psi, Q, name)


def basic_by_rodrigues(Q: Indicator, n_max: int, name: str = "") -> PolySeq:
    """p_n = (n_psi/n) x_hat (Q')^-1 p_(n-1)."""
    _require_delta(Q)
    _budget(n_max, Q.order - 2, "rodrigues")
    psi = Q.psi
    dQ_inv = Q.pincherle().invert()
    polys = [Poly.constant(ONE)]
    for n in range(1, n_max + 1):
        p = x_hat_psi(psi, dQ_inv.apply(polys[-1]))
        polys.append(p.scale(psi.number(n) / n))
    return PolySeq(polys, "rodrigues", psi, Q, name)


def delta_quotient(Q: Indicator) -> Indicator:
    """S with Q = d_psi S (coefficient shift); order N-1."""
    _require_delta(Q)
    return Indicator(Q.psi, Q.t[1:], Q.order - 1)


def basic_by_formula3(Q: Indicator, n_max: int, name: str = "") -> PolySeq:
    """p_n = (n_psi/n) x_hat S^-n x^(n-1)."""
    _require_delta(Q)
    _budget(n_max, Q.order - 1, "formula3")
    psi = Q.psi
    S_inv = delta_quotient(Q).invert()
    polys = [Poly.constant(ONE)]
    power = S_inv
    for n in range(1, n_max + 1):
        p = x_hat_psi(psi, power.apply(Poly.monomial(n - 1)))
        polys.append(p.scale(psi.number(n) / n))
        power = power * S_inv
    return PolySeq(polys, "formula3", psi, Q, name)


def basic_by_formula1(Q: Indicator, n_max: int, name: str = "") -> PolySeq:
    """p_n = Q' S^-(n+1) x^n."""
    _require_delta(Q)
    _budget(n_max, Q.order - 1, "formula1")
    psi = Q.psi
    S_inv = delta_quotient(Q).invert()
    dQ = Q.pincherle()
    polys = [Poly.constant(ONE)]
    power = S_inv * S_inv
    for n in range(1, n_max + 1):
        polys.append((dQ * power).apply(Poly.monomial(n)))
        power = power * S_inv
    return PolySeq(polys, "formula1", psi, Q, name)


_ROUTE_FUNCS = {
    "definition": basic_by_definition,
    "rodrigues": basic_by_rodrigues,
    "formula1": basic_by_formula1,
    "formula3": basic_by_formula3,
}


def basic(Q: Indicator, n_max: int, route: str = "definition", name: str = "") -> PolySeq:
    try:
        fn = _ROUTE_FUNCS[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}") from None
    return fn(Q, n_max, name)


def route_agreement(Q: Indicator, n_max: int, name: str = ""):
    """All four routes; returns (CheckResult, {route: PolySeq})."""
    seqs = {r: basic(Q, n_max, r, name) for r in ROUTES}
    ref = seqs["definition"].polys
    for r in ROUTES[1:]:
        for n, (a, b) in enumerate(zip(ref, seqs[r].polys)):
            if a != b:
                return CheckResult(False, (r, n), f"{r} differs from definition at n = {n}"), seqs
    return CheckResult(True), seqs


def check_basic_relations(Q: Indicator, seq: PolySeq) -> CheckResult:
    """Q p_n = n_psi p_(n-1), p_n(0) = delta_n0, deg p_n = n."""
    psi = Q.psi
    for n, p in enumerate(seq.polys):
        if p.degree != n:
            return CheckResult(False, n, f"deg p_{n} = {p.degree}")
        if p.at_zero() != (ONE if n == 0 else ZERO):
            return CheckResult(False, n, f"p_{n}(0) = {p.at_zero()}")
        lhs = Q.apply(p)
        rhs = seq.polys[n - 1].scale(psi.number(n)) if n else Poly()
        if lhs != rhs:
            return CheckResult(False, n, f"Q p_{n} != n_psi p_{n - 1}")
    return CheckResult(True)


def shift_bivariate(psi, p: Poly) -> BiPoly:
    """p(x +_psi y) = sum_k y^k/k_psi! d_psi^k p(x)."""
    terms = {}
    d = p
    k = 0
    while d.coeffs:
        f = psi.factorial(k)
        for i, c in enumerate(d.coeffs):
            if not c.is_zero():
                terms[(i, k)] = c / f
        d = psi_derivative(psi, d)
        k += 1
    return BiPoly(terms)


def _binomial_rhs(psi, left, right, n) -> BiPoly:
    out = BiPoly()
    for k in range(n + 1):
        out = out + (BiPoly.from_x(left[k]) * BiPoly.from_y(right[n - k])) * psi.binomial(n, k)
    return out


def _first_diff(a: BiPoly, b: BiPoly):
    keys = sorted(set(a.terms) | set(b.terms))
    for key in keys:
        if a.coeff(*key) != b.coeff(*key):
            return key
    return None


def check_binomial_type(seq: PolySeq, n_max: int | None = None) -> CheckResult:
    """p_n(x +_psi y) = sum_k binom_psi(n,k) p_k(x) p_(n-k)(y)."""
    psi = seq.psi
    top = seq.n_max if n_max is None else n_max
    for n in range(top + 1):
        lhs = shift_bivariate(psi, seq.polys[n])
        rhs = _binomial_rhs(psi, seq.polys, seq.polys, n)
        if lhs != rhs:
            return CheckResult(False, (n, _first_diff(lhs, rhs)), f"binomial identity fails at n = {n}")
    return CheckResult(True)


def corrupt(seq: PolySeq, n: int, extra: Poly) -> PolySeq:
    polys = list(seq.polys)
    polys[n] = polys[n] + extra
    return PolySeq(polys, seq.route + "+corrupt", seq.psi, seq.delta, seq.name)


def generating_function_check(Q: Indicator, seq: PolySeq, n_max: int) -> CheckResult:
    """[z^k] exp_psi{x Q^-1(z)} = p_k(x)/k_psi!."""
    psi = Q.psi
    g = comp_inverse(Q)
    powers = [Indicator.identity(psi, Q.order)]
    for _ in range(n_max):
        powers.append(powers[-1] * g)
    for k in range(n_max + 1):
        cs = [powers[m].t[k] / psi.factorial(m) for m in range(k + 1)]
        if Poly(cs) != seq.polys[k].scale(ONE / psi.factorial(k)):
            return CheckResult(False, k, f"generating function coefficient differs at z^{k}")
    return CheckResult(True)


# Sheffer sequences


def sheffer_from_S(Q: Indicator, S: Indicator, n_max: int, name: str = "") -> PolySeq:
    """s_n = S^-1 q_n with q_n the basic sequence of Q."""
    _require_delta(Q)
    if S.t[0].is_zero():
        raise NotInvertible("S must be invertible")
    _budget(n_max, S.order, "sheffer")
    base = basic_by_definition(Q, n_max, name)
    S_inv = S.invert()
    polys = [S_inv.apply(p) for p in base.polys]
    return PolySeq(polys, "sheffer", Q.psi, Q, name, {"S": S, "basic": base})


def check_sheffer_relations(Q: Indicator, seq: PolySeq) -> CheckResult:
    """s_0 nonzero constant, deg s_n = n, Q s_n = n_psi s_(n-1)."""
    psi = Q.psi
    s0 = seq.polys[0]
    if s0.degree != 0:
        return CheckResult(False, 0, "s_0 is not a nonzero constant")
    for n, p in enumerate(seq.polys):
        if p.degree != n:
            return CheckResult(False, n, f"deg s_{n} = {p.degree}")
        rhs = seq.polys[n - 1].scale(psi.number(n)) if n else Poly()
        if Q.apply(p) != rhs:
            return CheckResult(False, n, f"Q s_{n} != n_psi s_{n - 1}")
    return CheckResult(True)


def sheffer_binomial_check(Q: Indicator, S: Indicator, n_max: int) -> CheckResult:
    """s_n(x +_psi y) = sum_k binom_psi(n,k) s_k(x) q_(n-k)(y)."""
    seq = sheffer_from_S(Q, S, n_max)
    base = seq.meta["basic"].polys
    psi = Q.psi
    for n in range(n_max + 1):
        lhs = shift_bivariate(psi, seq.polys[n])
        rhs = _binomial_rhs(psi, seq.polys, base, n)
        if lhs != rhs:
            return CheckResult(False, (n, _first_diff(lhs, rhs)), f"Sheffer binomial identity fails at n = {n}")
    return CheckResult(True)


def sheffer_constant_term_expansion(Q: Indicator, S: Indicator, n_max: int) -> CheckResult:
    """s_n(x) = sum_k binom_psi(n,k) s_k(0) q_(n-k)(x)."""
    seq = sheffer_from_S(Q, S, n_max)
    base = seq.meta["basic"].polys
    psi = Q.psi
    for n in range(n_max + 1):
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + base[n - k].scale(psi.binomial(n, k) * seq.polys[k].at_zero())
        if rhs != seq.polys[n]:
            return CheckResult(False, n, f"constant-term expansion fails at n = {n}")
    return CheckResult(True)


def sheffer_inverse_expansion(Q: Indicator, S: Indicator, n_max: int) -> CheckResult:
    """S^-1 = sum_k s_k(0)/k_psi! Q^k through order n_max."""
    seq = sheffer_from_S(Q, S, n_max)
    consts = [p.at_zero() for p in seq.polys]
    Qn = Q if Q.order == S.order else Q.truncate(min(Q.order, S.order))
    lhs = psi_compose(Q.psi, consts, Qn).truncate(n_max)
    rhs = S.invert().truncate(n_max)
    if lhs != rhs:
        k = next(i for i in range(n_max + 1) if lhs.t[i] != rhs.t[i])
        return CheckResult(False, k, f"inverse expansion differs at coefficient {k}")
    return CheckResult(True)


def second_expansion_check(Q: Indicator, S: Indicator, T: Indicator, p: Poly, y_samples=()) -> CheckResult:
    """T p(x +_psi y) = sum_k s_k(y)/k_psi! Q^k S T p(x), y symbolic and sampled."""
    psi = Q.psi
    d = p.degree
    seq = sheffer_from_S(Q, S, d)
    Tp = T.apply(p)
    lhs = shift_bivariate(psi, Tp)
    rhs = BiPoly()
    term = S.apply(Tp)
    x_parts = []
    for k in range(d + 1):
        x_parts.append(term)
        rhs = rhs + (BiPoly.from_y(seq.polys[k]) * BiPoly.from_x(term)) * (ONE / psi.factorial(k))
        term = Q.apply(term)
    if lhs != rhs:
        return CheckResult(False, ("symbolic", _first_diff(lhs, rhs)), "second expansion fails with symbolic y")
    for y in y_samples:
        y = Scalar(y)
        left = translate(psi, y, Tp)
        right = Poly()
        for k in range(d + 1):
            right = right + x_parts[k].scale(seq.polys[k](y) / psi.factorial(k))
        if left != right:
            return CheckResult(False, ("sample", y), f"second expansion fails at y = {y}")
    return CheckResult(True)


def sheffer_converse_check(Q: Indicator, S: Indicator, seq: PolySeq) -> CheckResult:
    """S s_n = q_n for a sequence satisfying the expansion."""
    base = basic_by_definition(Q, seq.n_max)
    for n, s in enumerate(seq.polys):
        if S.apply(s) != base.polys[n]:
            return CheckResult(False, n, f"S s_{n} != q_{n}")
    return CheckResult(True)


def sheffer_recurrence_check(A: Indicator, seq: PolySeq):
    """Constants c_j with A p_n = sum_k binom_psi(n,k) p_k c_(n-k); returns (CheckResult, constants)."""
    psi = A.psi
    p = seq.polys
    p0 = p[0]
    if p0.degree != 0:
        raise Inconsistent("p_0 must be a nonzero constant")
    consts = []
    for n in range(len(p)):
        resid = A.apply(p[n])
        for k in range(1, n + 1):
            resid = resid - p[k].scale(psi.binomial(n, k) * consts[n - k])
        if resid.degree > 0:
            raise Inconsistent(f"no constant solves the recurrence at n = {n}")
        consts.append(resid.at_zero() / p0.at_zero())
    return CheckResult(True), consts


def expand_in_basis(f: Poly, seq: PolySeq) -> list[Scalar]:
    """Coefficients c_n with f = sum c_n s_n (triangular since deg s_n = n)."""
    if f.degree > seq.n_max:
        raise TruncationExceeded(f"degree {f.degree} exceeds sequence length {seq.n_max}")
    rest = f
    cs = [ZERO] * (max(f.degree, 0) + 1)
    for n in range(f.degree, -1, -1):
        s = seq.polys[n]
        c = rest.coeff(n) / s.coeff(n)
        cs[n] = c
        if not c.is_zero():
            rest = rest - s.scale(c)
    return cs


def inner_product(f: Poly, g: Poly, Q: Indicator, S: Indicator, seq: PolySeq) -> Scalar:
    """[(W f)(Q) S g](0) with W: s_n -> x^n."""
    if g.degree > seq.n_max:
        raise TruncationExceeded(f"degree {g.degree} exceeds sequence length {seq.n_max}")
    cs = expand_in_basis(f, seq)
    h = S.apply(g)
    total = ZERO
    term = h
    for c in cs:
        if not c.is_zero():
            total = total + c * term.at_zero()
        term = Q.apply(term)
    return total


def _apply_affine(psi, Q: Indicator, alpha, lam, p: Poly) -> Poly:
    """sum_k (alpha_k + lam_k x_hat) Q^k p."""
    out = Poly()
    term = p
    for a, l in zip(alpha, lam):
        if not term.coeffs:
            break
        if not a.is_zero():
            out = out + term.scale(a)
        if not l.is_zero():
            out = out + x_hat_psi(psi, term).scale(l)
        term = Q.apply(term)
    return out


@dataclass
class SpectralReport:
    alpha: list
    lam: list
    eigen_ok: bool
    u: list
    candidates: dict

    def to_json(self) -> dict:
        return {
            "solve": {"alpha": [str(c) for c in self.alpha], "lambda": [str(c) for c in self.lam],
                      "eigen": self.eigen_ok},
            "u": [str(c) for c in self.u],
            "candidates": {
                k: {"alpha": [str(c) for c in v["alpha"]], "lambda": [str(c) for c in v["lambda"]],
                    "eigen": v["eigen"], "matches_solve": v["matches_solve"]}
                for k, v in sorted(self.candidates.items())
            },
        }


def spectral_operator(Q: Indicator, S: Indicator, n_max: int) -> SpectralReport:
    """Operator A = sum_k (alpha_k + lambda_k x_hat) Q^k with A s_n = n s_n.

    The coefficients are found by a triangular solve and then compared with the
    closed-form candidates built from u_k and lambda_k.
    """
    psi = Q.psi
    seq = sheffer_from_S(Q, S, n_max)
    base = seq.meta["basic"].polys
    s = seq.polys
    c0 = s[0].at_zero()
    alpha, lam = [], []
    for n in range(n_max + 1):
        resid = s[n].scale(n) - _apply_affine(psi, Q, alpha, lam, s[n])
        if resid.degree > 1:
            raise Inconsistent(f"no affine coefficient solves the eigen-relation at n = {n}")
        f = psi.factorial(n) * c0
        alpha.append(resid.coeff(0) / f)
        lam.append(resid.coeff(1) / f)
    eigen_ok = all(_apply_affine(psi, Q, alpha, lam, s[n]) == s[n].scale(n) for n in range(n_max + 1))

    dlogS = log_pincherle(S)
    u = [ZERO]
    v_xinv = [ZERO]
    v_deriv = [ZERO]
    for k in range(1, n_max + 1):
        w = x_hat_psi_inv(psi, base[k])
        u.append(-dlogS.apply(w).at_zero())
        v_xinv.append(w.at_zero())
        v_deriv.append(base[k].coeff(1))
    norms = {
        "shifted": [ZERO] + [ONE / psi.factorial(k - 1) for k in range(1, n_max + 1)],
        "weighted": [ZERO] + [Scalar(k) / psi.factorial(k) for k in range(1, n_max + 1)],
    }
    vs = {"xinv": v_xinv, "deriv": v_deriv}
    candidates = {}
    for nk, w in norms.items():
        for vk, v in vs.items():
            a = [u[k] * w[k] for k in range(n_max + 1)]
            l = [v[k] * w[k] for k in range(n_max + 1)]
            eig = all(_apply_affine(psi, Q, a, l, s[n]) == s[n].scale(n) for n in range(n_max + 1))
            candidates[f"{nk}/{vk}"] = {
                "alpha": a, "lambda": l, "eigen": eig, "matches_solve": a == alpha and l == lam,
            }
    return SpectralReport(alpha, lam, eigen_ok, u, candidates)


def generalized_translation(Q: Indicator, basic_seq: PolySeq, y, p: Poly) -> Poly:
    """sum_n p_n(y) Q^n / n_psi! applied to p."""
    psi = Q.psi
    if p.degree > basic_seq.n_max:
        raise TruncationExceeded(f"degree {p.degree} exceeds basic sequence length {basic_seq.n_max}")
    y = Scalar(y)
    out = Poly()
    term = p
    n = 0
    while term.coeffs:
        out = out + term.scale(basic_seq.polys[n](y) / psi.factorial(n))
        term = Q.apply(term)
        n += 1
    return out
