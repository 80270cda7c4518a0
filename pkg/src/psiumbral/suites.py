"""Named verification suites shared by the command line and the tests.

Each suite returns a list of Row(name, status, detail) with status one of
"pass", "fail" or "info".  Info rows carry reports that are not asserted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import catalog, incidence, oscillator
from . import psi as psimod
from . import sequences as seqs
from .opalg import Indicator, expansion_reconstruct, first_expansion
from .poly import Poly
from .scalar import ONE, Q, ZERO, Scalar

SUITES = ("binomial", "expansion1", "expansion2", "gf", "sheffer", "inner",
          "spectral", "oscillator", "incidence", "errata")


@dataclass
class Row:
    name: str
    status: str
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class Context:
    psi: object
    delta: catalog.NamedDelta
    order: int = 16
    n: int = 6


def _row(name, ok, detail=""):
    if isinstance(ok, seqs.CheckResult):
        detail = detail or ("" if ok.ok else f"{ok.detail} (witness {ok.witness})")
        ok = ok.ok
    return Row(name, "pass" if ok else "fail", detail)


def sheffer_pairs(psi, N):
    """(label, Q, S) for the three stock Sheffer families."""
    d = Indicator.d(psi, N)
    dfwd = catalog.build("delta_fwd", {"a": 1}, psi, N).indicator
    return [
        ("d/E1", d, Indicator.exp(psi, 1, N)),
        ("dfwd/dfwd'", dfwd, dfwd.pincherle()),
        ("d/2id", d, Indicator.scalar(psi, 2, N)),
    ]


def suite_binomial(ctx: Context):
    Qd = ctx.delta.indicator
    agree, routes = seqs.route_agreement(Qd, ctx.n, ctx.delta.label)
    rows = [_row(f"routes agree ({ctx.delta.label})", agree)]
    for r in seqs.ROUTES:
        rows.append(_row(f"binomial type [{r}]", seqs.check_binomial_type(routes[r])))
    bad = seqs.corrupt(routes["definition"], min(2, ctx.n), Poly.monomial(1))
    res = seqs.check_binomial_type(bad)
    rows.append(_row("corrupted control rejected", not res.ok, f"witness {res.witness}"))
    return rows


def suite_expansion1(ctx: Context):
    psi, N, n = ctx.psi, ctx.order, ctx.n
    Qd = ctx.delta.indicator
    if ctx.delta.name == "partial_psi":
        Qd = catalog.build("delta_fwd", {"a": 1}, psi, N).indicator
    base = seqs.basic_by_definition(Qd, n)
    rows = []
    targets = [("d_psi", Indicator.d(psi, N)), ("E^1", Indicator.exp(psi, 1, N)),
               ("laguerre", catalog.build("laguerre", {}, psi, N).indicator)]
    for label, T in targets:
        a = first_expansion(psi, T.apply, Qd, base)
        R = expansion_reconstruct(psi, a, Qd)
        ok = all(R.apply(Poly.monomial(j)) == T.apply(Poly.monomial(j)) for j in range(n + 1))
        rows.append(_row(f"first expansion reconstructs {label}", ok))
    return rows


def suite_expansion2(ctx: Context):
    psi, N = ctx.psi, ctx.order
    rows = []
    T = catalog.build("delta_fwd", {"a": 1}, psi, N).indicator
    p = Poly.monomial(min(3, ctx.n))
    for label, Qd, S in sheffer_pairs(psi, N):
        rows.append(_row(f"second expansion [{label}]",
                         seqs.second_expansion_check(Qd, S, T, p, [1, -2, Scalar("1/3")])))
        s = seqs.sheffer_from_S(Qd, S, ctx.n)
        rows.append(_row(f"second expansion converse [{label}]", seqs.sheffer_converse_check(Qd, S, s)))
    return rows


def suite_gf(ctx: Context):
    Qd = ctx.delta.indicator
    base = seqs.basic_by_definition(Qd, ctx.n)
    return [_row(f"generating function ({ctx.delta.label})", seqs.generating_function_check(Qd, base, ctx.n))]


def suite_sheffer(ctx: Context):
    rows = []
    n = ctx.n
    for label, Qd, S in sheffer_pairs(ctx.psi, ctx.order):
        s = seqs.sheffer_from_S(Qd, S, n)
        rows.append(_row(f"sheffer relations [{label}]", seqs.check_sheffer_relations(Qd, s)))
        rows.append(_row(f"sheffer binomial [{label}]", seqs.sheffer_binomial_check(Qd, S, n)))
        rows.append(_row(f"constant-term expansion [{label}]", seqs.sheffer_constant_term_expansion(Qd, S, n)))
        rows.append(_row(f"inverse expansion [{label}]", seqs.sheffer_inverse_expansion(Qd, S, n)))
        _, consts = seqs.sheffer_recurrence_check(Qd, s)
        expect = [ZERO, ONE] + [ZERO] * (n - 1)
        rows.append(_row(f"recurrence constants [{label}]", consts == expect[: n + 1],
                         "constants " + ", ".join(str(c) for c in consts)))
    return rows


def suite_inner(ctx: Context):
    rows = []
    psi = ctx.psi
    for label, Qd, S in sheffer_pairs(psi, ctx.order):
        s = seqs.sheffer_from_S(Qd, S, ctx.n)
        ok = True
        for k in range(ctx.n + 1):
            for m in range(ctx.n + 1):
                v = seqs.inner_product(s.polys[k], s.polys[m], Qd, S, s)
                if v != (psi.factorial(m) if k == m else ZERO):
                    ok = False
        rows.append(_row(f"orthogonality [{label}]", ok))
    return rows


def suite_spectral(ctx: Context):
    rows = []
    n = min(ctx.n, 5)
    for label, Qd, S in sheffer_pairs(ctx.psi, ctx.order):
        rep = seqs.spectral_operator(Qd, S, n)
        rows.append(_row(f"eigen-relation from triangular solve [{label}]", rep.eigen_ok))
        for key in sorted(rep.candidates):
            c = rep.candidates[key]
            rows.append(Row(f"closed form {key} [{label}]", "info",
                            f"eigen={'yes' if c['eigen'] else 'no'} matches_solve={'yes' if c['matches_solve'] else 'no'}"))
    return rows


def suite_oscillator(ctx: Context):
    psi, N, n = ctx.psi, ctx.order, ctx.n
    Qd = ctx.delta.indicator
    base = seqs.basic_by_definition(Qd, n + 1)
    rows = [_row(f"mutator commutation ({ctx.delta.label})", oscillator.commutation_check(Qd, base))]
    ws = [oscillator.mutator_weight(psi, k) for k in range(1, n + 1)]
    if psi.family == "q_natural":
        rows.append(_row("mutator weight equals q", all(w == Q for w in ws)))
        neg = oscillator.commutation_check(Qd, base, oscillator.identity_op(base))
        if ctx.delta.name == "partial_psi":
            rows.append(_row("identity in place of q_hat rejected", not neg.ok))
    rows.append(_row("plane variables q_hat-commute", oscillator.plane_commutes(psi, n)))
    table, first = oscillator.qplane_binomial_obstruction(psi, n)
    if psi.family in ("q_natural", "classical"):
        rows.append(_row("plane binomial identity", first is None,
                         "" if first is None else f"first violation at n = {first}"))
    else:
        detail = "no violation up to n = %d" % n if first is None else f"first violation at n = {first}: " \
            f"lhs {table[first]['lhs']} rhs {table[first]['rhs']}"
        rows.append(Row("plane binomial obstruction", "info", detail))
    return rows


def suite_incidence(ctx: Context):
    rows = []
    cl = psimod.classical()
    rng = random.Random(20240611)
    ok = True
    for m in range(0, 7):
        L = incidence.BooleanLattice(m)
        for _ in range(3):
            f = incidence.TypeFunction([rng.randint(-5, 5) for _ in range(m + 1)])
            g = incidence.TypeFunction([rng.randint(-5, 5) for _ in range(m + 1)])
            if incidence.enum_convolve(L, f, g).values != incidence.series_convolve(cl, f, g).values:
                ok = False
    rows.append(_row("enumeration equals binomial convolution (m <= 6)", ok))
    L = incidence.BooleanLattice(6)
    mz = incidence.enum_convolve(L, incidence.mobius_type(6), incidence.zeta(6))
    rows.append(_row("mu * zeta = delta", mz == incidence.delta(6)))
    L4 = incidence.BooleanLattice(4)
    data = [Scalar(rng.randint(-9, 9)) / rng.randint(1, 5) for _ in range(16)]
    rows.append(_row("Mobius inversion round trip (m = 4)", incidence.mobius_inversion_roundtrip(L4, data)))
    psi, N = ctx.psi, 6
    f = [Scalar(rng.randint(-3, 3)) for _ in range(N + 1)]
    g = [Scalar(rng.randint(-3, 3)) for _ in range(N + 1)]
    conv = incidence.series_convolve(psi, incidence.TypeFunction(f), incidence.TypeFunction(g))
    prod = (Indicator.from_raw_coeffs(psi, f, N) * Indicator.from_raw_coeffs(psi, g, N)).raw_coeffs()
    rows.append(_row("psi-series convolution matches indicator product", list(conv.values) == prod))
    return rows


def suite_errata(ctx: Context):
    """Printed formulas against the defining conditions, always over q."""
    psi = psimod.q_natural()
    N = 16
    rows = []
    defs = {
        name: seqs.basic_by_definition(catalog.build(name, {"a": 1} if name != "laguerre" else {}, psi, N).indicator, 6)
        for name in ("delta_fwd", "nabla_bwd", "abel", "laguerre")
    }
    fixtures = [
        ("difference product form", lambda n: catalog.printed_difference_product(psi, n), "delta_fwd"),
        ("backward difference product form", lambda n: catalog.printed_difference_product(psi, n, True), "nabla_bwd"),
        ("laguerre printed sum", lambda n: catalog.printed_laguerre(psi, n), "laguerre"),
    ]
    for label, fn, name in fixtures:
        printed, oracle = fn(2), defs[name].polys[2]
        rows.append(_row(f"{label}: differs at n = 2", printed != oracle, f"printed {printed} vs {oracle}"))
        agree = all(fn(n).classical_limit() == defs[name].polys[n].classical_limit() for n in range(7))
        rows.append(_row(f"{label}: agrees at q = 1 (n <= 6)", agree))
    for label, back, name in (("difference explicit sum", False, "delta_fwd"),
                              ("backward difference explicit sum", True, "nabla_bwd")):
        printed = catalog.printed_difference_sum(psi, 2, back)
        diverges = printed.classical_limit() != defs[name].polys[2].classical_limit()
        rows.append(_row(f"{label}: wrong even at q = 1", diverges, f"printed {printed} vs {defs[name].polys[2]}"))
    first = next((n for n in range(7)
                  if catalog.closed_form("abel", {"a": 1}, psi, n) != defs["abel"].polys[n]), None)
    rows.append(_row("abel closed form first diverges at n = 3", first == 3,
                     "agrees for all n <= 6" if first is None else f"first divergence at n = {first}"))
    dfwd = catalog.build("delta_fwd", {"a": 1}, psi, N).indicator
    dp = dfwd.pincherle()
    claim_differs = any(dp.apply(Poly.monomial(k)) != catalog.printed_difference_derivative(psi, Poly.monomial(k))
                        for k in range(6))
    rows.append(_row("claimed derivative of the difference operator differs", claim_differs))
    return rows


_SUITE_FUNCS = {
    "binomial": suite_binomial,
    "expansion1": suite_expansion1,
    "expansion2": suite_expansion2,
    "gf": suite_gf,
    "sheffer": suite_sheffer,
    "inner": suite_inner,
    "spectral": suite_spectral,
    "oscillator": suite_oscillator,
    "incidence": suite_incidence,
    "errata": suite_errata,
}


def run_suite(name: str, ctx: Context):
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(Row(f"{s}: {r.name}", r.status, r.detail) for r in _SUITE_FUNCS[s](ctx))
        return out
    return _SUITE_FUNCS[name](ctx)
