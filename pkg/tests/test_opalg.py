import pytest
from hypothesis import given
from hypothesis import strategies as st

from psiumbral import catalog
from psiumbral import psi as psimod
from psiumbral.errors import CompositionDiverges, MismatchedContext, NotDelta, NotInvertible, TruncationExceeded
from psiumbral.opalg import (Indicator, comp_inverse, expansion_reconstruct, first_expansion, indicator_of,
                             log_pincherle, pincherle_commutator, psi_compose, shift_invariance_check)
from psiumbral.poly import Poly, mul_x, one_hat, psi_derivative, translate
from psiumbral.scalar import ONE, Q, ZERO, Scalar
from psiumbral.sequences import basic_by_definition

from conftest import indicators, polys

q = psimod.q_natural()
cl = psimod.classical()
N = 10


def test_from_raw_coeffs():
    assert Indicator.from_raw_coeffs(q, [0, 1], N) == Indicator.d(q, N)
    assert Indicator.from_raw_coeffs(q, [Scalar(2) ** k for k in range(N + 1)], N) == Indicator.exp(q, 2, N)
    assert Indicator.from_raw_coeffs(q, [0] * 5, N) == Indicator.zero(q, N)


def test_apply_examples():
    E1 = Indicator.exp(q, 1, N)
    assert E1.apply(Poly.monomial(2)) == Poly([1, 1 + Q, 1])
    p = Poly([3, 0, Q])
    assert Indicator.identity(q, N).apply(p) == p
    assert Indicator.d(q, N).apply(Poly.monomial(3)) == Poly.monomial(2, q.number(3))
    with pytest.raises(TruncationExceeded):
        Indicator.d(q, 3).apply(Poly.monomial(4))


def test_multiply_examples():
    d = Indicator.d(q, N)
    assert (d * d).raw_coeffs()[2] == q.factorial(2)
    T = Indicator.exp(q, 3, N)
    assert T * Indicator.identity(q, N) == T
    with pytest.raises(MismatchedContext):
        T * Indicator.d(cl, N)
    with pytest.raises(MismatchedContext):
        T * Indicator.d(q, N - 1)


def test_invert_examples():
    assert Indicator.identity(q, N).invert() == Indicator.identity(q, N)
    u = Indicator.exp(q, 1, N).invert().t
    assert (u[0], u[1], u[2]) == (ONE, -ONE, Q / (1 + Q))
    with pytest.raises(NotInvertible):
        Indicator.d(q, N).invert()


def test_is_delta_examples():
    assert Indicator.d(q, N).is_delta()
    assert not Indicator.exp(q, 1, N).is_delta()
    assert (Indicator.exp(q, 1, N) - Indicator.identity(q, N)).is_delta()


def test_pincherle_examples():
    d = Indicator.d(q, N)
    assert d.pincherle() == Indicator.identity(q, N - 1)
    for n in range(1, 5):
        assert (d ** n).pincherle() == (Indicator.d(q, N - 1) ** (n - 1)).scale(n)
    dq = catalog.build("delta_fwd", {"a": 1}, q, N).indicator.pincherle()
    assert all(dq.t[j] == Scalar(j + 1) / q.factorial(j + 1) for j in range(N))


def test_commutator_examples():
    d = Indicator.d(q, N)
    act = pincherle_commutator(d, N - 1)
    for n in range(6):
        assert act(Poly.monomial(n)) == Poly.monomial(n)
    assert pincherle_commutator(d * d, N - 1)(Poly.monomial(3)) == Poly.monomial(2, 2 * q.number(3))
    assert pincherle_commutator(Indicator.identity(q, N), N - 1)(Poly.monomial(4)).is_zero()


def test_compose_examples():
    Qd = catalog.build("abel", {"a": 1}, q, N).indicator
    assert psi_compose(q, [0, 1], Qd) == Qd
    a = Scalar(2)
    assert psi_compose(q, [a ** k for k in range(N + 1)], Indicator.d(q, N)) == Indicator.exp(q, a, N)
    with pytest.raises(CompositionDiverges):
        psi_compose(q, [0, 1], Indicator.exp(q, 1, N))


def test_comp_inverse_round_trips():
    d = Indicator.d(q, N)
    assert comp_inverse(d) == d
    for delta in catalog.standard_deltas(q, N):
        Qd = delta.indicator
        g = comp_inverse(Qd)
        assert psi_compose(q, g.raw_coeffs(), Qd) == d
        assert psi_compose(q, Qd.raw_coeffs(), g) == d
    with pytest.raises(NotDelta):
        comp_inverse(Indicator.exp(q, 1, N))


def test_log_pincherle():
    assert log_pincherle(Indicator.identity(q, N)) == Indicator.zero(q, N - 1)
    assert log_pincherle(Indicator.scalar(q, 5, N)) == Indicator.zero(q, N - 1)
    S = Indicator.exp(q, 1, N)
    assert log_pincherle(S) * S.truncate(N - 1) == S.pincherle()


def test_first_expansion_examples():
    d = Indicator.d(q, N)
    mono = basic_by_definition(d, 6)
    assert first_expansion(q, Indicator.exp(q, 1, N).apply, d, mono) == [ONE] * 7
    assert first_expansion(q, lambda p: p, d, mono) == [ONE] + [ZERO] * 6
    dfwd = catalog.build("delta_fwd", {"a": 1}, q, N).indicator
    base = basic_by_definition(dfwd, 6)
    a = first_expansion(q, d.apply, dfwd, base)
    assert a[1] == ONE
    R = expansion_reconstruct(q, a, dfwd)
    assert all(R.apply(Poly.monomial(j)) == d.apply(Poly.monomial(j)) for j in range(7))


def test_shift_invariance():
    ok, _ = shift_invariance_check(q, Indicator.exp(q, 2, N).apply, [1, -1], 5)
    assert ok
    ok, witness = shift_invariance_check(q, one_hat(q), [1], 5)
    assert not ok and witness is not None
    ok, _ = shift_invariance_check(q, mul_x, [1], 3)
    assert not ok


def test_indicator_of_recovers_operator():
    T = Indicator.exp(q, 1, N) * catalog.build("laguerre", {}, q, N).indicator
    assert indicator_of(q, T.apply, N) == T


@given(indicators(q), indicators(q), polys(5))
def test_multiply_is_composition(T, S, p):
    assert (T * S).apply(p) == T.apply(S.apply(p))
    assert T * S == S * T


@given(indicators(q, support=4).filter(lambda T: not T.t[0].is_zero()))
def test_inverse_round_trip(T):
    assert T * T.invert() == Indicator.identity(q, T.order)


@given(indicators(q), indicators(q))
def test_leibniz(T, S):
    assert (T * S).pincherle() == T.pincherle() * S.truncate(T.order - 1) + T.truncate(T.order - 1) * S.pincherle()


@given(indicators(q, delta=True))
def test_delta_lowers_degree_and_kills_constants(Qd):
    assert Qd.apply(Poly.constant(3)).is_zero()
    for n in range(1, 6):
        assert Qd.apply(Poly.monomial(n)).degree == n - 1
