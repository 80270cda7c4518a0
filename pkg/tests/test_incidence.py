import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from psiumbral import incidence as inc
from psiumbral import psi as psimod
from psiumbral.errors import GroundTooLarge
from psiumbral.opalg import Indicator
from psiumbral.scalar import ONE, Q, Scalar

q = psimod.q_natural()
cl = psimod.classical()


def test_segments():
    L = inc.BooleanLattice(4)
    assert len(L.segment(0b0001, 0b1011)) == 4
    assert L.segment(0b0100, 0b0011) == []
    with pytest.raises(GroundTooLarge):
        inc.BooleanLattice(inc.MAX_GROUND + 1)


def test_zeta_squared_counts_subsets():
    for m in range(5):
        z = inc.enum_convolve(inc.BooleanLattice(m), inc.zeta(m), inc.zeta(m))
        assert list(z.values) == [Scalar(2 ** n) for n in range(m + 1)]


def test_delta_is_unit():
    f = inc.TypeFunction([3, -1, 2, 5])
    L = inc.BooleanLattice(3)
    assert inc.enum_convolve(L, inc.delta(3), f) == f
    assert inc.series_convolve(q, inc.delta(3), f) == f


def test_mobius():
    for m in range(7):
        L = inc.BooleanLattice(m)
        assert inc.enum_convolve(L, inc.mobius_type(m), inc.zeta(m)) == inc.delta(m)
    mu = inc.mobius(inc.BooleanLattice(4))
    assert mu(0b0001, 0b0111) == 1 and mu(0, 0b0111) == -1


def test_q_series_convolution():
    z = inc.series_convolve(q, inc.zeta(2), inc.zeta(2))
    assert z[2] == 3 + Q


def test_mobius_inversion_examples():
    L = inc.BooleanLattice(4)
    assert inc.mobius_inversion_roundtrip(L, [1] + [0] * 15)
    assert inc.mobius_inversion_roundtrip(L, inc.zeta(4))
    rng = random.Random(7)
    assert inc.mobius_inversion_roundtrip(L, [Scalar(rng.randint(-9, 9)) / rng.randint(1, 7) for _ in range(16)])


def test_all_segments_type_check():
    L = inc.BooleanLattice(3)
    h = inc.enum_convolve(L, inc.TypeFunction([1, 2, 3, 4]), inc.zeta(3), all_segments=True)
    assert h == inc.series_convolve(cl, inc.TypeFunction([1, 2, 3, 4]), inc.zeta(3))


def test_matrix_iso():
    ones = [1] * 5
    assert inc.matrix_iso_check(cl, ones, ones, 4)
    prod = inc.matmul(inc.toeplitz(ones, 4), inc.toeplitz(ones, 4))
    assert [prod[0][j] for j in range(5)] == [Scalar(j + 1) for j in range(5)]
    ident = inc.toeplitz([1], 4)
    assert inc.matmul(ident, inc.toeplitz([2, 3], 4)) == inc.toeplitz([2, 3], 4)
    E = Indicator.exp(q, 1, 8)
    Einv = E.invert()
    assert inc.matmul(inc.toeplitz(E.t, 8), inc.toeplitz(Einv.t, 8)) == inc.toeplitz([1], 8)
    assert inc.matrix_iso_check(q, [1, 2, 0, -1], [0, 1, 1, 1], 3, exponential=True)


def test_incidence_table_classical():
    rows = inc.incidence_table(cl, 4)
    assert all(r[3] for r in rows)
    rows = inc.incidence_table(q, 3)
    assert not all(r[3] for r in rows)


@given(st.integers(0, 6).flatmap(lambda m: st.tuples(
    st.just(m),
    st.lists(st.integers(-5, 5), min_size=m + 1, max_size=m + 1),
    st.lists(st.integers(-5, 5), min_size=m + 1, max_size=m + 1))))
def test_enumeration_equals_binomial_convolution(args):
    m, f, g = args
    f, g = inc.TypeFunction(f), inc.TypeFunction(g)
    assert inc.enum_convolve(inc.BooleanLattice(m), f, g) == inc.series_convolve(cl, f, g)


@given(st.lists(st.integers(-3, 3), min_size=7, max_size=7), st.lists(st.integers(-3, 3), min_size=7, max_size=7))
def test_series_convolution_is_indicator_product(f, g):
    for psi in (q, psimod.squares()):
        conv = inc.series_convolve(psi, inc.TypeFunction(f), inc.TypeFunction(g))
        prod = Indicator.from_raw_coeffs(psi, f, 6) * Indicator.from_raw_coeffs(psi, g, 6)
        assert list(conv.values) == prod.raw_coeffs()
