import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from psiumbral import psi as psimod
from psiumbral.opalg import Indicator
from psiumbral.poly import Poly
from psiumbral.scalar import Scalar

settings.register_profile("exact", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")

FAMILIES = {
    "classical": psimod.classical,
    "q": psimod.q_natural,
    "nsq": psimod.squares,
}


@pytest.fixture(params=sorted(FAMILIES))
def family(request):
    return FAMILIES[request.param]()


small_ints = st.integers(-4, 4)


@st.composite
def scalars(draw, max_deg=2):
    num = draw(st.lists(small_ints, min_size=0, max_size=max_deg + 1))
    den = draw(st.lists(small_ints, min_size=1, max_size=max_deg + 1).filter(lambda c: any(c)))
    return Scalar.from_polys(num or [0], den)


@st.composite
def nonzero_scalars(draw, max_deg=2):
    return draw(scalars(max_deg).filter(lambda s: not s.is_zero()))


@st.composite
def polys(draw, max_degree=4):
    cs = draw(st.lists(scalars(1), min_size=0, max_size=max_degree + 1))
    return Poly(cs)


@st.composite
def indicators(draw, psi, order=8, support=5, delta=False):
    cs = draw(st.lists(scalars(1), min_size=support, max_size=support))
    if delta:
        cs[0] = Scalar(0)
        if cs[1].is_zero():
            cs[1] = Scalar(1)
    return Indicator(psi, cs, order)


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def frac(text):
    return Fraction(text)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
