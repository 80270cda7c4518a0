import pytest

from psiumbral import catalog
from psiumbral import psi as psimod
from psiumbral import sequences as seqs
from psiumbral.errors import ErrataExcluded, InvalidParams
from psiumbral.opalg import Indicator
from psiumbral.poly import Poly
from psiumbral.scalar import ONE, Q, Scalar

q = psimod.q_natural()
cl = psimod.classical()
N = 12


def test_parse_delta():
    assert catalog.parse_delta("dfwd:a=1") == ("delta_fwd", {"a": Scalar(1)})
    assert catalog.parse_delta("laguerre") == ("laguerre", {})
    assert catalog.parse_delta("abel:a=1/2")[1]["a"] == Scalar("1/2")
    for bad in ("dfwd:b=1", "nope", "abel:a"):
        with pytest.raises(InvalidParams):
            catalog.parse_delta(bad)
    for bad in ("dfwd:a=0", "nbwd:a=0"):
        with pytest.raises(InvalidParams):
            catalog.build_from_text(bad, q, N)


def test_indicator_coefficients():
    t = catalog.build("delta_fwd", {"a": 1}, q, N).indicator.t
    assert t[0].is_zero() and t[1] == ONE and t[2] == 1 / (1 + Q)
    lag = catalog.build("laguerre", {}, q, N).indicator.t
    assert lag[0].is_zero() and all(c == -1 for c in lag[1:])
    assert catalog.build("abel", {"a": 0}, q, N).indicator == Indicator.d(q, N)
    nb = catalog.build("nabla_bwd", {"a": 1}, q, N).indicator
    assert nb == Indicator.identity(q, N) - Indicator.exp(q, -1, N)


def test_label():
    assert catalog.build("delta_fwd", {"a": 1}, q, N).label == "dfwd:a=1"
    assert catalog.build("laguerre", {}, q, N).label == "laguerre"


def test_every_entry_is_delta(family):
    for d in catalog.standard_deltas(family, N):
        assert d.indicator.is_delta()
        base = seqs.basic_by_definition(d.indicator, 8)
        assert seqs.check_basic_relations(d.indicator, base)


def test_closed_forms():
    assert catalog.closed_form("partial_psi", {}, q, 5) == Poly.monomial(5)
    assert catalog.closed_form("abel", {"a": 1}, q, 1) == Poly.monomial(1)
    a = Scalar(3)
    assert catalog.closed_form("abel", {"a": a}, q, 2) == Poly([0, -(1 + Q) * a, 1])
    for name in ("delta_fwd", "nabla_bwd", "laguerre"):
        with pytest.raises(ErrataExcluded):
            catalog.closed_form(name, {}, q, 2)


def test_classical_oracles():
    assert catalog.classical_oracle("delta_fwd", {"a": 1}, 3) == Poly([0, 2, -3, 1])
    assert catalog.classical_oracle("nabla_bwd", {"a": 1}, 2) == Poly([0, 1, 1])
    assert catalog.classical_oracle("abel", {"a": 2}, 2) == Poly([0, -4, 1])
    assert catalog.classical_oracle("laguerre", {}, 2) == Poly([0, -2, 1])


def test_oracles_match_classical_definition():
    for d in catalog.standard_deltas(cl, N):
        base = seqs.basic_by_definition(d.indicator, 8)
        for n in range(9):
            assert catalog.classical_oracle(d.name, d.params, n) == base.polys[n], (d.label, n)


def test_errata_fixtures_at_two():
    dq = seqs.basic_by_definition(catalog.build("delta_fwd", {"a": 1}, q, N).indicator, 2).polys[2]
    assert catalog.printed_difference_product(q, 2) == Poly([0, -(1 + Q) / 2, 1])
    assert catalog.printed_difference_product(q, 2) != dq
    assert catalog.printed_laguerre(q, 2) == Poly([0, -(1 + Q) ** 2 / 2, 1])
    assert catalog.printed_difference_sum(q, 2) == Poly([0, Scalar("1/2"), 1])
