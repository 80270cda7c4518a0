import json

from psiumbral import catalog, export, incidence
from psiumbral import psi as psimod
from psiumbral import sequences as seqs
from psiumbral.opalg import Indicator

q = psimod.q_natural()


def _seq(text="laguerre", n=4):
    d = catalog.build_from_text(text, q, 16)
    return d, seqs.basic_by_definition(d.indicator, n)


def test_json_round_trip():
    d, s = _seq()
    text = export.sequence_to_json(s, d.label)
    doc, polys = export.sequence_from_json(text)
    assert doc["delta"] == "laguerre" and doc["psi"] == "q" and doc["route"] == "definition"
    assert polys == s.polys


def test_csv_round_trip():
    _, s = _seq("abel:a=1", 5)
    text = export.sequence_to_csv(s)
    assert text.splitlines()[0] == "n,k,coef"
    assert export.sequence_from_csv(text) == s.polys


def test_latex_table():
    _, s = _seq()
    tex = export.sequence_to_latex(s)
    assert tex.startswith("\\begin{tabular}{r|lllll}")
    assert tex.rstrip().endswith("\\end{tabular}")
    assert "$-1-q$" in tex


def test_indicator_json():
    doc = json.loads(export.indicator_to_json(Indicator.d(q, 4)))
    assert doc["normalized"] == ["0", "1", "0", "0", "0"]
    T = catalog.build_from_text("dfwd:a=1", q, 8).indicator
    assert export.indicator_from_json(export.indicator_to_json(T), q) == T


def test_incidence_table_exports():
    rows = incidence.incidence_table(psimod.classical(), 4)
    doc = json.loads(export.incidence_to_json(rows, "classical", 4))
    assert all(r["enum"] == r["series"] for r in doc["rows"])
    assert export.incidence_to_csv(rows).splitlines()[1] == "0,1,1,yes"
    assert "\\hline" in export.incidence_to_latex(rows)
