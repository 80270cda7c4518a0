"""JSON / CSV / LaTeX forms of sequences, indicators and incidence tables."""

from __future__ import annotations

import csv
import io
import json

from .opalg import Indicator
from .poly import Poly
from .scalar import Scalar


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def sequence_doc(seq, delta_label: str = "") -> dict:
    return {
        "delta": delta_label or seq.name,
        "psi": seq.psi.tag,
        "route": seq.route,
        "polys": [[str(c) for c in p.coeffs] for p in seq.polys],
    }


def sequence_to_json(seq, delta_label: str = "") -> str:
    return dumps(sequence_doc(seq, delta_label))


def polys_from_doc(doc: dict) -> list[Poly]:
    return [Poly([Scalar(c) for c in row]) for row in doc["polys"]]


def sequence_from_json(text: str):
    doc = json.loads(text)
    return doc, polys_from_doc(doc)


def sequence_to_csv(seq) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "coef"])
    for n, p in enumerate(seq.polys):
        for k in range(n + 1):
            w.writerow([n, k, str(p.coeff(k))])
    return buf.getvalue()


def sequence_from_csv(text: str) -> list[Poly]:
    rows = list(csv.DictReader(io.StringIO(text)))
    top = max((int(r["n"]) for r in rows), default=-1)
    table = [[] for _ in range(top + 1)]
    for r in rows:
        n, k = int(r["n"]), int(r["k"])
        row = table[n]
        row.extend([Scalar(0)] * (k + 1 - len(row)))
        row[k] = Scalar(r["coef"])
    return [Poly(row) for row in table]


def _latex_scalar(s: str) -> str:
    return s.replace("*", "")


def sequence_to_latex(seq) -> str:
    top = seq.n_max
    cols = "r|" + "l" * (top + 1)
    lines = [f"\\begin{{tabular}}{{{cols}}}"]
    lines.append("$n$ & " + " & ".join(f"$x^{{{k}}}$" for k in range(top + 1)) + " \\\\")
    lines.append("\\hline")
    for n, p in enumerate(seq.polys):
        cells = [f"${_latex_scalar(str(p.coeff(k)))}$" if k <= n else "" for k in range(top + 1)]
        lines.append(f"{n} & " + " & ".join(cells) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def indicator_to_json(T) -> str:
    return dumps(T.to_json())


def indicator_from_json(text: str, psi):
    doc = json.loads(text)
    return Indicator(psi, [Scalar(c) for c in doc["normalized"]], doc["order"])


def incidence_rows(rows) -> list[dict]:
    return [{"n": n, "enum": str(e), "series": str(s), "match": bool(m)} for n, e, s, m in rows]


def incidence_to_json(rows, psi_tag: str, m: int) -> str:
    return dumps({"psi": psi_tag, "m": m, "rows": incidence_rows(rows)})


def incidence_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "enum", "series", "match"])
    for r in incidence_rows(rows):
        w.writerow([r["n"], r["enum"], r["series"], "yes" if r["match"] else "no"])
    return buf.getvalue()


def incidence_to_latex(rows) -> str:
    lines = ["\\begin{tabular}{rllc}", "$n$ & enumeration & series & match \\\\", "\\hline"]
    for r in incidence_rows(rows):
        lines.append(
            f"{r['n']} & ${_latex_scalar(r['enum'])}$ & ${_latex_scalar(r['series'])}$ & "
            f"{'yes' if r['match'] else 'no'} \\\\"
        )
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"
