"""Command line: basic sequences, verification suites, exports.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, export, incidence
from . import psi as psimod
from . import sequences as seqs
from . import suites
from .errors import PsiUmbralError
from .opalg import Indicator
from .scalar import Scalar, parse_rational


class ConfigError(Exception):
    pass


def _common(p: argparse.ArgumentParser):
    p.add_argument("--psi", default="q", help="q | classical | custom:<file.json> | r:<expression in x>")
    p.add_argument("--delta", default="dpsi", help="dpsi | dfwd:a=1 | nbwd:a=1 | abel:a=1 | laguerre")
    p.add_argument("--n", type=int, default=8, help="highest index n_max")
    p.add_argument("--order", type=int, default=16, help="indicator truncation order N")
    p.add_argument("--at-q", dest="at_q", default=None, metavar="P/R", help="fix q to a rational value")
    p.add_argument("--format", default="plain", choices=("plain", "json", "csv", "latex"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="psiumbral", description="Exact psi-umbral calculus over Q(q).")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basic", help="basic polynomial sequence of a delta operator")
    _common(b)
    b.add_argument("--route", default="definition", choices=seqs.ROUTES)
    b.add_argument("--all-routes", action="store_true", help="build by every route and compare")

    v = sub.add_parser("verify", help="run an identity suite")
    _common(v)
    v.add_argument("--suite", default="all", choices=suites.SUITES + ("all",))

    e = sub.add_parser("export", help="write a sequence, indicator or incidence table")
    _common(e)
    e.add_argument("what", choices=("sequence", "indicator", "incidence-table"))
    e.add_argument("--route", default="definition", choices=seqs.ROUTES)
    e.add_argument("--m", type=int, default=4, help="ground set size for incidence tables")
    e.add_argument("--out", default=None, help="output file (stdout if omitted)")
    return ap


def _config(args):
    try:
        psi = psimod.parse_psi(args.psi)
        name, params = catalog.parse_delta(args.delta)
        q0 = None
        if args.at_q is not None:
            q0 = parse_rational(args.at_q)
            psi = psi.specialize(q0)
            params = {k: Scalar(v.eval(q0)) for k, v in params.items()}
        if args.order < 2:
            raise ConfigError("order must be at least 2")
        if args.n < 0 or args.n >= args.order:
            raise ConfigError(f"need 0 <= n < order (got n = {args.n}, order = {args.order})")
        delta = catalog.build(name, params, psi, args.order)
    except PsiUmbralError as e:
        raise ConfigError(str(e)) from e
    return psi, delta, q0


def _emit(text: str, out=None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _plain_sequence(seq) -> str:
    return "".join(f"p_{n} = {p}\n" for n, p in enumerate(seq.polys))


def _render_sequence(seq, fmt, label) -> str:
    if fmt == "json":
        return export.sequence_to_json(seq, label)
    if fmt == "csv":
        return export.sequence_to_csv(seq)
    if fmt == "latex":
        return export.sequence_to_latex(seq)
    return _plain_sequence(seq)


def cmd_basic(args) -> int:
    psi, delta, _ = _config(args)
    Qd = delta.indicator
    if args.all_routes:
        if args.n > args.order - 2:
            raise ConfigError("--all-routes needs n <= order - 2")
        verdict, routes = seqs.route_agreement(Qd, args.n, delta.label)
        if args.format == "json":
            doc = {"delta": delta.label, "psi": psi.tag, "agree": verdict.ok,
                   "routes": {r: export.sequence_doc(routes[r], delta.label) for r in seqs.ROUTES}}
            _emit(export.dumps(doc))
        else:
            parts = []
            for r in seqs.ROUTES:
                parts.append(f"# route {r}\n" + _render_sequence(routes[r], args.format, delta.label))
            parts.append(f"routes agree: {'yes' if verdict.ok else 'no'}\n")
            _emit("".join(parts))
        return 0 if verdict.ok else 1
    seq = seqs.basic(Qd, args.n, args.route, delta.label)
    _emit(_render_sequence(seq, args.format, delta.label))
    return 0


def cmd_verify(args) -> int:
    psi, delta, _ = _config(args)
    ctx = suites.Context(psi, delta, args.order, args.n)
    rows = suites.run_suite(args.suite, ctx)
    ok = all(r.status != "fail" for r in rows)
    if args.format == "json":
        _emit(export.dumps({"suite": args.suite, "psi": psi.tag, "delta": delta.label, "ok": ok,
                            "checks": [r.to_json() for r in rows]}))
    else:
        lines = []
        for r in rows:
            tag = {"pass": "PASS", "fail": "FAIL", "info": "INFO"}[r.status]
            lines.append(f"{tag} {r.name}" + (f": {r.detail}" if r.detail else ""))
        lines.append(f"{'ok' if ok else 'FAILED'}: {sum(r.status == 'pass' for r in rows)} passed, "
                     f"{sum(r.status == 'fail' for r in rows)} failed")
        _emit("\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_export(args) -> int:
    psi, delta, _ = _config(args)
    fmt = "json" if args.format == "plain" else args.format
    if args.what == "sequence":
        seq = seqs.basic(delta.indicator, args.n, args.route, delta.label)
        text = _render_sequence(seq, fmt, delta.label)
    elif args.what == "indicator":
        T: Indicator = delta.indicator
        if fmt != "json":
            raise ConfigError("indicators export as json only")
        text = export.indicator_to_json(T)
    else:
        try:
            rows = incidence.incidence_table(psi, args.m)
        except PsiUmbralError as e:
            raise ConfigError(str(e)) from e
        if fmt == "json":
            text = export.incidence_to_json(rows, psi.tag, args.m)
        elif fmt == "csv":
            text = export.incidence_to_csv(rows)
        else:
            text = export.incidence_to_latex(rows)
    try:
        _emit(text, args.out)
    except OSError as e:
        raise ConfigError(f"cannot write {args.out}: {e}") from e
    return 0


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handler = {"basic": cmd_basic, "verify": cmd_verify, "export": cmd_export}[args.command]
    try:
        return handler(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
