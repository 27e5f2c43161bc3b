"""Command-line front end.

    hermsteane points --q 4
    hermsteane grids --q 4 --delta 5 --delta-prime 4
    hermsteane quantum prop7 --q 4 --delta 20 --verify
    hermsteane tables 2 --format json --out table2.json
    hermsteane verify dimensions --q 2 3 4 5

Exit codes: 0 success, 1 verification failure, 2 usage error (including
failed construction preconditions), 3 exhaustive search budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import catalog
from . import codes as cf
from . import gf
from .codes import DEFAULT_BUDGET, BudgetExceeded, LinearCode
from .curve import SUPPORTED_Q, CurveContext, curve_context, designed_distances
from .quantum import (PreconditionError, QuantumCodeRecord, css_dual_containing, css_pair,
                      enlarge_improved, enlarge_mixed_search, enlarge_onepoint, steane_enlarge)
from .tables import COLUMNS, TABLE_Q, table1_records, table2_records
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


# -- helpers ----------------------------------------------------------------

_SPEC = re.compile(r"^(onepoint|improved|improved-dual):(\d+)$")


def parse_code_spec(ctx: CurveContext, spec: str) -> LinearCode:
    """Build a code from ``onepoint:M``, ``improved:D``, ``improved-dual:D``
    or ``dual(<spec>)``."""
    spec = spec.strip()
    if spec.startswith("dual(") and spec.endswith(")"):
        return cf.dual(parse_code_spec(ctx, spec[5:-1]))
    m = _SPEC.match(spec)
    if not m:
        raise UsageError(f"bad code spec {spec!r}; use onepoint:M, improved:D or dual(...)")
    kind, val = m.group(1), int(m.group(2))
    if kind == "onepoint":
        return cf.onepoint_code(ctx, val)
    if kind == "improved":
        return cf.improved_code(ctx, val)
    return cf.improved_dual_code(ctx, val)


def _ctx(q: int) -> CurveContext:
    if q not in SUPPORTED_Q:
        raise UsageError(f"unsupported q={q}; choose one of {SUPPORTED_Q}")
    return curve_context(q)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _records_out(records, q: int, fmt: str) -> str:
    entries = [catalog.entry_for(r, q) for r in records]
    if fmt == "json":
        return catalog.dumps_json(entries)
    if fmt == "csv":
        return catalog.dumps_csv(entries)
    lines = []
    for r in records:
        extra = ", ".join(f"{a}={b}" for a, b in r.params)
        lines.append(f"{r}  {r.construction}" + (f" ({extra})" if extra else "")
                     + f"  from {', '.join(r.provenance)}  [{r.verification}]")
    return "\n".join(lines) + ("\n" if lines else "")


# -- grids ----------------------------------------------------------------

def grid_cells(ctx: CurveContext, delta: int, delta_prime: int) -> list[dict]:
    """Per pole order: its grid position, values and membership classes."""
    dd = designed_distances(ctx)
    if delta not in dd or delta_prime not in dd:
        raise UsageError(f"delta and delta-prime must be designed distances for q={ctx.q}")
    if delta_prime > delta:
        raise UsageError("delta-prime must not exceed delta")
    cells = []
    for el in ctx.semigroup:
        cells.append({
            "i": el.i, "j": el.j, "lam": el.lam, "sigma": el.sigma, "mu": el.mu,
            "dual": el.mu < delta,
            "code": el.sigma >= delta,
            "extra": delta_prime <= el.sigma < delta,
        })
    return cells


def render_grids(ctx: CurveContext, delta: int, delta_prime: int) -> str:
    """Three q^2 x q grids (lambda, sigma, mu); column i, row j from the top.

    Each value carries two marks: ``#`` for the dual basis (mu < delta),
    then ``c`` for the code (sigma >= delta) or ``+`` for the extra
    elements of the enlarged code (delta' <= sigma < delta).
    """
    q = ctx.q
    cells = grid_cells(ctx, delta, delta_prime)
    at = {(c["i"], c["j"]): c for c in cells}
    width = len(str(ctx.n)) + 2
    out = [f"q={q}  delta={delta}  delta'={delta_prime}",
           "marks: # dual basis (mu < delta), c code (sigma >= delta), + extra (delta' <= sigma < delta)"]
    for key, title in (("lam", "pole orders"), ("sigma", "sigma"), ("mu", "mu")):
        out.append("")
        out.append(title)
        for j in range(q):
            row = []
            for i in range(q * q):
                c = at[(i, j)]
                mark = ("#" if c["dual"] else " ") + ("c" if c["code"] else "+" if c["extra"] else " ")
                row.append(f"{c[key]:>{width - 2}}{mark}")
            out.append(" ".join(row).rstrip())
    return "\n".join(out) + "\n"


# -- commands -----------------------------------------------------------------

def cmd_points(args) -> tuple[int, str]:
    ctx = _ctx(args.q)
    if args.format == "csv":
        return EXIT_OK, _csv(("index", "x", "y"), [(t, p.x, p.y) for t, p in enumerate(ctx.points)])
    if args.format == "json":
        return EXIT_OK, _json([{"index": t, "x": p.x, "y": p.y} for t, p in enumerate(ctx.points)])
    return EXIT_OK, "".join(f"P{t + 1} {p.x} {p.y}\n" for t, p in enumerate(ctx.points))


def cmd_semigroup(args) -> tuple[int, str]:
    ctx = _ctx(args.q)
    rows = [(el.lam, el.i, el.j, el.sigma, el.mu) for el in ctx.semigroup]
    header = ("lam", "i", "j", "sigma", "mu")
    if args.format == "csv":
        return EXIT_OK, _csv(header, rows)
    if args.format == "json":
        return EXIT_OK, _json([dict(zip(header, r)) for r in rows])
    lines = ["{:>5} {:>3} {:>3} {:>6} {:>6}".format(*header)]
    lines += ["{:>5} {:>3} {:>3} {:>6} {:>6}".format(*r) for r in rows]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_grids(args) -> tuple[int, str]:
    ctx = _ctx(args.q)
    if args.format == "text":
        return EXIT_OK, render_grids(ctx, args.delta, args.delta_prime)
    cells = grid_cells(ctx, args.delta, args.delta_prime)
    if args.format == "json":
        return EXIT_OK, _json(cells)
    header = list(cells[0])
    return EXIT_OK, _csv(header, [[c[h] for h in header] for c in cells])


def cmd_code(args) -> tuple[int, str]:
    ctx = _ctx(args.q)
    code = parse_code_spec(ctx, args.spec)
    d = cf.designed_distance(code)
    info = {"code": code.label, "n": code.n, "k": code.k, "field_size": code.field.order,
            "designed_distance": d.value, "designed_exact": d.exact,
            "rank": gf.rank(code.field, code.gen), "dual_containing": cf.is_dual_containing(code)}
    if args.verify:
        info["min_weight"] = cf.min_weight_exhaustive(code, args.budget)[0]
    status = EXIT_OK
    if args.verify and info["min_weight"] < d.value:
        status = EXIT_VERIFY
    if args.format == "json":
        return status, _json(info)
    if args.format == "csv":
        return status, _csv(list(info), [list(info.values())])
    dist = f"{d.value}" if d.exact else f">={d.value}"
    lines = [f"{code.label}: [{code.n},{code.k},{dist}]_{code.field.order}",
             f"rank {info['rank']}, dual-containing: {'yes' if info['dual_containing'] else 'no'}"]
    if args.verify:
        lines.append(f"exhaustive minimum weight: {info['min_weight']}")
    return status, "\n".join(lines) + "\n"


def _build_quantum(args, ctx: CurveContext, exhaustive: bool) -> list[QuantumCodeRecord]:
    kw = {"exhaustive": exhaustive, "budget": args.budget}
    c = args.construction
    if c == "css":
        return [css_pair(parse_code_spec(ctx, args.c1), parse_code_spec(ctx, args.c2), **kw)]
    if c == "css-dual-containing":
        return [css_dual_containing(parse_code_spec(ctx, args.code), **kw)]
    if c == "steane":
        return [steane_enlarge(parse_code_spec(ctx, args.inner), parse_code_spec(ctx, args.outer), **kw)]
    if c == "prop7":
        return [enlarge_onepoint(ctx, args.delta, **kw)]
    if c == "prop8":
        return [enlarge_improved(ctx, args.delta, args.m, **kw)]
    return enlarge_mixed_search(ctx, args.k, materialize=args.verify)


def _provenance_code(ctx: CurveContext, label: str) -> LinearCode:
    return parse_code_spec(ctx, label)


def cmd_quantum(args) -> tuple[int, str]:
    ctx = _ctx(args.q)
    notes = []
    status = EXIT_OK
    records = None
    if args.verify and args.construction != "mixed-search":
        try:
            records = _build_quantum(args, ctx, exhaustive=True)
        except BudgetExceeded as exc:
            notes.append(f"distance: bound only ({exc})")
    if records is None:
        records = _build_quantum(args, ctx, exhaustive=False)
    if args.verify:
        for rec in records:
            ks = []
            for label in rec.provenance:
                code = _provenance_code(ctx, label)
                r = gf.rank(code.field, code.gen)
                ks.append(r)
                notes.append(f"rank {label} = {r}")
            if rec.construction in ("steane", "prop7", "prop8", "mixed") and len(ks) == 2:
                inner, outer = (_provenance_code(ctx, lab) for lab in rec.provenance)
                nested = cf.is_subcode(inner, outer)
                want = ks[0] + ks[1] - ctx.n
                notes.append(f"codimension {ks[1] - ks[0]}, nested: {'yes' if nested else 'no'}, "
                             f"k = {ks[0]} + {ks[1]} - {ctx.n} = {want}")
                d, dp = rec.param("d"), rec.param("d_prime")
                Q = ctx.field.order
                notes.append(f"bound min{{{d}, ceil((1 + 1/{Q}) * {dp})}} = {rec.d_sym}")
                if not nested or want != rec.k:
                    status = EXIT_VERIFY
        notes.append(f"verification level: {records[0].verification if records else 'n/a'}")
    out = _records_out(records, ctx.q, args.format)
    if notes and args.format == "text":
        out += "".join(f"  {line}\n" for line in notes)
    elif notes:
        sys.stderr.write("".join(f"{line}\n" for line in notes))
    return status, out


def _table1_text(rows) -> str:
    lines = [f"{'q':>2}  {'code':<22} {'increase':>8}  enlargement"]
    for r in rows:
        lines.append(f"{r.q:>2}  {str(r.record):<22} {'+' + str(r.increase):>8}  "
                     f"{r.record.provenance[0]} < {r.record.provenance[1]}")
    return "\n".join(lines) + "\n"


def _table2_text(t) -> str:
    w = 17
    lines = [f"q={t.q}, n={t.q ** 3}; * marks a value beating every preceding column",
             f"{'k':>3} | " + " | ".join(f"{c:<{w}}" for c in COLUMNS)]
    for row in t.rows:
        cells = [f"{c.d}{'*' if c.star else ''}" for c in row.cells]
        lines.append(f"{row.k:>3} | " + " | ".join(f"{c:<{w}}" for c in cells))
    if t.discrepancies:
        lines.append("")
        lines.append("differences from the published table:")
        lines += [f"  {d}" for d in t.discrepancies]
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> tuple[int, str]:
    if args.which == 1:
        qs = args.q or list(TABLE_Q)
        for q in qs:
            if q not in TABLE_Q:
                raise UsageError(f"unsupported q={q}; Table 1 covers {TABLE_Q}")
        table = table1_records(qs, verify=args.verify)
        if args.format == "json":
            return EXIT_OK, catalog.dumps_table(table)
        if args.format == "csv":
            return EXIT_OK, _csv(("q", "n", "k", "d", "increase", "baseline_k", "construction", "codes"),
                                 [(r.q, r.record.n, r.record.k, r.record.d_sym, r.increase,
                                   r.baseline_k, r.record.construction, ";".join(r.record.provenance))
                                  for r in table])
        return EXIT_OK, _table1_text(table)
    qs = args.q or [4]
    if len(qs) != 1 or qs[0] not in TABLE_Q:
        raise UsageError(f"Table 2 takes a single q from {TABLE_Q}")
    t = table2_records(qs[0], materialize=args.verify)
    if args.format == "json":
        return EXIT_OK, catalog.dumps_table(t)
    if args.format == "csv":
        header = ["k"] + [f"{c}{s}" for c in COLUMNS for s in ("", "_star")] + ["published"]
        from .published import TABLE2
        rows = []
        for row in t.rows:
            vals = [row.k]
            for c in row.cells:
                vals += [c.d, str(c.star).lower()]
            ref = TABLE2.get(row.k) if t.q == 4 else None
            vals.append(";".join(map(str, ref)) if ref else "")
            rows.append(vals)
        return EXIT_OK, _csv(header, rows)
    return EXIT_OK, _table2_text(t)


def cmd_verify(args) -> tuple[int, str]:
    checks = run_suite(args.suite, args.q)
    failed = [c for c in checks if not c.ok]
    status = EXIT_VERIFY if failed else EXIT_OK
    if args.format == "json":
        return status, _json({"suite": args.suite, "passed": not failed,
                              "failures": [{"name": c.name, "detail": c.detail} for c in failed],
                              "checks": len(checks)})
    if args.format == "csv":
        return status, _csv(("suite", "name", "ok", "detail"),
                            [(c.suite, c.name, str(c.ok).lower(), c.detail) for c in checks])
    lines = [f"{'PASS' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
             for c in checks]
    lines.append(f"{args.suite}: {len(checks) - len(failed)}/{len(checks)} passed")
    return status, "\n".join(lines) + "\n"


def cmd_export(args) -> tuple[int, str]:
    ctx = _ctx(args.q)
    if args.source == "mixed-search":
        records = enlarge_mixed_search(ctx, materialize=args.verify)
    elif args.source == "table1":
        records = [r.record for r in table1_records([ctx.q], verify=args.verify)]
    elif args.source == "table2":
        t = table2_records(ctx.q, materialize=args.verify)
        records = [c.record for row in t.rows for c in row.cells if c.record is not None]
    else:
        records = []
        for d in designed_distances(ctx):
            for m in range(1, d):
                try:
                    records.append(enlarge_improved(ctx, d, m))
                except PreconditionError:
                    continue
    fmt = "json" if args.format == "text" else args.format
    return EXIT_OK, _records_out(records, ctx.q, fmt)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum number of codewords an exhaustive search may visit "
                             f"(default {DEFAULT_BUDGET})")
    common.add_argument("--verify", action="store_true",
                        help="re-derive dimensions by rank and distances exhaustively where feasible")
    common.add_argument("--out", help="write output to this file instead of stdout")

    def single_q(p, required=True):
        p.add_argument("--q", type=int, required=required, help=f"one of {SUPPORTED_Q}")

    parser = argparse.ArgumentParser(prog="hermsteane", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", parents=[common], help="affine rational points")
    single_q(p)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("semigroup", parents=[common], help="pole orders with sigma and mu")
    single_q(p)
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("grids", parents=[common], help="lambda/sigma/mu grids with code regions")
    single_q(p)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--delta-prime", type=int, required=True)
    p.set_defaults(func=cmd_grids)

    p = sub.add_parser("code", parents=[common], help="inspect a classical code")
    p.add_argument("spec", help="onepoint:M, improved:D, improved-dual:D or dual(<spec>)")
    single_q(p)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("quantum", help="build a quantum code record")
    qsub = p.add_subparsers(dest="construction", required=True)
    c = qsub.add_parser("css", parents=[common], help="CSS code from nested codes")
    single_q(c)
    c.add_argument("--c1", required=True, help="larger code")
    c.add_argument("--c2", required=True, help="subcode")
    c = qsub.add_parser("css-dual-containing", parents=[common],
                        help="symmetric code from a dual-containing code")
    single_q(c)
    c.add_argument("--code", required=True)
    c = qsub.add_parser("steane", parents=[common],
                        help="Steane enlargement of a dual-containing code")
    single_q(c)
    c.add_argument("--inner", required=True, help="dual-containing code C")
    c.add_argument("--outer", required=True, help="code C' containing C")
    c = qsub.add_parser("prop7", parents=[common], help="enlarged one-point code")
    single_q(c)
    c.add_argument("--delta", type=int, required=True)
    c = qsub.add_parser("prop8", parents=[common], help="enlarged improved code")
    single_q(c)
    c.add_argument("--delta", type=int, required=True)
    c.add_argument("--m", type=int, default=1)
    c = qsub.add_parser("mixed-search", parents=[common], help="best enlargement per dimension")
    single_q(c)
    c.add_argument("--k", type=int, help="only this quantum dimension")
    p.set_defaults(func=cmd_quantum)

    p = sub.add_parser("tables", parents=[common], help="regenerate Table 1 or Table 2")
    p.add_argument("which", type=int, choices=(1, 2))
    p.add_argument("--q", type=int, nargs="+")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--q", type=int, nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write a record catalog")
    single_q(p)
    p.add_argument("--source", choices=("mixed-search", "table1", "table2", "prop8"),
                   default="mixed-search")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
