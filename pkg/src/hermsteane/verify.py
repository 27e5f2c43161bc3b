"""Self-check suites run by ``hermsteane verify``.

Each suite returns a list of :class:`Check` results; a suite passes when
every check does.  Suites take the list of q values to cover where that
makes sense and ignore it otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import codes as cf
from . import gf, published
from .curve import (curve_context, designed_distances, improved_dimension,
                    improved_dimension_oracle, onepoint_dimension, tau)
from .tables import table1_records, table2_records


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _check(suite: str, name: str, ok: bool, detail: str = "") -> Check:
    return Check(suite, name, bool(ok), "" if ok else detail)


def suite_field(qs) -> list[Check]:
    out = []
    for p, e in [(2, 1), (3, 1), (2, 2), (3, 2), (2, 4), (5, 2), (7, 2), (2, 6), (3, 4)]:
        F = gf.field_make(p, e)
        name = f"GF({p}^{e})"
        out.append(_check("field", f"{name} modulus irreducible",
                          gf.is_irreducible(F.modulus, p), str(F.modulus)))
        field_ok = sorted(F.exp.tolist()) == list(range(1, F.order))
        out.append(_check("field", f"{name} exp table covers the nonzero elements", field_ok))
        if F.order <= 64:
            a = np.arange(F.order)
            A, B = np.meshgrid(a, a, indexing="ij")
            comm = np.array_equal(F.mul(A, B), F.mul(B, A)) and np.array_equal(F.add(A, B), F.add(B, A))
            dist = all(np.array_equal(F.mul(c, F.add(A, B)), F.add(F.mul(c, A), F.mul(c, B)))
                       for c in range(F.order))
            inv = np.all(F.mul(a[1:], F.inv(a[1:])) == 1)
            out.append(_check("field", f"{name} axioms on all pairs", comm and dist and inv))
    return out


def suite_geometry(qs) -> list[Check]:
    out = []
    for q in qs:
        ctx = curve_context(q)
        F = ctx.field
        lhs = F.add(gf.frobenius_q(F, ctx.ys, q), ctx.ys)
        rhs = F.power(ctx.xs, q + 1)
        out.append(_check("geometry", f"q={q}: {ctx.n} points on the curve",
                          len(ctx.points) == q**3 and np.array_equal(lhs, rhs)
                          and len(set(ctx.points)) == q**3, f"{len(ctx.points)} points"))
        out.append(_check("geometry", f"q={q}: |H*(Q)| = q^3", len(ctx.lambdas) == q**3))
        ok = all(ctx.element(ctx.complement(el.lam)).sigma == el.mu for el in ctx.semigroup)
        out.append(_check("geometry", f"q={q}: mu is sigma of the complement", ok))
        # the q^3 monomial evaluations form a basis
        full = cf.full_space(ctx)
        out.append(_check("geometry", f"q={q}: evaluations have full rank", full.k == ctx.n))
    return out


def suite_dimensions(qs) -> list[Check]:
    out = []
    for q in qs:
        ctx = curve_context(q)
        bad = [d for d in designed_distances(ctx) if d <= q * q
               and improved_dimension(ctx, d) != improved_dimension_oracle(ctx, d)]
        out.append(_check("dimensions", f"q={q}: closed form equals count", not bad, f"mismatch at {bad}"))
        out.append(_check("dimensions", f"q={q}: tau sums to q^2",
                          sum(tau(q, i) for i in range(1, q * q + 1)) == q * q))
        if q <= 4:
            bad = [d for d in designed_distances(ctx)
                   if cf.improved_code(ctx, d).k != improved_dimension_oracle(ctx, d)]
            out.append(_check("dimensions", f"q={q}: matrix ranks equal counts", not bad, f"{bad}"))
            bad = [m for m in ctx.lambdas if cf.onepoint_code(ctx, m).k != onepoint_dimension(ctx, m)]
            out.append(_check("dimensions", f"q={q}: one-point ranks", not bad, f"{bad}"))
    return out


def suite_duality(qs) -> list[Check]:
    out = []
    for q in qs:
        if q > 4:
            continue
        ctx = curve_context(q)
        F = ctx.field
        bad = []
        for m in ctx.lambdas:
            C = cf.onepoint_code(ctx, m)
            perp = ctx.dual_shift - m
            D = cf.onepoint_code(ctx, perp) if perp >= 0 else None
            dk = D.k if D is not None else 0
            if dk != ctx.n - C.k or (D is not None and np.any(gf.gram_product(F, C.gen, D.gen))):
                bad.append(m)
        out.append(_check("duality", f"q={q}: dual of C_L(m) is C_L(n+2g-2-m)", not bad, f"{bad}"))
        bad = []
        for d in designed_distances(ctx):
            E = cf.improved_code(ctx, d)
            if not cf.same_code(cf.improved_dual_code(ctx, d), E):
                bad.append(d)
        out.append(_check("duality", f"q={q}: generator and parity-check improved codes agree",
                          not bad, f"{bad}"))
        bad = []
        for d in designed_distances(ctx):
            if d > q * q - q:
                if not cf.same_code(cf.improved_code(ctx, d), cf.onepoint_code(ctx, ctx.n - d)):
                    bad.append(d)
        E = cf.improved_code(ctx, q * q - q)
        L = cf.onepoint_code(ctx, ctx.n - (q * q - q))
        gap_ok = cf.is_subcode(L, E) and E.k - L.k == 1
        out.append(_check("duality", f"q={q}: improved equals one-point above q^2-q", not bad, f"{bad}"))
        out.append(_check("duality", f"q={q}: rank gap 1 at q^2-q", gap_ok, f"{L.k} vs {E.k}"))
    return out


def suite_self_orth(qs) -> list[Check]:
    out = []
    for q in qs:
        ctx = curve_context(q)
        ds = designed_distances(ctx) if q <= 3 else [d for d in (5, 12, 20, 27, 28)
                                                     if d in designed_distances(ctx)]
        bad = [d for d in ds if cf.self_orth_condition(q, d) != cf.is_dual_containing(cf.improved_code(ctx, d))]
        out.append(_check("self-orth", f"q={q}: threshold criterion matches matrices", not bad, f"{bad}"))
    return out


def suite_distances_q2(qs) -> list[Check]:
    from .quantum import enlarge_mixed_search, steane_enlarge
    ctx = curve_context(2)
    out = []
    for d in designed_distances(ctx):
        w, _ = cf.min_weight_exhaustive(cf.improved_code(ctx, d))
        out.append(_check("distances-q2", f"d(Ẽ({d})) = {d}", w == d, f"found {w}"))
    bad = []
    for rec in enlarge_mixed_search(ctx):
        inner, outer = rec.provenance
        kind, _, p = inner.partition(":")
        C = cf.improved_code(ctx, int(p)) if kind == "improved" else cf.onepoint_code(ctx, int(p))
        Cp = cf.improved_code(ctx, int(outer.partition(":")[2]))
        ex = steane_enlarge(C, Cp, exhaustive=True)
        if ex.d_sym < rec.d_sym:
            bad.append(str(rec))
        for A, B in ((C, cf.dual(Cp)), (Cp, cf.dual(Cp))):
            if cf.relative_min_weight(A, B) != cf.min_weight_exhaustive(A)[0]:
                bad.append(f"relative != absolute for {A.label}")
    out.append(_check("distances-q2", "Steane bounds confirmed and relative = absolute", not bad, "; ".join(bad)))
    return out


def suite_tables(qs) -> list[Check]:
    out = []
    rows = table1_records()
    for q, want in published.TABLE1.items():
        got = [r.as_tuple() for r in rows if r.q == q]
        out.append(_check("tables", f"Table 1, q={q}: {len(want)} rows", got == want,
                          f"got {got}"))
    t = table2_records(4)
    out.append(_check("tables", "Table 2: 19 rows", len(t.rows) == 19))
    for col in ("goppa", "improved-css", "improved-steane"):
        bad = [str(d) for d in t.discrepancies if d.column == col]
        out.append(_check("tables", f"Table 2 column {col} matches", not bad, "; ".join(bad)))
    return out


SUITES: dict[str, Callable] = {
    "field": suite_field,
    "geometry": suite_geometry,
    "dimensions": suite_dimensions,
    "duality": suite_duality,
    "self-orth": suite_self_orth,
    "distances-q2": suite_distances_q2,
    "tables": suite_tables,
}
DEFAULT_QS = {"geometry": (2, 3, 4), "dimensions": (2, 3, 4, 5, 7),
              "duality": (2, 3, 4), "self-orth": (2, 3, 4)}


def run_suite(name: str, qs=None) -> list[Check]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if qs is None:
        qs = DEFAULT_QS.get(name, ())
    return SUITES[name](list(qs))


__all__ = ["Check", "SUITES", "run_suite"]
