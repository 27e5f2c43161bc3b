"""Quantum code parameters from nested Hermitian codes: CSS, dual-containing
CSS, Steane enlargement and the two closed-form enlargement families.

Distances in records are lower bounds unless flagged exact.  They come from
the order bound on the classical codes (see
:func:`hermsteane.codes.designed_distance`) or, on request, from exhaustive
search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import codes as cf
from .codes import DEFAULT_BUDGET, Distance, LinearCode
from .curve import (CurveContext, delta_decompose, designed_distances,
                    improved_dimension_oracle, self_orth_threshold, tau)

LEVELS = ("formula", "rank-verified", "exhaustively-verified")


class PreconditionError(ValueError):
    """A construction's hypothesis failed; ``reason`` names which one."""

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


@dataclass(frozen=True)
class QuantumCodeRecord:
    n: int
    k: int
    field_size: int
    dz: int
    dz_exact: bool
    dx: int
    dx_exact: bool
    construction: str
    provenance: tuple[str, ...] = ()
    params: tuple[tuple[str, int], ...] = ()
    verification: str = field(default="formula", compare=False)

    @property
    def d_sym(self) -> int:
        return min(self.dz, self.dx)

    @property
    def d_exact(self) -> bool:
        return (self.dz_exact and self.dz <= self.dx) or (self.dx_exact and self.dx <= self.dz)

    @property
    def symmetric(self) -> bool:
        return self.construction not in ("css",)

    def param(self, name: str) -> int | None:
        return dict(self.params).get(name)

    def distance_text(self) -> str:
        def fmt(v, exact):
            return str(v) if exact else f"≥{v}"
        if self.symmetric or (self.dz == self.dx and self.dz_exact == self.dx_exact):
            return fmt(self.d_sym, self.d_exact)
        return f"{fmt(self.dz, self.dz_exact)}/{fmt(self.dx, self.dx_exact)}"

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.distance_text()}]]_{self.field_size}"


def steane_factor_bound(d: int, d_prime: int, field_size: int) -> int:
    """min{d, ceil((1 + 1/field_size) * d')} in exact integer arithmetic."""
    return min(d, -(-d_prime * (field_size + 1) // field_size))


def _relative(C1: LinearCode, C2: LinearCode, exhaustive: bool, budget: int) -> Distance:
    if exhaustive:
        if C2.k == 0:
            return Distance(cf.min_weight_exhaustive(C1, budget)[0], True)
        return Distance(cf.relative_min_weight(C1, C2, budget), True)
    return cf.relative_designed_distance(C1, C2)


def _level(exhaustive: bool) -> str:
    return "exhaustively-verified" if exhaustive else "rank-verified"


def css_pair(C1: LinearCode, C2: LinearCode, *, exhaustive: bool = False,
             budget: int = DEFAULT_BUDGET) -> QuantumCodeRecord:
    """Asymmetric CSS code from C2 strictly inside C1."""
    if not (C2.k < C1.k and cf.is_subcode(C2, C1)):
        raise PreconditionError("not-nested", f"{C2.label} is not strictly inside {C1.label}")
    dz = _relative(C1, C2, exhaustive, budget)
    dx = _relative(cf.dual(C2), cf.dual(C1), exhaustive, budget)
    return QuantumCodeRecord(C1.n, C1.k - C2.k, C1.field.order, dz.value, dz.exact,
                             dx.value, dx.exact, "css", (C1.label, C2.label),
                             verification=_level(exhaustive))


def css_dual_containing(C: LinearCode, *, exhaustive: bool = False,
                        budget: int = DEFAULT_BUDGET) -> QuantumCodeRecord:
    """Symmetric [[n, 2k - n, d]] code from a code containing its dual."""
    if not cf.is_dual_containing(C):
        raise PreconditionError("not-dual-containing", f"{C.label} does not contain its dual")
    Cd = cf.dual(C)
    if Cd.k == C.k:  # self-dual: nothing is left outside the dual
        d = (Distance(cf.min_weight_exhaustive(C, budget)[0], True) if exhaustive
             else cf.designed_distance(C))
    else:
        d = _relative(C, Cd, exhaustive, budget)
    return QuantumCodeRecord(C.n, 2 * C.k - C.n, C.field.order, d.value, d.exact,
                             d.value, d.exact, "css-dual-containing", (C.label,),
                             verification=_level(exhaustive))


def steane_enlarge(C: LinearCode, Cp: LinearCode, *, exhaustive: bool = False,
                   budget: int = DEFAULT_BUDGET, construction: str = "steane",
                   params: tuple[tuple[str, int], ...] = ()) -> QuantumCodeRecord:
    """Enlarge the dual-containing code C by Cp, which contains C with
    codimension at least 2.  The factor uses the field size of the codes."""
    if not cf.is_dual_containing(C):
        raise PreconditionError("not-dual-containing", f"{C.label} does not contain its dual")
    if not (C.k < Cp.k and cf.is_subcode(C, Cp)):
        raise PreconditionError("not-nested", f"{C.label} is not strictly inside {Cp.label}")
    if Cp.k < C.k + 2:
        raise PreconditionError("codimension-below-2",
                                f"codimension of {C.label} in {Cp.label} is {Cp.k - C.k}")
    Cpd = cf.dual(Cp)
    d = _relative(C, Cpd, exhaustive, budget)
    dp = _relative(Cp, Cpd, exhaustive, budget)
    Q = C.field.order
    bound = steane_factor_bound(d.value, dp.value, Q)
    extra = (("d", d.value), ("d_prime", dp.value))
    return QuantumCodeRecord(C.n, C.k + Cp.k - C.n, Q, bound, False, bound, False,
                             construction, (C.label, Cp.label), tuple(params) + extra,
                             verification=_level(exhaustive))


def goppa_bound(ctx: CurveContext, m: int) -> int:
    """Goppa bound n - m for C_L(D, mQ), floored at the trivial value 1."""
    return max(ctx.n - m, 1)


def order_bound_onepoint(ctx: CurveContext, m: int, window_low: int | None = None) -> int:
    """min sigma(lambda) over pole orders window_low < lambda <= m.

    Without a window this bounds d(C_L(D, mQ)); with window_low = m2 it
    bounds the weight of words of C_L(D, mQ) outside C_L(D, m2 Q).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    lo = -1 if window_low is None else window_low
    vals = [el.sigma for el in ctx.semigroup if lo < el.lam <= m]
    if not vals:
        raise ValueError(f"no pole order in ({lo}, {m}]")
    return min(vals)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def enlarge_onepoint(ctx: CurveContext, delta: int, *, exhaustive: bool = False,
                     budget: int = DEFAULT_BUDGET) -> QuantumCodeRecord:
    """Enlarge C_L(D, (q^3 - delta)Q) by ceil((delta-1)/(q^2+1)) pole orders."""
    q, n = ctx.q, ctx.n
    thr = self_orth_threshold(q)
    if delta > thr:
        raise PreconditionError("self-orthogonality", f"delta={delta} > {thr}")
    if delta < q * q + 3:
        raise PreconditionError("delta-too-small", f"delta={delta} < q^2+3={q * q + 3}")
    step = _ceil_div(delta - 1, q * q + 1)
    delta_p = delta - step
    C = cf.onepoint_code(ctx, n - delta)
    Cp = cf.onepoint_code(ctx, n - delta_p)
    if Cp.k - C.k != step:
        raise AssertionError(f"codimension {Cp.k - C.k} differs from {step}")
    rec = steane_enlarge(C, Cp, exhaustive=exhaustive, budget=budget, construction="prop7",
                         params=(("delta", delta), ("delta_prime", delta_p)))
    if rec.k != 2 * C.k - n + step or rec.d_sym < delta:
        raise AssertionError(f"{rec} does not match [[{n},{2 * C.k - n + step},>={delta}]]")
    return rec


def steane_K(q: int, delta: int, m: int) -> int:
    """Codimension of the improved code for delta inside the one for delta - m."""
    if not 1 <= m < delta <= q * q:
        raise ValueError(f"need 1 <= m < delta <= q^2; got m={m}, delta={delta}")
    top, low = delta_decompose(q, delta), delta_decompose(q, delta - m)
    a, b, a2, b2 = top.a, top.b, low.a, low.b
    return (min(a, b) - min(a2, b2) + (a * (a - 1) - a2 * (a2 - 1)) // 2
            + sum(tau(q, delta - i) for i in range(1, m + 1)))


@dataclass(frozen=True)
class EnlargementPlan:
    delta: int
    m: int
    K: int

    @property
    def delta_prime(self) -> int:
        return self.delta - self.m


def enlargement_plan(ctx: CurveContext, delta: int, m: int) -> EnlargementPlan:
    K = steane_K(ctx.q, delta, m)
    oracle = improved_dimension_oracle(ctx, delta - m) - improved_dimension_oracle(ctx, delta)
    if K != oracle:
        raise AssertionError(f"K={K} disagrees with the dimension count {oracle}")
    return EnlargementPlan(delta, m, K)


def _check_improved_enlargement(ctx: CurveContext, delta: int, m: int) -> EnlargementPlan:
    q = ctx.q
    if delta not in designed_distances(ctx):
        raise PreconditionError("not-designed", f"delta={delta} is not a designed distance")
    if not 2 <= delta <= q * q:
        raise PreconditionError("delta-range", f"need 2 <= delta <= {q * q}")
    if delta > self_orth_threshold(q):
        raise PreconditionError("self-orthogonality", f"delta={delta} > {self_orth_threshold(q)}")
    if not 1 <= m < delta:
        raise PreconditionError("m-range", f"need 1 <= m < delta; got m={m}")
    plan = enlargement_plan(ctx, delta, m)
    if plan.K < 2:
        raise PreconditionError("codimension-below-2",
                                f"K={plan.K} for delta={delta}, m={m}; try a larger m")
    return plan


def enlarge_improved_formula(ctx: CurveContext, delta: int, m: int) -> QuantumCodeRecord:
    """The closed-form record without building matrices.

    The distance is the enlargement bound evaluated on the designed
    distances of the two improved codes; it is never below delta - m + 1.
    """
    plan = _check_improved_enlargement(ctx, delta, m)
    k = improved_dimension_oracle(ctx, delta)
    # Ẽ(δ - m) is the improved code of the next designed distance >= δ - m
    d_prime = min(d for d in designed_distances(ctx) if d >= delta - m)
    Q = ctx.field.order
    d = steane_factor_bound(delta, d_prime, Q)
    if d < delta - m + 1:
        raise AssertionError(f"bound {d} below delta - m + 1 = {delta - m + 1}")
    return QuantumCodeRecord(ctx.n, 2 * k - ctx.n + plan.K, Q, d, False, d, False,
                             "prop8", (f"improved:{delta}", f"improved:{delta - m}"),
                             (("delta", delta), ("m", m), ("K", plan.K),
                              ("d", delta), ("d_prime", d_prime)))


def enlarge_improved(ctx: CurveContext, delta: int, m: int, *, exhaustive: bool = False,
                     budget: int = DEFAULT_BUDGET) -> QuantumCodeRecord:
    plan = _check_improved_enlargement(ctx, delta, m)
    C = cf.improved_code(ctx, delta)
    Cp = cf.improved_code(ctx, delta - m, strict=False)
    rec = steane_enlarge(C, Cp, exhaustive=exhaustive, budget=budget, construction="prop8",
                         params=(("delta", delta), ("m", m), ("K", plan.K)))
    if rec.k != 2 * C.k - ctx.n + plan.K or rec.d_sym < delta - m + 1:
        raise AssertionError(f"{rec} does not match the closed form")
    return rec


# -- search over enlargement pairs ----------------------------------------

_PREFERENCE = {"prop8": 0, "mixed": 1, "steane": 2}


@dataclass(frozen=True)
class _Candidate:
    label: str
    kind: str
    param: int
    lams: frozenset
    distance: int


def _set_distance(ctx: CurveContext, lams) -> int:
    return min(ctx.element(lam).sigma for lam in lams)


def _inner_candidates(ctx: CurveContext) -> list[_Candidate]:
    out = []
    seen = set()
    for d in designed_distances(ctx):
        lams = frozenset(el.lam for el in ctx.semigroup if el.sigma >= d)
        dual_lams = {el.lam for el in ctx.semigroup if el.mu < d}
        if dual_lams <= lams:
            out.append(_Candidate(f"improved:{d}", "improved", d, lams, d))
            seen.add(lams)
    for m in ctx.lambdas:
        lams = frozenset(lam for lam in ctx.lambdas if lam <= m)
        if lams in seen:
            continue
        dual_lams = {lam for lam in ctx.lambdas if lam <= ctx.dual_shift - m}
        if dual_lams <= lams:
            out.append(_Candidate(f"onepoint:{m}", "onepoint", m, lams, _set_distance(ctx, lams)))
    return out


def enlarge_mixed_search(ctx: CurveContext, k_target: int | None = None, *,
                         materialize: bool = False) -> list[QuantumCodeRecord]:
    """All Steane enlargements of an improved or one-point code by an
    improved code, reduced to the best distance per quantum dimension.

    The search runs on pole-order sets (containment of monomial spans is
    set containment).  With ``materialize`` each surviving record is rebuilt
    from generator matrices through :func:`steane_enlarge`.
    """
    q, n, Q = ctx.q, ctx.n, ctx.field.order
    outers = []
    for d in designed_distances(ctx):
        lams = frozenset(el.lam for el in ctx.semigroup if el.sigma >= d)
        outers.append((d, lams))
    best: dict[int, tuple] = {}
    for inner in _inner_candidates(ctx):
        for dp, lams_p in outers:
            if not (inner.lams < lams_p) or len(lams_p) - len(inner.lams) < 2:
                continue
            k = len(inner.lams) + len(lams_p) - n
            if k_target is not None and k != k_target:
                continue
            bound = steane_factor_bound(inner.distance, dp, Q)
            if inner.kind == "onepoint":
                kind = "mixed"
            elif inner.param <= q * q:
                kind = "prop8"
            else:
                kind = "steane"
            key = (bound, -_PREFERENCE[kind])
            if k not in best or key > best[k][0]:
                best[k] = (key, kind, inner, dp, bound)
    records = []
    for k in sorted(best, reverse=True):
        _, kind, inner, dp, bound = best[k]
        params = (("delta", inner.param), ("m", inner.param - dp)) if kind == "prop8" else ()
        if materialize:
            C = (cf.improved_code(ctx, inner.param) if inner.kind == "improved"
                 else cf.onepoint_code(ctx, inner.param))
            rec = steane_enlarge(C, cf.improved_code(ctx, dp), construction=kind, params=params)
            if rec.k != k or rec.d_sym != bound:
                raise AssertionError(f"materialised {rec} disagrees with [[{n},{k},{bound}]]")
        else:
            rec = QuantumCodeRecord(n, k, Q, bound, False, bound, False, kind,
                                    (inner.label, f"improved:{dp}"),
                                    params + (("d", inner.distance), ("d_prime", dp)))
        records.append(rec)
    records.sort(key=lambda r: (-r.k, -r.d_sym))
    return records


__all__ = [
    "PreconditionError", "QuantumCodeRecord", "EnlargementPlan", "LEVELS",
    "css_pair", "css_dual_containing", "steane_enlarge", "goppa_bound",
    "order_bound_onepoint", "enlarge_onepoint", "steane_K", "enlargement_plan",
    "enlarge_improved", "enlarge_improved_formula", "enlarge_mixed_search",
    "steane_factor_bound",
]
