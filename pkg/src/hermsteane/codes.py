"""Generator matrices for one-point and improved Hermitian codes, duals,
containment checks and exhaustive distance computation.

Codes spanned by monomial evaluations carry the set of pole orders that
span them (``basis_lambdas``); since the q^3 evaluation vectors of H*(Q)
form a basis of GF(q^2)^n, containment between such codes is plain set
containment.  Matrix ranks are still measured on every construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import gf
from .curve import (CurveContext, designed_distances, nearest_designed,
                    self_orth_threshold)

DEFAULT_BUDGET = 1 << 26
_TAIL_CHUNK = 1 << 14  # max codewords materialised per block


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive search would exceed its codeword budget."""


class Monomial(NamedTuple):
    i: int
    j: int
    lam: int


class Distance(NamedTuple):
    value: int
    exact: bool


@dataclass(frozen=True, eq=False)
class LinearCode:
    ctx: CurveContext
    gen: np.ndarray = field(repr=False)
    kind: str  # onepoint | improved | dual | adhoc
    param: int | None = None
    parent: "LinearCode | None" = field(default=None, repr=False)
    basis_lambdas: tuple[int, ...] | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def field(self) -> gf.FieldSpec:
        return self.ctx.field

    @property
    def label(self) -> str:
        if self.kind == "dual":
            return f"dual({self.parent.label})"
        if self.param is None:
            return self.kind
        return f"{self.kind}:{self.param}"

    def __repr__(self) -> str:
        return f"<LinearCode {self.label} [{self.n},{self.k}]_{self.field.order}>"


def _full_rank(F: gf.FieldSpec, M: np.ndarray) -> np.ndarray:
    R, _, r = gf.rref(F, M)
    return R[:r]


@lru_cache(maxsize=None)
def _evaluation_table(ctx: CurveContext) -> np.ndarray:
    """Row t holds the evaluations of the monomial for ``ctx.lambdas[t]``."""
    F = ctx.field
    q = ctx.q
    xpow = [F.power(ctx.xs, i) for i in range(q * q)]
    ypow = [F.power(ctx.ys, j) for j in range(q)]
    rows = [F.mul(xpow[el.i], ypow[el.j]) for el in ctx.semigroup]
    table = np.array(rows, dtype=np.int64).reshape(len(rows), ctx.n)
    table.setflags(write=False)
    return table


def monomials(ctx: CurveContext, lambdas) -> list[Monomial]:
    return [Monomial(ctx.element(lam).i, ctx.element(lam).j, lam) for lam in lambdas]


def evaluation_matrix(ctx: CurveContext, lambdas) -> np.ndarray:
    index = {lam: t for t, lam in enumerate(ctx.lambdas)}
    rows = [index[lam] for lam in lambdas]
    return _evaluation_table(ctx)[rows].copy().reshape(len(rows), ctx.n)


def _monomial_code(ctx, lambdas, kind, param, parent=None) -> LinearCode:
    lambdas = tuple(sorted(lambdas))
    gen = evaluation_matrix(ctx, lambdas)
    r = gf.rank(ctx.field, gen)
    if r != len(lambdas):
        raise AssertionError(f"monomial evaluations are dependent: rank {r} < {len(lambdas)}")
    gen.setflags(write=False)
    return LinearCode(ctx, gen, kind, param, parent, lambdas)


@lru_cache(maxsize=None)
def onepoint_code(ctx: CurveContext, m: int) -> LinearCode:
    """C_L(D, mQ): evaluations of all monomials with pole order at most m."""
    if not 0 <= m <= ctx.max_pole_order:
        raise ValueError(f"m={m} outside [0, {ctx.max_pole_order}]")
    return _monomial_code(ctx, [lam for lam in ctx.lambdas if lam <= m], "onepoint", m)


def _check_designed(ctx: CurveContext, delta: int, strict: bool) -> None:
    if strict and delta not in designed_distances(ctx):
        below, above = nearest_designed(ctx, delta)
        raise ValueError(f"delta={delta} is not a designed distance for q={ctx.q}; "
                         f"nearest designed distances: {below}, {above}")
    if not 1 <= delta <= ctx.n:
        raise ValueError(f"delta={delta} outside [1, {ctx.n}]")


@lru_cache(maxsize=None)
def improved_code(ctx: CurveContext, delta: int, strict: bool = True) -> LinearCode:
    """Span of the monomial evaluations whose sigma value is at least delta."""
    _check_designed(ctx, delta, strict)
    lams = [el.lam for el in ctx.semigroup if el.sigma >= delta]
    return _monomial_code(ctx, lams, "improved", delta)


def improved_dual_code(ctx: CurveContext, delta: int, strict: bool = True) -> LinearCode:
    """Null space of the evaluations whose mu value is below delta."""
    _check_designed(ctx, delta, strict)
    check = evaluation_matrix(ctx, [el.lam for el in ctx.semigroup if el.mu < delta])
    gen = gf.nullspace_basis(ctx.field, check, cols=ctx.n)
    gen.setflags(write=False)
    return LinearCode(ctx, gen, "improved-dual", delta)


def adhoc_code(ctx: CurveContext, M) -> LinearCode:
    gen = _full_rank(ctx.field, gf._as_matrix(M, ctx.n)) if np.size(M) else np.zeros((0, ctx.n), np.int64)
    gen.setflags(write=False)
    return LinearCode(ctx, gen, "adhoc")


def full_space(ctx: CurveContext) -> LinearCode:
    return onepoint_code(ctx, ctx.max_pole_order)


@lru_cache(maxsize=None)
def dual(code: LinearCode) -> LinearCode:
    """Euclidean dual.

    For monomial-spanned codes the candidate span of complementary
    monomials is tried first and accepted only after an exact Gram check
    and dimension count; otherwise the null space is used.
    """
    ctx, F = code.ctx, code.field
    if code.kind == "dual" and code.parent is not None:
        return code.parent
    if code.basis_lambdas is not None:
        inside = set(code.basis_lambdas)
        cand = sorted(ctx.complement(lam) for lam in ctx.lambdas if lam not in inside)
        cgen = evaluation_matrix(ctx, cand)
        if len(cand) == ctx.n - code.k and (
                code.k == 0 or not np.any(gf.gram_product(F, code.gen, cgen))):
            cgen.setflags(write=False)
            return LinearCode(ctx, cgen, "dual", None, code, tuple(cand))
    gen = gf.nullspace_basis(F, code.gen, cols=ctx.n) if code.k else np.eye(ctx.n, dtype=np.int64)
    gen.setflags(write=False)
    return LinearCode(ctx, gen, "dual", None, code)


def is_subcode(A: LinearCode, B: LinearCode) -> bool:
    """rowspace(A) is contained in rowspace(B)."""
    if A.basis_lambdas is not None and B.basis_lambdas is not None:
        return set(A.basis_lambdas) <= set(B.basis_lambdas)
    return gf.is_subspace(A.field, A.gen, B.gen)


def same_code(A: LinearCode, B: LinearCode) -> bool:
    return A.k == B.k and is_subcode(A, B)


def is_dual_containing(code: LinearCode) -> bool:
    """True iff the dual of ``code`` lies inside ``code``.

    This is the property written as "self-orthogonal" in parts of the
    Hermitian-code literature; a code of dimension above n/2 can only
    contain its dual, never be contained in it.
    """
    if 2 * code.k < code.n:
        return False
    d = dual(code)
    return gf.is_subspace(code.field, d.gen, code.gen)


def self_orth_condition(q: int, delta: int) -> bool:
    if delta < 1:
        raise ValueError("delta must be >= 1")
    return delta <= self_orth_threshold(q)


def designed_distance(code: LinearCode) -> Distance:
    """Lower bound on the minimum distance from the order bound.

    A codeword's weight is at least sigma of its leading pole order, so a
    span of monomials has distance at least the smallest sigma it contains.
    The bound is exact when the span is a whole improved code, i.e. the
    set of pole orders with sigma above a threshold.
    """
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    ctx = code.ctx
    if code.kind in ("improved", "improved-dual"):
        above = [d for d in designed_distances(ctx) if d >= code.param]
        return Distance(above[0], True)
    if code.basis_lambdas is None:
        return Distance(1, False)
    sig = [ctx.element(lam).sigma for lam in code.basis_lambdas]
    d = min(sig)
    whole = sum(1 for el in ctx.semigroup if el.sigma >= d) == len(sig)
    return Distance(d, whole)


def relative_designed_distance(C1: LinearCode, C2: LinearCode) -> Distance:
    """Lower bound on the minimum weight of C1 \\ C2.

    Uses d(C1) itself; it is exact when d(C1) is exact and every nonzero
    word of C2 is heavier, so that a minimum-weight word of C1 avoids C2.
    """
    d1 = designed_distance(C1)
    if C2.k == 0:
        return d1
    d2 = designed_distance(C2)
    return Distance(d1.value, d1.exact and d2.value > d1.value)


# -- exhaustive search ------------------------------------------------------

def _span_block(F: gf.FieldSpec, rows: np.ndarray) -> np.ndarray:
    """All combinations of ``rows`` in lexicographic message order."""
    block = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for row in rows[::-1]:
        scaled = F.mul(np.arange(F.order)[:, None], row[None, :])  # (order, n)
        block = F.add(scaled[:, None, :], block[None, :, :]).reshape(-1, rows.shape[1])
    return block


def _split(F: gf.FieldSpec, k: int) -> int:
    r = 0
    while r < k and F.order ** (r + 1) <= _TAIL_CHUNK:
        r += 1
    return max(r, min(k, 1))


def _search(F, gen: np.ndarray, valid_head, valid_tail, prefixes=None):
    """Scan codewords in lexicographic message order.

    ``valid_head(msg)`` and ``valid_tail`` (boolean per tail word, or None)
    restrict which messages count.  Returns (weight, message) of the first
    minimum-weight valid codeword, or None.
    """
    k, n = gen.shape
    r = _split(F, k)
    head_rows, tail_rows = gen[: k - r], gen[k - r:]
    tail = _span_block(F, tail_rows)
    tail_msgs = None
    best = None
    heads = itertools.product(range(F.order), repeat=k - r)
    if prefixes is not None:
        heads = (h for h in heads if h[:1] in prefixes or k - r == 0)
    for head in heads:
        hv = np.zeros(n, dtype=np.int64)
        for c, row in zip(head, head_rows):
            if c:
                hv = F.add(hv, F.mul(c, row))
        words = F.add(hv[None, :], tail)
        weights = np.count_nonzero(words, axis=1)
        if valid_head(head):
            w = weights
        else:
            mask = valid_tail(head) if valid_tail is not None else None
            if mask is None or not mask.any():
                continue
            w = np.where(mask, weights, n + 1)
        if not any(head):
            w = w.copy()
            w[0] = n + 1  # the zero message
        t = int(np.argmin(w))
        if w[t] <= n and (best is None or w[t] < best[0]):
            if tail_msgs is None:
                tail_msgs = list(itertools.product(range(F.order), repeat=r))
            best = (int(w[t]), tuple(head) + tail_msgs[t])
    return best


def _message_to_word(F, gen, msg) -> np.ndarray:
    word = np.zeros(gen.shape[1], dtype=np.int64)
    for c, row in zip(msg, gen):
        if c:
            word = F.add(word, F.mul(c, row))
    return word


def min_weight_exhaustive(code: LinearCode, budget: int = DEFAULT_BUDGET,
                          partitions: int = 1) -> tuple[int, np.ndarray]:
    """Exact minimum weight and the first minimum-weight codeword.

    Messages are scanned in lexicographic order of their coefficients on
    the rows of ``code.gen``.  With ``partitions > 1`` the scan is split by
    the first message symbol and merged; the result is identical.
    """
    F = code.field
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    total = F.order**code.k
    if total > budget:
        raise BudgetExceeded(f"{F.order}^{code.k} codewords exceed budget {budget}; "
                             "use a relative search or bound-only mode")
    if partitions <= 1:
        best = _search(F, code.gen, lambda h: True, None)
    else:
        symbols = [(s,) for s in range(F.order)]
        groups = [set(symbols[t::partitions]) for t in range(partitions)]
        results = [_search(F, code.gen, lambda h: True, None, g) for g in groups]
        best = min((b for b in results if b is not None), key=lambda b: (b[0], b[1]))
    weight, msg = best
    return weight, _message_to_word(F, code.gen, msg)


def _complement_rows(F, big: np.ndarray, small: np.ndarray) -> np.ndarray:
    rows = []
    current = small.copy()
    r = gf.rank(F, current) if current.size else 0
    for row in big:
        trial = np.vstack([current, row[None, :]]) if current.size else row[None, :]
        rt = gf.rank(F, trial)
        if rt > r:
            rows.append(row)
            current, r = trial, rt
    return np.array(rows, dtype=np.int64).reshape(len(rows), big.shape[1])


def relative_min_weight(C1: LinearCode, C2: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum weight over C1 \\ C2 for C2 strictly inside C1.

    C1 is re-based as (rows completing C2) + (basis of C2); a message lies
    outside C2 exactly when one of its completing coefficients is nonzero.
    """
    F = C1.field
    if not (C2.k < C1.k and is_subcode(C2, C1)):
        raise ValueError("relative distance needs C2 strictly contained in C1")
    total = F.order**C1.k
    if total > budget:
        raise BudgetExceeded(f"{F.order}^{C1.k} codewords exceed budget {budget}")
    comp = _complement_rows(F, C1.gen, C2.gen)
    c = comp.shape[0]
    gen = np.vstack([comp, C2.gen]) if C2.k else comp
    k = gen.shape[0]
    r = _split(F, k)
    tail_nonzero = None
    if r > k - c:
        # some completing coefficients live in the tail block
        cut = r - (k - c)  # number of completing rows inside the tail
        msgs = np.array(list(itertools.product(range(F.order), repeat=r)), dtype=np.int64)
        tail_nonzero = msgs[:, :cut].any(axis=1)
    head_has = (lambda h: any(h[:c])) if k - r > 0 else (lambda h: False)
    best = _search(F, gen, head_has,
                   (lambda h: tail_nonzero) if tail_nonzero is not None else None)
    return best[0]
