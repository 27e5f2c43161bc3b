"""The Hermitian curve y^q + y = x^(q+1) over GF(q^2): rational points, the
pole-order set H*(Q), the sigma/mu weight maps and dimension counts for the
improved codes.

The point at infinity Q is never materialised.  The functions x and y have
pole orders q and q+1 there, so the monomial x^i y^j realises pole order
``i*q + j*(q+1)``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .gf import FieldSpec, field_make, frobenius_q, is_prime

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)


class AffinePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class SemigroupElement:
    lam: int
    i: int
    j: int
    sigma: int
    mu: int


@dataclass(frozen=True)
class DeltaDecomposition:
    delta: int
    a: int
    b: int


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, s) with q = p**s, or raise ValueError."""
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                break
            s, t = 0, q
            while t % p == 0:
                t //= p
                s += 1
            if t == 1:
                return p, s
            break
    raise ValueError(f"{q} is not a prime power")


def sigma_ij(q: int, i: int, j: int) -> int:
    if i < q * q - q:
        return q**3 - i * q - j * (q + 1)
    return (q * q - i) * (q - j)


def mu_ij(q: int, i: int, j: int) -> int:
    return sigma_ij(q, q * q - 1 - i, q - 1 - j)


class CurveContext:
    """Everything about the curve for one q.  Obtain via :func:`curve_context`."""

    def __init__(self, q: int):
        p, s = prime_power(q)
        self.q = q
        self.field: FieldSpec = field_make(p, 2 * s)
        self.n = q**3
        self.g = q * (q - 1) // 2

        F = self.field
        elems = np.arange(F.order)
        lhs = F.add(frobenius_q(F, elems, q), elems)  # y^q + y for every y
        rhs = F.power(elems, q + 1)  # x^(q+1) for every x
        pts = [AffinePoint(int(x), int(y))
               for x in range(F.order) for y in np.flatnonzero(lhs == rhs[x])]
        self.points: tuple[AffinePoint, ...] = tuple(pts)
        self.xs = np.array([pt.x for pt in pts], dtype=np.int64)
        self.ys = np.array([pt.y for pt in pts], dtype=np.int64)

        els = []
        for i in range(q * q):
            for j in range(q):
                els.append(SemigroupElement(i * q + j * (q + 1), i, j,
                                            sigma_ij(q, i, j), mu_ij(q, i, j)))
        els.sort(key=lambda el: el.lam)
        self.semigroup: tuple[SemigroupElement, ...] = tuple(els)
        self.lambdas: tuple[int, ...] = tuple(el.lam for el in els)
        self._by_lam = {el.lam: el for el in els}
        if len(self._by_lam) != len(els):
            raise AssertionError("pole orders in H*(Q) are not distinct")

    def __repr__(self) -> str:
        return f"CurveContext(q={self.q}, n={self.n}, g={self.g})"

    def __reduce__(self):
        return (curve_context, (self.q,))

    @property
    def max_pole_order(self) -> int:
        return self.lambdas[-1]

    @property
    def dual_shift(self) -> int:
        """n + 2g - 2: the dual of C_L(D, mQ) is C_L(D, (n + 2g - 2 - m)Q)."""
        return self.n + 2 * self.g - 2

    def element(self, lam: int) -> SemigroupElement:
        try:
            return self._by_lam[lam]
        except KeyError:
            raise ValueError(f"{lam} is not in H*(Q) for q={self.q}") from None

    def complement(self, lam: int) -> int:
        """The pole order paired with ``lam`` by mu: (i, j) -> (q^2-1-i, q-1-j)."""
        el = self.element(lam)
        q = self.q
        return (q * q - 1 - el.i) * q + (q - 1 - el.j) * (q + 1)


@lru_cache(maxsize=None)
def curve_context(q: int) -> CurveContext:
    if q not in SUPPORTED_Q:
        raise ValueError(f"unsupported q={q}; choose one of {SUPPORTED_Q}")
    return CurveContext(q)


def hstar(ctx: CurveContext) -> list[int]:
    return list(ctx.lambdas)


def sigma(ctx: CurveContext, lam: int) -> int:
    return ctx.element(lam).sigma


def mu(ctx: CurveContext, lam: int) -> int:
    return ctx.element(lam).mu


def tau(q: int, n: int) -> int:
    """Number of divisors d of n with d <= q and n/d <= q."""
    if n < 1:
        raise ValueError("tau is defined for positive integers")
    return sum(1 for d in range(1, q + 1) if n % d == 0 and n // d <= q)


def delta_decompose(q: int, delta: int) -> DeltaDecomposition:
    if delta < 1:
        raise ValueError("delta must be >= 1")
    a, b = divmod(delta - 1, q)
    return DeltaDecomposition(delta, a, b)


def improved_dimension(ctx: CurveContext, delta: int) -> int:
    """Closed-form dimension of the improved code for 1 <= delta <= q^2."""
    q = ctx.q
    if not 1 <= delta <= q * q:
        raise ValueError(f"closed form needs 1 <= delta <= {q * q}; got {delta}")
    dd = delta_decompose(q, delta)
    tail = sum(tau(q, i) for i in range(delta, q * q + 1))
    return q**3 - q * q - dd.a * (dd.a - 1) // 2 - min(dd.a, dd.b) + tail


def improved_dimension_oracle(ctx: CurveContext, delta: int) -> int:
    """Direct count of pole orders whose sigma value is at least delta."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    return sum(1 for el in ctx.semigroup if el.sigma >= delta)


def onepoint_dimension(ctx: CurveContext, m: int) -> int:
    if not 0 <= m <= ctx.max_pole_order:
        raise ValueError(f"m={m} outside [0, {ctx.max_pole_order}]")
    return bisect.bisect_right(ctx.lambdas, m)


def dimension_lower_bound(q: int, delta: int) -> int:
    """Lower bound for sum_{i=delta}^{q^2} tau(q, i)."""
    if not 1 <= delta < q * q:
        raise ValueError(f"need 1 <= delta < {q * q}")
    if delta >= q:
        return q * q - math.floor(delta + delta * math.log(q * q / delta))
    return q * q - math.floor(delta + delta * math.log(delta))


def designed_distances(ctx: CurveContext) -> list[int]:
    return sorted({el.sigma for el in ctx.semigroup})


def nearest_designed(ctx: CurveContext, delta: int) -> tuple[int | None, int | None]:
    """Closest designed distances below and above ``delta`` (None if absent)."""
    dd = designed_distances(ctx)
    k = bisect.bisect_left(dd, delta)
    below = dd[k - 1] if k > 0 else None
    above = dd[k] if k < len(dd) else None
    if above == delta:
        below = delta
    return below, above


def self_orth_threshold(q: int) -> int:
    """Largest delta for which C_L(D, (q^3 - delta)Q) contains its dual."""
    return (q**3 - q * q + q) // 2 + 1
