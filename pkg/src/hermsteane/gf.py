"""Finite fields GF(p^e) in polynomial-basis integer encoding, plus dense
linear algebra over them.

An element is an integer ``0 <= a < p**e`` whose base-``p`` digits are the
coefficients of a polynomial in the generator ``x`` (least significant digit
is the constant term).  Matrices are plain ``numpy`` integer arrays holding
such indices; every routine takes the owning :class:`FieldSpec` explicitly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

MAX_ORDER = 1 << 16
_TABLE_LIMIT = 1024  # full add/mul tables up to this order

__all__ = [
    "FieldSpec",
    "FieldElement",
    "field_make",
    "is_prime",
    "is_irreducible",
    "frobenius_q",
    "rref",
    "rank",
    "nullspace_basis",
    "is_subspace",
    "same_rowspace",
    "gram_product",
    "matmul",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


# -- polynomials over GF(p), coefficient lists low degree first ------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, m, p)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """True iff the polynomial (low degree first) is irreducible over GF(p).

    Uses the fact that a degree-e polynomial is reducible exactly when it
    shares a factor with ``x^(p^k) - x`` for some ``k <= e // 2``.
    """
    f = _trim([c % p for c in coeffs])
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    xpow = [0, 1]  # x^(p^k) mod f, starting at k = 0
    for _ in range(e // 2):
        # raise to the p-th power by repeated multiplication
        acc = [1]
        for _ in range(p):
            acc = _poly_mulmod(acc, xpow, f, p)
        xpow = acc
        diff = list(xpow) + [0] * max(0, 2 - len(xpow))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def _digits(a: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(a % p)
        a //= p
    return out


class FieldSpec:
    """The field GF(p^e) with exp/log tables for its multiplicative group.

    Instances are built by :func:`field_make` and must be treated as
    immutable; the tables are marked read-only.
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = tuple(modulus)
        q1 = self.order - 1

        self._powers = np.array([p**k for k in range(e)], dtype=np.int64)
        digits = np.array([_digits(a, p, e) for a in range(self.order)], dtype=np.int64)
        self._digit_table = digits

        # reference multiplication on index values, used only to seed tables
        def slow_mul(a: int, b: int) -> int:
            prod = _poly_mulmod(_digits(a, p, e), _digits(b, p, e), list(modulus), p)
            return sum(c * p**k for k, c in enumerate(prod))

        gen = self._find_generator(slow_mul)
        exp = np.zeros(q1, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        x = 1
        for k in range(q1):
            exp[k] = x
            log[x] = k
            x = slow_mul(x, gen)
        self.generator = gen
        self.exp = exp
        self.log = log

        neg = (-digits) % p @ self._powers
        self._neg = neg.astype(np.int64)
        inv = np.zeros(self.order, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % q1]
        self._inv = inv

        self._add_table = None
        self._mul_table = None
        if self.order <= _TABLE_LIMIT:
            a = np.arange(self.order)
            if p == 2:
                self._add_table = a[:, None] ^ a[None, :]
            else:
                s = (digits[:, None, :] + digits[None, :, :]) % p
                self._add_table = s @ self._powers
            mt = np.zeros((self.order, self.order), dtype=np.int64)
            la = log[1:]
            mt[1:, 1:] = exp[(la[:, None] + la[None, :]) % q1]
            self._mul_table = mt

        for arr in (self.exp, self.log, self._neg, self._inv, self._digit_table):
            arr.setflags(write=False)
        for arr in (self._add_table, self._mul_table):
            if arr is not None:
                arr.setflags(write=False)

    def _find_generator(self, slow_mul) -> int:
        q1 = self.order - 1
        if q1 == 1:
            return 1
        prime_factors = [r for r in range(2, q1 + 1) if q1 % r == 0 and is_prime(r)]
        for g in range(2, self.order):
            ok = True
            for r in prime_factors:
                # g^(q1/r) != 1
                acc, base, k = 1, g, q1 // r
                while k:
                    if k & 1:
                        acc = slow_mul(acc, base)
                    base = slow_mul(base, base)
                    k >>= 1
                if acc == 1:
                    ok = False
                    break
            if ok:
                return g
        raise ArithmeticError("no primitive element found")  # unreachable for a field

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (field_make, (self.p, self.e))

    # -- vectorised arithmetic on indices ---------------------------------

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._add_table is not None:
            return self._add_table[a, b]
        da = (np.asarray(a)[..., None] // self._powers) % self.p
        db = (np.asarray(b)[..., None] // self._powers) % self.p
        return ((da + db) % self.p) @ self._powers

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b]
        a = np.asarray(a)
        b = np.asarray(b)
        out = self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._inv[a]

    def power(self, a, k: int):
        """``a**k`` elementwise; ``0**0`` is taken as 1."""
        a = np.asarray(a)
        if k == 0:
            return np.ones_like(a)
        if k < 0:
            a = self.inv(a)
            k = -k
        out = self.exp[(self.log[a] * k) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self, int(index))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, a) for a in range(self.order)]


class FieldElement:
    """A single field element; supports ``+ - * / **`` and ``inv()``."""

    __slots__ = ("field", "index")

    def __init__(self, field: FieldSpec, index: int):
        if not 0 <= index < field.order:
            raise ValueError(f"index {index} out of range for GF({field.order})")
        self.field = field
        self.index = index

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("operands belong to different fields")
            return other.index
        if isinstance(other, (int, np.integer)):
            # integers act through the prime subfield
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, index) -> "FieldElement":
        return FieldElement(self.field, int(index))

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.index, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.index, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.index))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.index, b))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.index))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.index, self.field.inv(b)))

    def __pow__(self, k: int):
        if self.index == 0 and k < 0:
            raise ZeroDivisionError("inverse of zero")
        return self._wrap(self.field.power(self.index, k))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.index == other.index
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.index))

    def __repr__(self):
        return f"GF({self.field.order})[{self.index}]"


@lru_cache(maxsize=None)
def field_make(p: int, e: int = 1) -> FieldSpec:
    """Return GF(p^e), built on the smallest monic irreducible modulus.

    Candidates ``x^e + r(x)`` are scanned by the integer value of ``r`` in
    base ``p`` (coefficient of ``x^k`` is digit ``k``), so the choice is
    reproducible.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p**e > MAX_ORDER:
        raise ValueError(f"field order {p}^{e} exceeds the cap {MAX_ORDER}")
    for r in range(p**e):
        coeffs = _digits(r, p, e) + [1]
        if is_irreducible(coeffs, p):
            return FieldSpec(p, e, coeffs)
    raise ArithmeticError(f"no irreducible polynomial of degree {e} over GF({p})")


def frobenius_q(field: FieldSpec, a, q: int):
    """``a**q`` where ``q`` is a power of the characteristic whose degree divides e."""
    s, t = 0, q
    while t % field.p == 0:
        t //= field.p
        s += 1
    if t != 1 or s == 0 or field.e % s:
        raise ValueError(f"q={q} is not a subfield order of GF({field.order})")
    if isinstance(a, FieldElement):
        if a.field is not field:
            raise ValueError("element belongs to a different field")
        return a**q
    return field.power(a, q)


# -- linear algebra -------------------------------------------------------

def _as_matrix(M, cols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(0 if A.size == 0 else 1, -1) if cols is None else A.reshape(-1, cols)
    return A


def rref(field: FieldSpec, M) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form, pivot columns and rank.

    Pivoting is deterministic: the first row (at or below the current one)
    with a nonzero entry in the leftmost remaining column is swapped up.
    """
    A = _as_matrix(M).copy()
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r, c:] = field.mul(field.inv(A[r, c]), A[r, c:])
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            A[rows, c:] = field.sub(A[rows, c:], field.mul(col[rows, None], A[r, None, c:]))
        pivots.append(c)
        r += 1
    return A, pivots, r


def rank(field: FieldSpec, M) -> int:
    A = _as_matrix(M)
    if A.size == 0:
        return 0
    return rref(field, A)[2]


def nullspace_basis(field: FieldSpec, M, cols: int | None = None) -> np.ndarray:
    """Rows spanning ``{v : M v^T = 0}``; one row per non-pivot column."""
    A = _as_matrix(M, cols)
    ncols = A.shape[1] if cols is None else cols
    if A.size == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots, r = rref(field, A)
    free = [c for c in range(ncols) if c not in set(pivots)]
    N = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        N[t, f] = 1
        for i, pc in enumerate(pivots):
            N[t, pc] = field.neg(R[i, f])
    return N


def _check_cols(A: np.ndarray, B: np.ndarray) -> None:
    if A.shape[1] != B.shape[1]:
        raise ValueError(f"column mismatch: {A.shape[1]} vs {B.shape[1]}")


def is_subspace(field: FieldSpec, A, B) -> bool:
    """True iff rowspace(A) is contained in rowspace(B)."""
    A, B = _as_matrix(A), _as_matrix(B)
    if A.shape[0] == 0:
        return True
    _check_cols(A, B)
    if B.shape[0] == 0:
        return rank(field, A) == 0
    return rank(field, B) == rank(field, np.vstack([B, A]))


def same_rowspace(field: FieldSpec, A, B) -> bool:
    return is_subspace(field, A, B) and is_subspace(field, B, A)


def matmul(field: FieldSpec, A, B) -> np.ndarray:
    A, B = _as_matrix(A), _as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"inner dimension mismatch: {A.shape} @ {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = field.add(out, field.mul(A[:, t, None], B[None, t, :]))
    return out


def gram_product(field: FieldSpec, A, B) -> np.ndarray:
    """Euclidean inner products: entry (i, j) is <A_i, B_j>."""
    A, B = _as_matrix(A), _as_matrix(B)
    _check_cols(A, B)
    return matmul(field, A, B.T)
