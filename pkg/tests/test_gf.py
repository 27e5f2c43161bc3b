import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hermsteane import gf
from hermsteane.gf import field_make

SMALL = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2)]


def _slow_mul(a, b, F):
    """Schoolbook product of two encoded elements, reduced by F.modulus."""
    p, e = F.p, F.e
    da = [(a // p**k) % p for k in range(e)]
    db = [(b // p**k) % p for k in range(e)]
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    mod = list(F.modulus)
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for k in range(e + 1):
                prod[d - e + k] = (prod[d - e + k] - c * mod[k]) % p
    return sum(prod[k] * p**k for k in range(e))


def _brute_irreducible(coeffs, p):
    e = len(coeffs) - 1
    # no factor of degree 1..e//2: try every monic divisor candidate
    for d in range(1, e // 2 + 1):
        for r in range(p**d):
            div = [(r // p**k) % p for k in range(d)] + [1]
            rem = list(coeffs)
            for top in range(e, d - 1, -1):
                c = rem[top]
                if c:
                    for k in range(d + 1):
                        rem[top - d + k] = (rem[top - d + k] - c * div[k]) % p
            if not any(rem[:d]):
                return False
    return True


class TestFieldMake:
    def test_gf2(self):
        F = field_make(2, 1)
        assert F.order == 2 and F.modulus == (0, 1)

    def test_gf4_modulus(self):
        assert field_make(2, 2).modulus == (1, 1, 1)

    def test_gf16_and_gf9(self):
        assert field_make(2, 4).modulus == (1, 1, 0, 0, 1)
        assert field_make(3, 2).modulus == (1, 0, 1)

    def test_gf32_is_first_irreducible(self):
        F = field_make(2, 5)
        assert F.order == 32
        first = next(r for r in range(32)
                     if _brute_irreducible([(r >> k) & 1 for k in range(5)] + [1], 2))
        assert F.modulus == tuple([(first >> k) & 1 for k in range(5)] + [1])

    @pytest.mark.parametrize("p,e", [(4, 1), (6, 2), (1, 3)])
    def test_bad_characteristic(self, p, e):
        with pytest.raises(ValueError):
            field_make(p, e)

    def test_order_cap(self):
        with pytest.raises(ValueError):
            field_make(2, 17)
        with pytest.raises(ValueError):
            field_make(3, 11)

    @pytest.mark.parametrize("p,e", SMALL)
    def test_exp_table_enumerates_units(self, p, e):
        F = field_make(p, e)
        assert len(F.exp) == F.order - 1
        assert sorted(F.exp.tolist()) == list(range(1, F.order))
        assert F.log[0] == -1

    @pytest.mark.parametrize("p,e", SMALL + [(2, 6), (3, 3)])
    def test_modulus_irreducible(self, p, e):
        F = field_make(p, e)
        assert gf.is_irreducible(F.modulus, p)
        assert _brute_irreducible(list(F.modulus), p)

    def test_deterministic(self):
        a = field_make.__wrapped__(7, 2)  # bypass the cache: two fresh builds
        b = field_make.__wrapped__(7, 2)
        assert a.modulus == b.modulus and np.array_equal(a.exp, b.exp)


class TestArithmetic:
    def test_gf4_examples(self):
        F = field_make(2, 2)
        a = F.element(2)
        assert (a * a).index == 3
        assert a.inv().index == 3
        assert (a * (a + 1)).index == 1

    @pytest.mark.parametrize("p,e", SMALL)
    def test_mul_matches_schoolbook(self, p, e):
        F = field_make(p, e)
        for a, b in itertools.product(range(F.order), repeat=2):
            assert F.mul(a, b) == _slow_mul(a, b, F)

    @pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (2, 6)])
    def test_axioms_all_pairs(self, p, e):
        F = field_make(p, e)
        a = np.arange(F.order)
        A, B = np.meshgrid(a, a, indexing="ij")
        assert np.array_equal(F.add(A, B), F.add(B, A))
        assert np.array_equal(F.mul(A, B), F.mul(B, A))
        assert np.array_equal(F.add(A, 0), A) and np.array_equal(F.mul(A, 1), A)
        assert np.all(F.add(a, F.neg(a)) == 0)
        assert np.all(F.mul(a[1:], F.inv(a[1:])) == 1)
        for c in range(F.order):
            assert np.array_equal(F.mul(c, F.add(A, B)), F.add(F.mul(c, A), F.mul(c, B)))
            assert np.array_equal(F.mul(F.mul(A, B), c), F.mul(A, F.mul(B, c)))
            assert np.array_equal(F.add(F.add(A, B), c), F.add(A, F.add(B, c)))

    @settings(max_examples=200, deadline=None)
    @given(st.sampled_from([(2, 8), (3, 4), (7, 2), (2, 10), (3, 5)]), st.data())
    def test_axioms_sampled(self, pe, data):
        F = field_make(*pe)
        a, b, c = (data.draw(st.integers(0, F.order - 1)) for _ in range(3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.sub(F.add(a, b), b) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1

    def test_inverse_of_zero(self):
        F = field_make(2, 2)
        with pytest.raises(ZeroDivisionError):
            F.element(0).inv()

    def test_mixed_fields(self):
        with pytest.raises(ValueError):
            field_make(2, 2).element(1) + field_make(3, 1).element(1)

    @pytest.mark.parametrize("k", [0, 1, 2, 5, 15, 16, 31, -1])
    def test_power(self, k):
        F = field_make(2, 4)
        for a in range(1, F.order):
            want = 1
            for _ in range(k % (F.order - 1)):
                want = F.mul(want, a)
            assert F.power(a, k) == want

    @pytest.mark.parametrize("p,s", [(2, 1), (2, 2), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2)])
    def test_frobenius(self, p, s):
        q = p**s
        F = field_make(p, 2 * s)
        a = np.arange(F.order)
        fa = gf.frobenius_q(F, a, q)
        assert np.array_equal(gf.frobenius_q(F, fa, q), a)  # involution over GF(q^2)
        b = a[::-1]
        assert np.array_equal(gf.frobenius_q(F, F.add(a, b), q), F.add(fa, gf.frobenius_q(F, b, q)))
        assert np.array_equal(gf.frobenius_q(F, F.mul(a, b), q), F.mul(fa, gf.frobenius_q(F, b, q)))
        # fixed field is GF(q)
        assert int(np.sum(fa == a)) == q

    def test_frobenius_rejects_non_subfield(self):
        with pytest.raises(ValueError):
            gf.frobenius_q(field_make(2, 4), 3, 8)


def _matrix(data, F, max_rows=8, max_cols=10):
    r = data.draw(st.integers(1, max_rows))
    c = data.draw(st.integers(1, max_cols))
    vals = data.draw(st.lists(st.integers(0, F.order - 1), min_size=r * c, max_size=r * c))
    return np.array(vals, dtype=np.int64).reshape(r, c)


FIELDS = st.sampled_from([(2, 1), (2, 2), (3, 2), (2, 4), (5, 2)])


class TestLinearAlgebra:
    @settings(max_examples=80, deadline=None)
    @given(FIELDS, st.data())
    def test_rank_transpose(self, pe, data):
        F = field_make(*pe)
        M = _matrix(data, F)
        assert gf.rank(F, M) == gf.rank(F, M.T)

    @settings(max_examples=80, deadline=None)
    @given(FIELDS, st.data())
    def test_nullspace(self, pe, data):
        F = field_make(*pe)
        M = _matrix(data, F)
        N = gf.nullspace_basis(F, M)
        assert N.shape[0] == M.shape[1] - gf.rank(F, M)
        if N.size:
            assert not np.any(gf.gram_product(F, M, N))
            assert gf.rank(F, N) == N.shape[0]

    @settings(max_examples=60, deadline=None)
    @given(FIELDS, st.data())
    def test_subspace_equality(self, pe, data):
        F = field_make(*pe)
        M = _matrix(data, F)
        R, piv, r = gf.rref(F, M)
        assert gf.same_rowspace(F, M, R[:r])
        assert gf.is_subspace(F, M[:1], M)
        both = gf.is_subspace(F, M[:1], M) and gf.is_subspace(F, M, M[:1])
        assert both == (gf.rank(F, M) == gf.rank(F, M[:1]))

    def test_rref_canonical(self):
        F = field_make(3, 1)
        M = np.array([[0, 2, 1], [1, 1, 0], [1, 0, 1]])  # row 3 = row 1 + row 2
        R, piv, r = gf.rref(F, M)
        assert piv == [0, 1] and r == 2
        assert R[:2].tolist() == [[1, 0, 1], [0, 1, 2]]
        assert not R[2].any()

    def test_gram_identity(self):
        F = field_make(2, 2)
        I = np.eye(4, dtype=np.int64)
        assert np.array_equal(gf.gram_product(F, I, I), I)

    def test_gram_column_mismatch(self):
        F = field_make(2, 1)
        with pytest.raises(ValueError):
            gf.gram_product(F, np.ones((2, 3), int), np.ones((2, 4), int))

    def test_empty(self):
        F = field_make(2, 1)
        assert gf.rank(F, np.zeros((0, 5), int)) == 0
        assert gf.nullspace_basis(F, np.zeros((0, 3), int), cols=3).shape == (3, 3)
