import pytest
from hypothesis import given, strategies as st

from hermsteane import codes as cf
from hermsteane import gf
from hermsteane import quantum as qb
from hermsteane.curve import (curve_context, designed_distances, improved_dimension_oracle,
                              self_orth_threshold)


@pytest.fixture(scope="module")
def q4():
    return curve_context(4)


@pytest.fixture(scope="module")
def q2():
    return curve_context(2)


class TestRecord:
    def test_text(self):
        r = qb.QuantumCodeRecord(64, 30, 16, 12, True, 13, False, "css")
        assert r.d_sym == 12 and r.d_exact
        assert str(r) == "[[64,30,12/≥13]]_16"
        s = qb.QuantumCodeRecord(64, 16, 16, 20, False, 20, False, "prop7")
        assert str(s) == "[[64,16,≥20]]_16"

    def test_factor(self):
        assert qb.steane_factor_bound(12, 10, 16) == 11
        assert qb.steane_factor_bound(5, 4, 16) == 5
        assert qb.steane_factor_bound(20, 16, 16) == 17

    @given(st.integers(1, 200), st.integers(1, 200), st.sampled_from([4, 9, 16, 25, 49]))
    def test_factor_integer_arithmetic(self, d, dp, Q):
        import math
        from fractions import Fraction
        assert qb.steane_factor_bound(d, dp, Q) == min(d, math.ceil(Fraction(Q + 1, Q) * dp))


class TestCSS:
    def test_asymmetric(self, q4):
        r = qb.css_pair(cf.improved_code(q4, 12), cf.dual(cf.improved_code(q4, 13)))
        assert (r.n, r.k, r.dz, r.dx, r.d_sym) == (64, 30, 12, 13, 12)

    def test_symmetric_pair(self, q4):
        E = cf.improved_code(q4, 12)
        r = qb.css_pair(E, cf.dual(E))
        assert (r.k, r.dz, r.dx) == (32, 12, 12)

    def test_not_nested(self, q4):
        E = cf.improved_code(q4, 12)
        with pytest.raises(qb.PreconditionError) as ei:
            qb.css_pair(E, E)
        assert ei.value.reason == "not-nested"

    @pytest.mark.parametrize("spec,params", [("improved:5", (48, 5)), ("onepoint:44", (14, 20))])
    def test_dual_containing(self, q4, spec, params):
        kind, _, p = spec.partition(":")
        C = cf.improved_code(q4, int(p)) if kind == "improved" else cf.onepoint_code(q4, int(p))
        r = qb.css_dual_containing(C)
        if kind == "onepoint":
            # the Goppa bound is the figure usually quoted for this code
            assert (r.k, qb.goppa_bound(q4, 44)) == params
            assert r.d_sym >= 20
        else:
            assert (r.k, r.d_sym) == params

    def test_full_space(self, q2):
        r = qb.css_dual_containing(cf.full_space(q2))
        assert (r.n, r.k, r.d_sym) == (8, 8, 1)

    def test_not_dual_containing(self, q4):
        with pytest.raises(qb.PreconditionError, match="not-dual-containing"):
            qb.css_dual_containing(cf.improved_code(q4, 28))

    def test_self_dual_exhaustive(self, q2):
        r = qb.css_dual_containing(cf.improved_code(q2, 4), exhaustive=True)
        assert (r.k, r.d_sym, r.d_exact) == (0, 4, True)

    def test_dx_matches_materialized_duals(self, q2):
        """dx computed on (C2^perp, C1^perp) equals the value after building
        both duals explicitly as null spaces."""
        F = q2.field
        for big, small in [(2, 5), (3, 5), (1, 4), (2, 6), (3, 8)]:
            C1, C2 = cf.improved_code(q2, big), cf.improved_code(q2, small)
            r = qb.css_pair(C1, C2, exhaustive=True)
            D1 = cf.adhoc_code(q2, gf.nullspace_basis(F, C1.gen, cols=8))
            D2 = cf.adhoc_code(q2, gf.nullspace_basis(F, C2.gen, cols=8))
            want = (cf.relative_min_weight(D2, D1) if D1.k else cf.min_weight_exhaustive(D2)[0])
            assert r.dx == want and r.dx_exact
            assert r.dz == cf.relative_min_weight(C1, C2)


class TestSteane:
    def test_52q(self, q4):
        r = qb.steane_enlarge(cf.onepoint_code(q4, 52), cf.onepoint_code(q4, 54))
        assert (r.k, r.d_sym) == (32, 11)
        assert r.param("d") == 12 and r.param("d_prime") == 10

    def test_64_51_5(self, q4):
        r = qb.steane_enlarge(cf.improved_code(q4, 5), cf.improved_code(q4, 4))
        assert (r.k, r.d_sym) == (51, 5)

    @pytest.mark.parametrize("inner,outer,reason", [
        (12, 10, "codimension-below-2"),
        (28, 20, "not-dual-containing"),
        (10, 12, "not-nested"),
    ])
    def test_preconditions(self, q4, inner, outer, reason):
        with pytest.raises(qb.PreconditionError) as ei:
            qb.steane_enlarge(cf.improved_code(q4, inner), cf.improved_code(q4, outer))
        assert ei.value.reason == reason

    def test_dimension_from_ranks(self, q4):
        C, Cp = cf.onepoint_code(q4, 52), cf.improved_code(q4, 10)
        r = qb.steane_enlarge(C, Cp)
        assert r.k == gf.rank(q4.field, C.gen) + gf.rank(q4.field, Cp.gen) - 64


class TestBounds:
    @pytest.mark.parametrize("m,val", [(44, 20), (60, 4), (63, 1), (70, 1)])
    def test_goppa(self, q4, m, val):
        assert qb.goppa_bound(q4, m) == val

    @pytest.mark.parametrize("q,m,val", [(4, 51, 13), (4, 52, 12), (2, 0, 8)])
    def test_order(self, q, m, val):
        assert qb.order_bound_onepoint(curve_context(q), m) == val

    def test_order_window(self, q4):
        assert qb.order_bound_onepoint(q4, 54, window_low=52) == 10
        with pytest.raises(ValueError):
            qb.order_bound_onepoint(q4, 52, window_low=52)

    @pytest.mark.parametrize("q", [2, 3])
    def test_order_bound_is_a_bound(self, q):
        # exhaustively at q=2, and on small codes at q=3
        ctx = curve_context(q)
        for m in ctx.lambdas:
            C = cf.onepoint_code(ctx, m)
            if ctx.field.order ** C.k > 1 << 16:
                break
            assert cf.min_weight_exhaustive(C)[0] >= qb.order_bound_onepoint(ctx, m)


class TestProp7:
    def test_20(self, q4):
        r = qb.enlarge_onepoint(q4, 20)
        assert (r.k, r.d_sym, r.construction) == (16, 20, "prop7")
        assert r.provenance == ("onepoint:44", "onepoint:46")

    def test_27(self, q4):
        r = qb.enlarge_onepoint(q4, 27)
        assert (r.k, r.d_sym) == (2, 27)

    def test_too_small(self, q4):
        with pytest.raises(qb.PreconditionError, match="19"):
            qb.enlarge_onepoint(q4, 18)

    def test_too_large(self, q4):
        with pytest.raises(qb.PreconditionError, match="self-orthogonality"):
            qb.enlarge_onepoint(q4, 28)

    @pytest.mark.parametrize("q", [3, 4, 5])
    def test_codimension_from_ranks(self, q):
        ctx = curve_context(q)
        for delta in range(q * q + 3, self_orth_threshold(q) + 1):
            r = qb.enlarge_onepoint(ctx, delta)
            C = cf.onepoint_code(ctx, ctx.n - delta)
            Cp = cf.onepoint_code(ctx, ctx.n - r.param("delta_prime"))
            step = -(-(delta - 1) // (q * q + 1))
            assert gf.rank(ctx.field, Cp.gen) - gf.rank(ctx.field, C.gen) == step
            assert r.d_sym >= delta


class TestSteaneK:
    @pytest.mark.parametrize("delta,m,K", [(5, 1, 3), (13, 1, 2), (9, 1, 2)])
    def test_values(self, delta, m, K):
        assert qb.steane_K(4, delta, m) == K

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
    def test_oracle(self, q):
        ctx = curve_context(q)
        for delta in range(2, q * q + 1):
            for m in range(1, delta):
                want = improved_dimension_oracle(ctx, delta - m) - improved_dimension_oracle(ctx, delta)
                assert qb.steane_K(q, delta, m) == want

    def test_range(self):
        with pytest.raises(ValueError):
            qb.steane_K(4, 5, 5)
        with pytest.raises(ValueError):
            qb.steane_K(4, 17, 1)

    def test_plan(self, q4):
        p = qb.enlargement_plan(q4, 13, 1)
        assert (p.delta, p.m, p.K, p.delta_prime) == (13, 1, 2, 12)


class TestProp8:
    @pytest.mark.parametrize("delta,m,k,d", [(5, 1, 51, 5), (13, 1, 30, 13), (10, 1, 36, 10)])
    def test_values(self, q4, delta, m, k, d):
        r = qb.enlarge_improved(q4, delta, m)
        assert (r.k, r.d_sym, r.construction) == (k, d, "prop8")
        assert r == qb.enlarge_improved_formula(q4, delta, m)

    def test_small_K(self, q4):
        # Ẽ(12) has codimension 1 in Ẽ(10)
        with pytest.raises(qb.PreconditionError, match="K=1") as ei:
            qb.enlarge_improved(q4, 12, 2)
        assert ei.value.reason == "codimension-below-2"
        assert "larger m" in str(ei.value)

    @pytest.mark.parametrize("delta,m,reason", [(7, 1, "not-designed"), (17, 1, "delta-range"),
                                                (5, 5, "m-range")])
    def test_preconditions(self, q4, delta, m, reason):
        with pytest.raises(qb.PreconditionError) as ei:
            qb.enlarge_improved(q4, delta, m)
        assert ei.value.reason == reason

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_formula_equals_matrices(self, q):
        ctx = curve_context(q)
        for delta in designed_distances(ctx):
            for m in range(1, delta):
                try:
                    want = qb.enlarge_improved_formula(ctx, delta, m)
                except qb.PreconditionError:
                    continue
                got = qb.enlarge_improved(ctx, delta, m)
                assert got == want
                assert got.d_sym >= delta - m + 1


class TestMixed:
    def test_q4_contains_examples(self, q4):
        recs = qb.enlarge_mixed_search(q4)
        by_k = {r.k: r for r in recs}
        assert by_k[32].d_sym == 11 and by_k[32].provenance == ("onepoint:52", "improved:10")
        assert by_k[51].d_sym == 5
        assert [r.k for r in recs] == sorted(by_k, reverse=True)

    def test_target(self, q4):
        assert [str(r) for r in qb.enlarge_mixed_search(q4, 30)] == ["[[64,30,≥13]]_16"]

    def test_materialized_agrees(self, q4):
        a = qb.enlarge_mixed_search(q4)
        b = qb.enlarge_mixed_search(q4, materialize=True)
        assert [(r.k, r.d_sym, r.provenance) for r in a] == [(r.k, r.d_sym, r.provenance) for r in b]

    def test_deterministic(self, q4):
        a = [repr(r) for r in qb.enlarge_mixed_search(q4)]
        b = [repr(r) for r in qb.enlarge_mixed_search(q4)]
        assert a == b

    def test_q2_frozen(self, q2):
        assert [str(r) for r in qb.enlarge_mixed_search(q2)] == [
            "[[8,6,≥2]]_4", "[[8,5,≥2]]_4", "[[8,4,≥3]]_4", "[[8,3,≥3]]_4"]

    def test_q2_exhaustive(self, q2):
        for r in qb.enlarge_mixed_search(q2):
            inner, outer = r.provenance
            kind, _, p = inner.partition(":")
            C = cf.improved_code(q2, int(p)) if kind == "improved" else cf.onepoint_code(q2, int(p))
            Cp = cf.improved_code(q2, int(outer.split(":")[1]))
            ex = qb.steane_enlarge(C, Cp, exhaustive=True)
            assert ex.k == r.k and ex.d_sym >= r.d_sym
            assert cf.relative_min_weight(C, cf.dual(Cp)) == cf.min_weight_exhaustive(C)[0]
            assert cf.relative_min_weight(Cp, cf.dual(Cp)) == cf.min_weight_exhaustive(Cp)[0]

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_q_bounds_hold_exhaustively_on_q2_improved(self, q):
        # designed improved distances are exact at q=2; at q>2 check the
        # closed-form K against ranks for every emitted prop8 record
        ctx = curve_context(q)
        for r in qb.enlarge_mixed_search(ctx):
            if r.construction == "prop8":
                d = r.param("delta")
                C = cf.improved_code(ctx, d)
                Cp = cf.improved_code(ctx, d - r.param("m"), strict=False)
                assert r.k == C.k + Cp.k - ctx.n
