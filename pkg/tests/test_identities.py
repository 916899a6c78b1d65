from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biperiodic.core import DegenerateParametersError, Params
from biperiodic.exact import Mat2, mat_det, mat_pow
from biperiodic.identities import (
    Family,
    IdentityId,
    SingularSeriesError,
    SuiteConfig,
    check_addition,
    check_binomial,
    check_cassini,
    check_catalan,
    check_partial_sum,
    check_product_sum,
    check_square_difference,
    check_square_sum,
    check_u_identity,
    check_uv_identity,
    delta_weight,
    run_suite,
    sum_closed,
    sum_constants,
    sum_direct,
    sum_oracle,
)
from biperiodic.matforms import build, MatrixTag
from conftest import P_STAR, random_params

DEGENERATE = Params(1, 1, Fraction(-1, 4))  # discriminant 0
SINGULAR_SUM = Params(1, 3, Fraction(-2, 3))  # det(I - K^1) = 0


def small_indices(lo: int = 1, hi: int = 6) -> st.SearchStrategy[int]:
    return st.integers(min_value=lo, max_value=hi)


class TestIdentityId:
    def test_str_forms(self) -> None:
        assert str(IdentityId(Family.L2, 7)) == "L2.7"
        assert str(IdentityId(Family.SUM, "u")) == "SUM.u"
        assert str(IdentityId(Family.T34)) == "T34"

    def test_sort_is_family_then_sub(self) -> None:
        ids = [
            IdentityId(Family.T34),
            IdentityId(Family.L1, 2),
            IdentityId(Family.L1, 1),
            IdentityId(Family.SUM, "v"),
        ]
        ordered = sorted(ids, key=lambda i: i.sort_key)
        assert [str(i) for i in ordered] == ["L1.1", "L1.2", "SUM.v", "T34"]


class TestUIdentities:
    def test_square_vs_neighbors_worked(self) -> None:
        r = check_u_identity(P_STAR, 1, 1, 2)
        assert r.passed and r.lhs == Fraction(-2, 3)

    def test_addition_worked(self) -> None:
        r = check_u_identity(P_STAR, 2, 2, 4)
        assert r.passed and r.rhs == 126

    def test_telescoping_reconstructs_u4(self) -> None:
        r = check_u_identity(P_STAR, 4, 2, 4)
        assert r.passed and r.lhs == 16 and r.rhs == 16

    def test_subtraction_worked(self) -> None:
        r = check_u_identity(P_STAR, 3, 1, 3)
        assert r.passed and r.lhs == -2 and r.rhs == -2

    def test_subtraction_mixed_parity(self) -> None:
        # the parity exponents only matter when m and n differ mod 2
        r = check_u_identity(P_STAR, 3, 2, 1)
        assert r.passed and r.lhs == 1 and r.rhs == 1

    def test_telescoping_worked(self) -> None:
        assert check_u_identity(P_STAR, 4, 2, 5).passed

    def test_random_storm(self) -> None:
        rng = random.Random(101)
        for _ in range(60):
            p = random_params(rng)
            m, n = rng.randint(1, 9), rng.randint(1, 9)
            for sub in (1, 2, 3, 4):
                r = check_u_identity(p, sub, m, n)
                assert r.passed, (sub, p, m, n, r.lhs, r.rhs)

    def test_specialized_at_c_equal_one(self) -> None:
        # pinning c = 1 keeps every relation exact (the one-parameter family)
        rng = random.Random(211)
        for _ in range(30):
            base = random_params(rng)
            p = Params(base.a, base.b, 1, base.w0, base.w1)
            m, n = rng.randint(1, 8), rng.randint(1, 8)
            for sub in (1, 2, 3, 4):
                assert check_u_identity(p, sub, m, n).passed

    def test_bad_sub_rejected(self) -> None:
        with pytest.raises(ValueError):
            check_u_identity(P_STAR, 5, 1, 1)


class TestUVIdentities:
    @pytest.mark.parametrize(
        ("sub", "m", "n", "value"),
        [(1, 1, 2, 4), (3, 2, 1, 14), (7, 1, 3, 14)],
    )
    def test_worked_points(self, sub: int, m: int, n: int, value: int) -> None:
        r = check_uv_identity(P_STAR, sub, m, n)
        assert r.passed and r.rhs == value

    def test_all_seven_random(self) -> None:
        rng = random.Random(103)
        checked = 0
        while checked < 40:
            p = random_params(rng)
            if p.a * p.b * (p.a * p.b + 4 * p.c) == 0:
                continue
            checked += 1
            m, n = rng.randint(1, 8), rng.randint(1, 8)
            for sub in range(1, 8):
                r = check_uv_identity(p, sub, m, n)
                assert r.passed, (sub, p, m, n, r.lhs, r.rhs)

    def test_degenerate_rejected(self) -> None:
        with pytest.raises(DegenerateParametersError):
            check_uv_identity(DEGENERATE, 1, 1, 2)


class TestQuadraticFamilies:
    def test_cassini_worked(self) -> None:
        assert check_cassini(P_STAR, 2).lhs == Fraction(-7, 2)
        assert check_cassini(P_STAR, 1).lhs == Fraction(7, 2)

    def test_addition_worked(self) -> None:
        assert check_addition(P_STAR, 2, 3).lhs == 79
        assert check_addition(P_STAR, 1, 1).lhs == 3

    def test_catalan_worked(self) -> None:
        assert check_catalan(P_STAR, 1, 1, 1).lhs == Fraction(7, 2)

    def test_catalan_specializes_to_cassini(self) -> None:
        # p = q makes the index pattern (n-p, n+p, n, n) match the square form
        rng = random.Random(107)
        for _ in range(20):
            p = random_params(rng)
            n, q = rng.randint(2, 7), rng.randint(1, 4)
            assert check_catalan(p, n, q, q).passed

    def test_product_sum_worked(self) -> None:
        assert check_product_sum(P_STAR, 3, 2).lhs == Fraction(227, 2)

    def test_square_sum_worked(self) -> None:
        assert check_square_sum(P_STAR, 2).lhs == Fraction(227, 2)

    def test_square_difference_worked(self) -> None:
        assert check_square_difference(P_STAR, 2).lhs == 99

    def test_random_storm(self) -> None:
        rng = random.Random(109)
        for _ in range(40):
            p = random_params(rng)
            n, q = rng.randint(1, 7), rng.randint(1, 5)
            assert check_cassini(p, n).passed
            assert check_addition(p, n, q).passed
            assert check_catalan(p, n, rng.randint(1, 4), rng.randint(1, 4)).passed
            assert check_product_sum(p, rng.randint(1, 6), n).passed
            assert check_square_sum(p, n).passed
            assert check_square_difference(p, n).passed


class TestPartialSums:
    def test_constants_worked(self) -> None:
        sc1 = sum_constants(P_STAR, 1)
        assert (sc1.d_printed, sc1.d_corrected) == (-11, -11)
        sc2 = sum_constants(P_STAR, 2)
        assert (sc2.d_printed, sc2.d_corrected) == (-6, -11)

    def test_corrected_constant_is_the_determinant(self) -> None:
        rng = random.Random(113)
        checked = 0
        while checked < 20:
            p = random_params(rng)
            if p.a * p.b * (p.a * p.b + 4 * p.c) == 0:
                continue
            checked += 1
            k = build(MatrixTag.K, p)
            for m in range(1, 6):
                expected = mat_det(Mat2.identity() - mat_pow(k, m))
                assert sum_constants(p, m).d_corrected == expected

    def test_oracle_worked_values(self) -> None:
        assert sum_oracle(P_STAR, 1, 1, 0) == (1, 8)
        assert sum_oracle(P_STAR, 2, 1, 0) == (6, 50)

    def test_three_way_agreement(self) -> None:
        rng = random.Random(127)
        checked = 0
        while checked < 12:
            p = random_params(rng)
            if p.a * p.b * (p.a * p.b + 4 * p.c) == 0:
                continue
            try:
                for m in range(1, 5):
                    for n in range(0, 5):
                        for r in range(0, 3):
                            direct = sum_direct(p, m, n, r)
                            assert sum_oracle(p, m, n, r) == direct
                            assert sum_closed(p, m, n, r) == direct
            except SingularSeriesError:
                continue
            checked += 1

    def test_printed_form_disagrees_at_worked_points(self) -> None:
        printed = sum_closed(P_STAR, 2, 1, 0, corrected=False)
        assert printed is not None and printed[0] == Fraction(323, 6)
        printed = sum_closed(P_STAR, 1, 1, 0, corrected=False)
        assert printed is not None and printed[0] == Fraction(-1, 11)

    def test_report_carries_printed_comparison(self) -> None:
        r = check_partial_sum(P_STAR, 2, 1, 0, seq="u")
        assert r.passed
        assert r.printed_form_value == Fraction(323, 6)
        assert r.printed_form_matches is False

    def test_report_v_sum(self) -> None:
        r = check_partial_sum(P_STAR, 1, 1, 0, seq="v")
        assert r.passed and r.lhs == 8

    def test_degenerate_rejected(self) -> None:
        with pytest.raises(DegenerateParametersError):
            sum_oracle(DEGENERATE, 1, 1, 0)

    def test_singular_series_rejected(self) -> None:
        assert sum_constants(SINGULAR_SUM, 1).d_corrected == 0
        with pytest.raises(SingularSeriesError):
            sum_oracle(SINGULAR_SUM, 1, 2, 0)
        with pytest.raises(SingularSeriesError):
            sum_closed(SINGULAR_SUM, 1, 2, 0)


class TestBinomialTransform:
    def test_delta_weights_worked(self) -> None:
        assert delta_weight(P_STAR, 2, 1, 1, 0) == 6
        assert delta_weight(P_STAR, 2, 1, 1, 1) == 9

    def test_reconstructs_u3(self) -> None:
        r = check_binomial(P_STAR, 2, 1, 1, seq="u")
        assert r.passed and r.lhs == 7

    def test_reconstructs_u4(self) -> None:
        r = check_binomial(P_STAR, 2, 0, 4, seq="u")
        assert r.passed and r.lhs == 16

    def test_collapses_at_n_zero(self) -> None:
        rng = random.Random(131)
        for _ in range(15):
            p = random_params(rng)
            for r_idx in range(0, 5):
                rep = check_binomial(p, 3, 0, r_idx, seq="u")
                assert rep.passed and rep.lhs == rep.rhs

    def test_v_variant(self) -> None:
        rng = random.Random(137)
        for _ in range(15):
            p = random_params(rng)
            m = rng.randint(2, 5)
            rep = check_binomial(p, m, rng.randint(0, 4), rng.randint(0, 3), seq="v")
            assert rep.passed

    def test_u_random(self) -> None:
        rng = random.Random(139)
        for _ in range(25):
            p = random_params(rng)
            rep = check_binomial(p, rng.randint(2, 6), rng.randint(0, 4), rng.randint(0, 4), seq="u")
            assert rep.passed

    def test_m_below_two_rejected(self) -> None:
        with pytest.raises(ValueError):
            check_binomial(P_STAR, 1, 1, 0, seq="u")


class TestRunSuite:
    def test_default_config_zero_failures(self) -> None:
        summary = run_suite(SuiteConfig(samples=20, seed=9))
        assert summary.failed == 0
        assert summary.passed > 0

    def test_deterministic(self) -> None:
        cfg = SuiteConfig(samples=10, seed=4)
        first = json.dumps(run_suite(cfg).to_dict(), sort_keys=True)
        second = json.dumps(run_suite(cfg).to_dict(), sort_keys=True)
        assert first == second

    def test_different_seeds_differ(self) -> None:
        one = run_suite(SuiteConfig(samples=10, seed=1)).to_dict()
        two = run_suite(SuiteConfig(samples=10, seed=2)).to_dict()
        assert one != two

    def test_results_in_family_order(self) -> None:
        summary = run_suite(SuiteConfig(samples=4, seed=5))
        keys = [r.id.sort_key for r in summary.results]
        assert keys == sorted(keys)

    def test_family_subset(self) -> None:
        summary = run_suite(SuiteConfig(families=(Family.CASSINI_W,), samples=6, seed=3))
        assert {r.id.family for r in summary.results} == {Family.CASSINI_W}
        assert summary.passed == 6

    def test_pinned_degenerate_params_skip_cleanly(self) -> None:
        summary = run_suite(SuiteConfig(samples=3, seed=1, params=(DEGENERATE,)))
        assert summary.failed == 0
        skipped_families = {r.id.family for r in summary.skipped}
        assert Family.L2 in skipped_families and Family.SUM in skipped_families
        ran_families = {r.id.family for r in summary.results}
        assert Family.L1 in ran_families and Family.ADDITION in ran_families
        for record in summary.skipped:
            if record.id.family is Family.L2:
                assert "discriminant" in record.reason

    def test_pinned_singular_sum_skips(self) -> None:
        summary = run_suite(
            SuiteConfig(families=(Family.SUM,), samples=3, seed=2, params=(SINGULAR_SUM,))
        )
        assert summary.failed == 0
        assert any("zero for this m" in r.reason for r in summary.skipped)

    def test_to_dict_shape(self) -> None:
        payload = run_suite(SuiteConfig(families=(Family.T34,), samples=2, seed=0)).to_dict()
        assert payload["suite"] == "T34"
        assert payload["failed"] == 0
        assert len(payload["results"]) == 2
        row = payload["results"][0]
        assert {"id", "params", "indices", "lhs", "rhs", "pass"} <= set(row)

    def test_invalid_samples_rejected(self) -> None:
        with pytest.raises(ValueError):
            run_suite(SuiteConfig(samples=0))

    @given(seed=st.integers(0, 2**16))
    def test_any_seed_passes_small_run(self, seed: int) -> None:
        summary = run_suite(SuiteConfig(samples=2, seed=seed, max_index=6))
        assert summary.failed == 0
