from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biperiodic.core import (
    Params,
    SequenceKind,
    chi,
    discriminant,
    initial_pair,
    negative_term,
    reflect_u,
    reflect_v,
    reflect_w,
    table_notation,
    term_naive,
    term_range,
    v_from_u,
    w_from_u,
    zeta,
)
from conftest import P_STAR, random_params

U, V, W = SequenceKind.U, SequenceKind.V, SequenceKind.W


class TestParams:
    def test_coercion(self) -> None:
        p = Params("1/2", 3, Fraction(1), 0, "4")
        assert p.a == Fraction(1, 2) and p.w1 == 4

    @pytest.mark.parametrize("field", ["a", "b", "c"])
    def test_zero_coefficient_rejected(self, field: str) -> None:
        kwargs = {"a": 1, "b": 1, "c": 1, field: 0}
        with pytest.raises(ValueError):
            Params(**kwargs)

    def test_zero_initials_allowed(self) -> None:
        assert Params(1, 1, 1, 0, 0).w0 == 0

    def test_float_rejected(self) -> None:
        with pytest.raises(TypeError):
            Params(1.5, 1, 1)

    def test_notation(self) -> None:
        assert table_notation(P_STAR) == "w(1,1;2,3,1)"
        assert table_notation(Params(1, 1, 2, 0, 1)) == "w(0,1;1,1,2)"


class TestParity:
    @given(n=st.integers(-1000, 1000))
    def test_zeta_is_parity(self, n: int) -> None:
        assert zeta(n) in (0, 1)
        assert zeta(n) == zeta(n + 2)

    def test_zeta_negative(self) -> None:
        assert zeta(-3) == 1 and zeta(-4) == 0

    @given(n=st.integers(-100, 100))
    def test_chi_alternates(self, n: int) -> None:
        expected = P_STAR.a if n % 2 == 0 else P_STAR.b
        assert chi(P_STAR, n) == expected


# frozen expected tables at P*, computed by hand from the two-term recurrence
EXPECTED_U = [Fraction(x) for x in (0, 1, 2, 7, 16, 55, 126)]
EXPECTED_V = [Fraction(x) for x in (2, 3, 8, 27, 62, 213, 488)]
EXPECTED_W = [Fraction(x) for x in (1, 1, 3, 10, 23, 79, 181)]


class TestTermNaive:
    @pytest.mark.parametrize(
        ("kind", "table"), [(U, EXPECTED_U), (V, EXPECTED_V), (W, EXPECTED_W)]
    )
    def test_forward_tables(self, kind: SequenceKind, table: list[Fraction]) -> None:
        got = [term_naive(P_STAR, kind, n) for n in range(len(table))]
        assert got == table

    def test_initials(self) -> None:
        assert initial_pair(P_STAR, U) == (0, 1)
        assert initial_pair(P_STAR, V) == (2, 3)
        assert initial_pair(P_STAR, W) == (1, 1)

    def test_negative_spots(self) -> None:
        assert term_naive(P_STAR, W, -1) == -2
        assert term_naive(P_STAR, U, -2) == -2
        assert term_naive(P_STAR, V, -1) == -3

    def test_recurrence_holds_forward_and_backward(self) -> None:
        rng = random.Random(41)
        for _ in range(10):
            p = random_params(rng)
            for kind in SequenceKind:
                run = term_range(p, kind, -30, 60)
                terms = dict(zip(range(-30, 61), run))
                for n in range(-28, 61):
                    assert terms[n] == chi(p, n) * terms[n - 1] + p.c * terms[n - 2]

    def test_backward_step_recovers_w0(self) -> None:
        # one reverse application of the recurrence undoes one forward step
        rng = random.Random(43)
        for _ in range(30):
            p = random_params(rng)
            w1, w2 = term_naive(p, W, 1), term_naive(p, W, 2)
            assert (w2 - chi(p, 2) * w1) / p.c == p.w0

    def test_classical_fibonacci_specialization(self) -> None:
        fib = [0, 1]
        while len(fib) < 30:
            fib.append(fib[-1] + fib[-2])
        p = Params(1, 1, 1)
        assert term_range(p, U, 0, 29) == fib

    def test_counter_two_muls_per_step(self) -> None:
        from biperiodic.exact import OpCounter

        counter = OpCounter()
        term_naive(P_STAR, U, 10, counter)
        assert counter.muls == 2 * 9

    def test_range_matches_pointwise(self) -> None:
        lo, hi = -5, 12
        run = term_range(P_STAR, W, lo, hi)
        assert run == [term_naive(P_STAR, W, n) for n in range(lo, hi + 1)]

    def test_range_singleton(self) -> None:
        assert term_range(P_STAR, U, 0, 0) == [0]

    def test_range_reversed_rejected(self) -> None:
        with pytest.raises(ValueError):
            term_range(P_STAR, U, 3, 1)


class TestDiscriminant:
    def test_at_p_star(self) -> None:
        assert discriminant(P_STAR) == 60

    def test_degenerate_point(self) -> None:
        # ab(ab + 4c) = 0 when c = -ab/4
        assert discriminant(Params(1, 1, Fraction(-1, 4))) == 0


class TestReflections:
    """Negative indices via the closed reflection laws."""

    def test_u_reflection_table(self) -> None:
        for n in range(1, 10):
            u_n = term_naive(P_STAR, U, n)
            assert reflect_u(P_STAR, n, u_n) == term_naive(P_STAR, U, -n)

    def test_v_reflection_table(self) -> None:
        for n in range(1, 10):
            v_n = term_naive(P_STAR, V, n)
            assert reflect_v(P_STAR, n, v_n) == term_naive(P_STAR, V, -n)

    def test_w_reflection_table(self) -> None:
        for n in range(1, 10):
            u_n = term_naive(P_STAR, U, n)
            u_next = term_naive(P_STAR, U, n + 1)
            assert reflect_w(P_STAR, n, u_n, u_next) == term_naive(P_STAR, W, -n)

    def test_reflections_random_params(self) -> None:
        rng = random.Random(17)
        for _ in range(30):
            p = random_params(rng)
            for n in range(1, 8):
                assert negative_term(p, U, n) == term_naive(p, U, -n)
                assert negative_term(p, V, n) == term_naive(p, V, -n)
                assert negative_term(p, W, n) == term_naive(p, W, -n)

    def test_nonpositive_index_rejected(self) -> None:
        with pytest.raises(ValueError):
            reflect_u(P_STAR, 0, Fraction(0))
        with pytest.raises(ValueError):
            negative_term(P_STAR, W, -1)


class TestKindBridges:
    """w and v rebuilt from the u-sequence."""

    def test_w_from_u_spots(self) -> None:
        for n in range(1, 12):
            assert w_from_u(P_STAR, n) == term_naive(P_STAR, W, n)

    def test_v_from_u_spots(self) -> None:
        for n in range(1, 12):
            assert v_from_u(P_STAR, n) == term_naive(P_STAR, V, n)

    def test_bridges_random_params(self) -> None:
        rng = random.Random(23)
        for _ in range(20):
            p = random_params(rng)
            for n in range(1, 8):
                assert w_from_u(p, n) == term_naive(p, W, n)
                assert v_from_u(p, n) == term_naive(p, V, n)

    def test_bridges_and_reflection_wide_sweep(self) -> None:
        # 100 parameter sets, indices up to 50
        rng = random.Random(29)
        for _ in range(100):
            p = random_params(rng)
            n = rng.randint(1, 50)
            assert w_from_u(p, n) == term_naive(p, W, n)
            assert v_from_u(p, n) == term_naive(p, V, n)
            assert negative_term(p, U, n) == term_naive(p, U, -n)
