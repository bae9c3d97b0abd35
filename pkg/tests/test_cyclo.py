"""Tests for exact q-polynomial arithmetic and cyclotomic reduction."""

from math import gcd

import pytest
from hypothesis import given, strategies as st

from qcurvature.cyclo import (
    ONE,
    ZERO,
    CycloModulus,
    QPoly,
    coeffs_list,
    cyclotomic,
    divisors,
    poly_from_coeffs,
    q_binomial,
    q_factorial,
    q_number,
    reduce,
)

qpolys = st.lists(st.integers(-9, 9), max_size=8).map(tuple).map(QPoly)


def totient(n: int) -> int:
    return sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)


class TestQPoly:
    def test_canonical_form_strips_trailing_zeros(self):
        assert QPoly((1, 0, 2, 0, 0)).coeffs == (1, 0, 2)
        assert QPoly((0, 0)).coeffs == ()
        assert QPoly().is_zero()

    def test_monomial(self):
        assert QPoly.monomial(3).coeffs == (0, 0, 0, 1)
        assert QPoly.monomial(0, 5).coeffs == (5,)
        with pytest.raises(ValueError):
            QPoly.monomial(-1)

    def test_arithmetic_basics(self):
        p = QPoly((1, 1))
        assert (p * p).coeffs == (1, 2, 1)
        assert (p - p).is_zero()
        assert (p + 1).coeffs == (2, 1)
        assert (2 * p).coeffs == (2, 2)
        assert (p**3).coeffs == (1, 3, 3, 1)

    def test_exact_division(self):
        num = QPoly((-1, 0, 0, 1))  # q^3 - 1
        den = QPoly((-1, 1))  # q - 1
        assert num.exact_div(den).coeffs == (1, 1, 1)
        with pytest.raises(ValueError):
            QPoly((1, 1)).exact_div(QPoly((0, 1)))

    def test_divmod_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            divmod(ONE, ZERO)

    def test_evaluate(self):
        assert QPoly((1, 2, 3)).evaluate(1) == 6
        assert QPoly((1, 2, 3)).evaluate(2) == 17
        assert ZERO.evaluate(7) == 0

    def test_str(self):
        assert str(ZERO) == "0"
        assert str(QPoly((1, 1, 2))) == "1 + q + 2*q^2"
        assert str(QPoly((-1, 1))) == "-1 + q"
        assert str(QPoly((0, 1))) == "q"
        assert str(QPoly((1, 0, -3))) == "1 - 3*q^2"
        assert QPoly((1, 1)).compact() == "1+q"

    def test_latex(self):
        assert QPoly((1, 1, 2)).latex() == "1+q+2q^{2}"
        assert QPoly((0, -1)).latex() == "-q"
        assert ZERO.latex() == "0"

    def test_json_coeffs(self):
        assert coeffs_list(QPoly((1, 1))) == [1, 1]
        assert poly_from_coeffs([1, 1]) == QPoly((1, 1))
        assert coeffs_list(ZERO) == []

    @given(qpolys, qpolys)
    def test_addition_commutes(self, p, r):
        assert p + r == r + p

    @given(qpolys, qpolys, qpolys)
    def test_mul_associative_and_distributive(self, p, r, s):
        assert (p * r) * s == p * (r * s)
        assert p * (r + s) == p * r + p * s

    @given(qpolys)
    def test_additive_inverse(self, p):
        assert (p + (-p)).is_zero()

    @given(qpolys, qpolys)
    def test_degree_of_product(self, p, r):
        if p.is_zero() or r.is_zero():
            assert (p * r).is_zero()
        else:
            assert (p * r).degree == p.degree + r.degree


class TestQNumbers:
    def test_q_number(self):
        assert q_number(0) == ZERO
        assert q_number(1) == ONE
        assert q_number(3) == QPoly((1, 1, 1))
        with pytest.raises(ValueError):
            q_number(-1)

    def test_q_factorial(self):
        assert q_factorial(0) == ONE
        assert q_factorial(2) == QPoly((1, 1))
        # (1+q)(1+q+q^2), expanded by hand
        assert q_factorial(3) == QPoly((1, 2, 2, 1))

    def test_q_binomial_examples(self):
        # recurrence value, cross-checked by exact division below
        assert q_binomial(4, 2) == QPoly((1, 1, 2, 1, 1))
        assert q_binomial(5, 0) == ONE
        assert q_binomial(3, 1) == q_number(3)
        assert q_binomial(3, 3) == ONE

    def test_q_binomial_out_of_range(self):
        assert q_binomial(4, -1) == ZERO
        assert q_binomial(4, 5) == ZERO

    @pytest.mark.parametrize("n", range(0, 13))
    def test_q_binomial_matches_factorial_quotient(self, n):
        for k in range(0, n + 1):
            quotient = q_factorial(n).exact_div(q_factorial(n - k) * q_factorial(k))
            assert q_binomial(n, k) == quotient

    @pytest.mark.parametrize("n", range(0, 13))
    def test_q_binomial_symmetry(self, n):
        for k in range(0, n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)

    def test_q_binomial_specialises_to_integers_at_one(self):
        from math import comb

        for n in range(0, 10):
            for k in range(0, n + 1):
                assert q_binomial(n, k).evaluate(1) == comb(n, k)


class TestCyclotomic:
    def test_small_cases(self):
        assert cyclotomic(1) == QPoly((-1, 1))
        assert cyclotomic(2) == QPoly((1, 1))
        assert cyclotomic(3) == QPoly((1, 1, 1))
        assert cyclotomic(4) == QPoly((1, 0, 1))
        assert cyclotomic(6) == QPoly((1, -1, 1))

    @pytest.mark.parametrize("n", range(1, 13))
    def test_product_over_divisors(self, n):
        product = ONE
        for d in divisors(n):
            product = product * cyclotomic(d)
        assert product == QPoly.monomial(n) - ONE

    @pytest.mark.parametrize("n", range(1, 13))
    def test_degree_is_totient(self, n):
        assert cyclotomic(n).degree == totient(n)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_modulus_kills_q_number_n(self, n):
        assert reduce(q_number(n), CycloModulus.of(n)) == ZERO

    def test_modulus_validation(self):
        with pytest.raises(ValueError):
            CycloModulus.of(1)
        with pytest.raises(ValueError):
            CycloModulus(3, QPoly((1, 2)))  # not monic


class TestReduce:
    def test_examples(self):
        m3 = CycloModulus.of(3)
        m4 = CycloModulus.of(4)
        assert reduce(q_number(3), m3) == ZERO
        assert reduce(QPoly.monomial(4), m4) == ONE  # q^2 = -1, so q^4 = 1
        assert reduce(ZERO, m4) == ZERO

    def test_degree_bound(self):
        m = CycloModulus.of(5)
        r = reduce(QPoly.monomial(23, 7) + QPoly((1, 2, 3)), m)
        assert r.degree < m.phi.degree

    @pytest.mark.parametrize("n", range(2, 13))
    def test_binomial_vanishing(self, n):
        m = CycloModulus.of(n)
        for k in range(1, n):
            assert reduce(q_binomial(n, k), m) == ZERO

    @given(qpolys, qpolys, st.integers(2, 12))
    def test_reduce_is_ring_homomorphism(self, p, r, n):
        m = CycloModulus.of(n)
        assert reduce(p * r, m) == reduce(reduce(p, m) * reduce(r, m), m)
        assert reduce(p + r, m) == reduce(reduce(p, m) + reduce(r, m), m)

    @given(qpolys, st.integers(2, 12))
    def test_reduce_is_idempotent(self, p, n):
        m = CycloModulus.of(n)
        assert reduce(reduce(p, m), m) == reduce(p, m)
