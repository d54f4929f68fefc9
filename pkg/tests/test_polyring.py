import pytest
from hypothesis import given, strategies as st

from conftest import polynomials
from schubop.dyadic import DyadicRational, NonDyadicError
from schubop.polyring import (
    AlphabetMismatch, NonDivisible, SparsePolynomial, act, arith, exact_divide,
)
from schubop.weyl import HEART, enumerate_group, generator, inverse

P = SparsePolynomial


def x(i, n=2):
    return P.var(n, i)


class TestDyadic:
    def test_canonical_form(self):
        d = DyadicRational(12, 0)
        assert (d.mantissa, d.exponent) == (3, 2)
        z = DyadicRational(0, -5)
        assert (z.mantissa, z.exponent) == (0, 0)

    def test_rendering_and_parsing(self):
        assert str(DyadicRational(3, -2)) == "3/2^2"
        assert DyadicRational.parse("3/2^2") == DyadicRational(3, -2)
        assert DyadicRational.coerce("1/2") == DyadicRational(1, -1)
        assert str(DyadicRational(-5, 0)) == "-5"

    def test_arithmetic_is_exact(self):
        half = DyadicRational(1, -1)
        assert half + half == 1
        assert half * half == DyadicRational(1, -2)
        assert 1 - half == half

    def test_non_dyadic_rejected(self):
        with pytest.raises(NonDyadicError):
            DyadicRational.coerce("1/3")


class TestArith:
    def test_additive_inverse(self):
        assert arith(x(1), -x(1), "add").is_zero()

    def test_difference_of_squares(self):
        assert arith(x(1) + x(2), x(1) - x(2), "mul") == x(1) ** 2 - x(2) ** 2

    def test_dyadic_product(self):
        half = x(1).scale("1/2")
        assert arith(half, half, "mul") == P.monomial(2, (2, 0), "1/4")

    def test_alphabets_must_match(self):
        with pytest.raises(AlphabetMismatch):
            x(1, 2) + x(1, 3)

    def test_no_zero_coefficients_stored(self):
        f = x(1) + x(2) - x(2)
        assert len(f) == 1


class TestAct:
    def test_s0_negates_first_variable(self):
        assert act(x(1), generator(0, 2)) == -x(1)

    def test_heart_sends_x1_to_minus_x2(self):
        assert act(x(1), generator(HEART, 2)) == -x(2)

    def test_heart_fixes_product(self):
        f = x(1) * x(2)
        assert act(f, generator(HEART, 2)) == f

    @given(polynomials(3), st.sampled_from(sorted(enumerate_group("B", 3), key=lambda w: w.image)))
    def test_inverse_undoes(self, f, w):
        assert act(act(f, w), inverse(w)) == f

    @given(polynomials(3), polynomials(3), st.sampled_from(sorted(enumerate_group("D", 3), key=lambda w: w.image)))
    def test_multiplicative(self, f, g, w):
        assert act(f * g, w) == act(f, w) * act(g, w)


class TestExactDivide:
    def test_difference_of_squares(self):
        assert exact_divide(x(1) ** 2 - x(2) ** 2, x(1) - x(2)) == x(1) + x(2)

    def test_non_divisible(self):
        with pytest.raises(NonDivisible):
            exact_divide(x(1), x(2))

    def test_by_vandermonde(self):
        f = x(1) ** 2 * x(2) - x(1) * x(2) ** 2
        assert exact_divide(f, x(1) - x(2)) == x(1) * x(2)

    @given(polynomials(3), polynomials(3))
    def test_divides_product(self, f, g):
        if g.is_zero():
            return
        assert exact_divide(f * g, g) == f


class TestSerialization:
    @given(polynomials(3))
    def test_text_round_trip(self, f):
        assert P.parse(f.to_text(), 3) == f

    @given(polynomials(4))
    def test_json_round_trip(self, f):
        assert P.from_json(f.dumps()) == f
        assert P.from_json(f.to_json()).dumps() == f.dumps()

    def test_grevlex_order(self):
        f = x(2) + x(1) ** 2 + 3 + x(1)
        assert [e for e, _ in f.sorted_terms()] == [(2, 0), (1, 0), (0, 1), (0, 0)]

    def test_zero_prints(self):
        assert str(P.zero(2)) == "0"
