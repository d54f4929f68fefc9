from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schubop.divdiff import antisymmetrize, delta
from schubop.polyring import SparsePolynomial as P, exact_divide
from schubop.ptilde import elementary
from schubop.symfun import (
    SymFunExpr, d_coefficient, foulkes_D, generator, hall_pair, partitions, qtilde_sym, realize,
    rectangle_apply, schur_P_poly, schur_PQ, vertex, z_lambda,
)

CAP = 8


def p(*lam, c=1, cap=CAP):
    return SymFunExpr({lam: c}, cap)


def schur_P_by_symmetrizing(parts):
    """``P_λ`` in exactly ``ℓ(λ)`` variables as ``(x^λ Π_{i<j}(x_i+x_j)) Ω / Δ``."""
    n = len(parts)
    x = [P.var(n, i) for i in range(1, n + 1)]
    f = P.monomial(n, parts)
    for i in range(n):
        for j in range(i + 1, n):
            f = f * (x[i] + x[j])
    return exact_divide(antisymmetrize(f, "A"), delta("A", n))


class TestGenerators:
    def test_elementary(self):
        assert generator("e", 1, CAP) == p(1)
        assert generator("e", 2, CAP) == p(1, 1, c=Fraction(1, 2)) - p(2, c=Fraction(1, 2))

    def test_q_and_P(self):
        assert generator("q", 1, CAP) == p(1, c=2)
        assert generator("P_row", 1, CAP) == p(1)

    def test_cap(self):
        with pytest.raises(ValueError):
            generator("e", 9, CAP)

    def test_truncation_is_silent(self):
        small = p(3, cap=4)
        assert (small * small).is_zero()

    @pytest.mark.parametrize("k", range(0, 6))
    def test_realized_generators(self, k):
        for n in (1, 2, 3):
            assert realize(generator("e", k, CAP), n) == elementary(k, n)


class TestHall:
    def test_power_sums(self):
        assert hall_pair(p(1), p(1)) == 1
        assert hall_pair(p(2), p(2)) == 2
        assert hall_pair(p(2), p(1, 1)) == 0

    def test_z(self):
        assert z_lambda((2, 1, 1)) == 4
        assert z_lambda((3,)) == 3

    def test_foulkes_derivation(self):
        assert foulkes_D(p(1), p(1, 1)) == p(1, c=2)

    @given(st.sampled_from(partitions(2)), st.sampled_from(partitions(3)), st.sampled_from(partitions(5)))
    def test_adjointness(self, a, b, c):
        f, g, h = p(*a), p(*b), p(*c)
        assert hall_pair(f * g, h) == hall_pair(g, foulkes_D(f, h))


class TestVertex:
    def test_constant(self):
        one = SymFunExpr.constant(1, CAP)
        assert vertex("Us", one) == one

    def test_odd_length_is_killed(self):
        assert vertex("Us", qtilde_sym((1,), CAP)).is_zero()

    def test_even_length_is_fixed(self):
        f = schur_PQ((2, 1), CAP, "P")
        assert vertex("Ve", f) == f

    def test_unknown(self):
        with pytest.raises(ValueError):
            vertex("Xs", p(1))


class TestSchurPQ:
    def test_one_part(self):
        assert schur_PQ((1,), CAP, "Q") == p(1, c=2)
        assert schur_PQ((1,), CAP, "P") == p(1)

    @pytest.mark.parametrize("parts", [(1,), (2,), (2, 1), (3, 1), (3, 2), (3, 2, 1), (4, 1)])
    def test_against_symmetrization(self, parts):
        expected = schur_P_by_symmetrizing(parts)
        n = len(parts)
        assert realize(schur_PQ(parts, CAP, "P"), n) == expected
        assert schur_P_poly(parts, n) == expected
        assert realize(schur_PQ(parts, CAP, "Q"), n) == expected.scale(2 ** n)

    def test_q21_in_two_variables(self):
        x1, x2 = P.var(2, 1), P.var(2, 2)
        assert realize(schur_PQ((2, 1), CAP, "Q"), 2) == (x1 * x1 * x2 + x1 * x2 * x2).scale(4)


class TestRealize:
    def test_examples(self):
        assert realize(p(1), 2) == P.var(2, 1) + P.var(2, 2)
        assert realize(generator("e", 2, CAP), 2) == P.var(2, 1) * P.var(2, 2)
        assert realize(generator("e", 3, CAP), 2).is_zero()

    def test_non_dyadic(self):
        with pytest.raises(ArithmeticError):
            realize(p(1, c=Fraction(1, 3)), 2)

    @given(st.sampled_from(partitions(3)), st.sampled_from(partitions(2)))
    def test_homomorphism(self, a, b):
        assert realize(p(*a) * p(*b), 3) == realize(p(*a), 3) * realize(p(*b), 3)


class TestRectangle:
    def test_d_examples(self):
        for n in (2, 3, 4, 5):
            for h in range(n):
                if (n - 1 - h) % 2 == 0:
                    assert d_coefficient(1, n - 1, 0, h) == (-1) ** (n - 1)
        assert d_coefficient(2, 3, 1, 2) == 0

    def test_d_range(self):
        with pytest.raises(ValueError):
            d_coefficient(0, 3, 0, 0)

    def test_small_identity(self):
        # q=1, r=2, k=0, h=1: P_∅(x_1) P_(1)(x_2, x_3) Π(x_1+x_j) under the rectangle
        n = 3
        x = [P.var(n, i) for i in (1, 2, 3)]
        f = (x[1] + x[2]) * (x[0] + x[1]) * (x[0] + x[2])
        value = rectangle_apply(f, 1, 2)
        assert value == schur_P_poly((1,), n).scale(d_coefficient(1, 2, 0, 1))

    def test_rectangle_range(self):
        with pytest.raises(ValueError):
            rectangle_apply(P.one(3), 1, 1)
