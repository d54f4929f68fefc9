import itertools
import math

import pytest
from hypothesis import given, strategies as st

from schubop.divdiff import apply_element, apply_simple
from schubop.polyring import SparsePolynomial as P, act
from schubop.ptilde import complement, ptilde, strict_partitions
from schubop.schubert import (
    NotInStaircase, act_omega, dual_code, grassmannian_element, in_coinvariant_ideal, pair, rho,
    schubert_X, schubert_Y, schur_S, sign_of_top, stability_check, v_of_I, w_of_I,
)
from schubop.weyl import SignedPermutation as SP, bfs_lengths, identity, length


def codes(n):
    return list(itertools.product(*[range(n - i) for i in range(n)]))


def sign(k):
    return -1 if k % 2 else 1


class TestSchubertY:
    def test_top_is_monomial(self):
        for n in range(1, 5):
            assert schubert_Y(rho(n), n) == P.monomial(n, rho(n))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_dominant_codes_are_monomials(self, n):
        for alpha in codes(n):
            if all(a >= b for a, b in zip(alpha, alpha[1:])):
                assert schubert_Y(alpha, n) == P.monomial(n, alpha)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_increasing_codes_are_schur(self, n):
        for alpha in codes(n):
            k = max((i + 1 for i, a in enumerate(alpha) if a), default=0)
            head = alpha[:k]
            if k and all(a <= b for a, b in zip(head, head[1:])) and all(head):
                expected = schur_S(head[::-1], k).embed(n)
                assert schubert_Y(alpha, n) == expected

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_descent_recursion(self, n):
        for alpha in codes(n):
            for i in range(1, n):
                a, b = alpha[i - 1], alpha[i]
                if a > b:
                    beta = alpha[: i - 1] + (b, a - 1) + alpha[i + 1:]
                    assert apply_simple(schubert_Y(alpha, n), i) == schubert_Y(beta, n)

    @given(st.integers(1, 4).flatmap(lambda k: st.tuples(
        st.just(k), st.lists(st.integers(0, 2), min_size=k, max_size=k))))
    def test_shift_by_product(self, data):
        k, alpha = data
        n = 7
        alpha = [min(a, n - 2 - i) for i, a in enumerate(alpha)]
        prod = P.monomial(n, [1] * k + [0] * (n - k))
        assert schubert_Y(alpha, n) * prod == schubert_Y([a + 1 for a in alpha], n)

    def test_out_of_staircase(self):
        with pytest.raises(NotInStaircase):
            schubert_Y([3], 3)
        assert schubert_Y([3], 3, stable=True) == P.monomial(3, (3, 0, 0))


class TestSchur:
    def test_small(self):
        x1, x2 = P.var(2, 1), P.var(2, 2)
        assert schur_S((1,), 2) == x1 + x2
        assert schur_S((1, 1), 2) == x1 * x2
        s21 = schur_S((2, 1), 3)
        assert len(s21) == 7 and sum(int(c) for _, c in s21.sorted_terms()) == 8

    def test_too_many_parts(self):
        with pytest.raises(ValueError):
            schur_S((1, 1, 1), 2)


class TestPairings:
    def test_type_a_duality(self):
        n = 3
        for alpha, beta in itertools.product(codes(n), repeat=2):
            value = pair(act_omega(schubert_Y(alpha, n)), schubert_Y(dual_code(beta, n), n), "A")
            expected = sign(sum(alpha)) if alpha == beta else 0
            assert value == P.constant(n, expected)

    @pytest.mark.parametrize("n", [2, 3])
    def test_ptilde_duality(self, n):
        top = n - 1
        for I, J in itertools.product(strict_partitions(top), repeat=2):
            value = pair(ptilde(I, n), ptilde(complement(J, top), n), "D_v")
            assert value == P.constant(n, sign(math.comb(n, 2)) if I == J else 0)

    def test_full_d_duality(self):
        n = 2
        for alpha, beta in itertools.product(codes(n), repeat=2):
            for I, J in itertools.product(strict_partitions(1), repeat=2):
                f = act_omega(schubert_Y(alpha, n)) * ptilde(I, n)
                g = schubert_Y(dual_code(beta, n), n) * ptilde(complement(J, 1), n)
                expected = sign(sum(alpha) + 1) if (alpha, I) == (beta, J) else 0
                assert pair(f, g, "D_full") == P.constant(n, expected)

    def test_symmetric_forms_reject_non_symmetric(self):
        with pytest.raises(ValueError):
            pair(P.var(2, 1), P.one(2), "D_v")

    def test_codomain_is_invariant(self):
        n = 3
        squares = sum((P.var(n, i) ** 2 for i in (1, 2, 3)), P.zero(n))
        f = ptilde((3, 2, 1), n) * ptilde((2, 1), n) * ptilde((1,), n)
        value = pair(f, ptilde((2,), n) * squares, "B_nabla")
        assert value.degree() == 8
        assert all(act(value, w) == value for w in bfs_lengths("B", n))


class TestOrthogonalSchubert:
    def test_identity_values(self):
        assert schubert_X(identity(2), "D") == P.constant(2, -1)
        assert schubert_X(identity(1), "B") == P.constant(1, -1)
        for n in (2, 3, 4):
            assert schubert_X(identity(n), "D") == P.constant(n, sign_of_top(n, "D"))

    @pytest.mark.parametrize("t,n", [("D", 2), ("D", 3), ("B", 2), ("B", 3)])
    def test_degree_is_length(self, t, n):
        for w in bfs_lengths(t, n):
            f = schubert_X(w, t)
            assert f.is_homogeneous() and f.degree() == length(w, t)

    def test_v_examples(self):
        assert v_of_I((1,), 2, "D") == SP((2, 1))
        assert v_of_I((2, 1), 2, "B") == SP((2, 1))
        assert v_of_I((), 2, "D") == SP((-1, -2))
        with pytest.raises(ValueError):
            v_of_I((2,), 2, "D")

    @pytest.mark.parametrize("t,n", [("D", 2), ("D", 3), ("D", 4), ("B", 2), ("B", 3)])
    def test_maximal_grassmannian(self, t, n):
        top = n - 1 if t == "D" else n
        for I in strict_partitions(top):
            w = grassmannian_element(I, n, t)
            expected = ptilde(I, n).scale(sign(sum(I)) * sign_of_top(n, t))
            assert schubert_X(w, t) == expected

    @pytest.mark.parametrize("t,n", [("D", 3), ("B", 2)])
    def test_unique_nonvanishing_element(self, t, n):
        top = n - 1 if t == "D" else n
        lengths = bfs_lengths(t, n)
        for I in strict_partitions(top):
            hits = [w for w, ell in lengths.items()
                    if ell == sum(I) and not apply_element(ptilde(I, n), w, t).is_zero()]
            assert hits == [w_of_I(I, n, t)]
            assert apply_element(ptilde(I, n), hits[0], t) == P.constant(n, sign(sum(I)))


class TestStability:
    def test_identity_in_type_d(self):
        assert stability_check(identity(2), "D")

    @pytest.mark.parametrize("t", ["B", "D"])
    def test_classes_are_stable(self, t):
        for w in bfs_lengths(t, 2):
            assert stability_check(w, t, mode="classes")

    def test_type_b_differs_by_the_global_sign_only(self):
        for w in bfs_lengths("B", 2):
            assert not stability_check(w, "B")
            assert stability_check(w, "B", mode="normalized")

    def test_type_d_longest_element_is_not_stable_as_polynomial(self):
        w0 = SP((-1, -2))
        assert not stability_check(w0, "D", mode="normalized")
        assert stability_check(w0, "D", mode="classes")

    def test_ideal_membership(self):
        e1 = P.var(2, 1) + P.var(2, 2)
        assert in_coinvariant_ideal(e1 * e1, "A")
        assert not in_coinvariant_ideal(P.var(2, 1), "A")
        assert in_coinvariant_ideal(P.var(2, 1) ** 2 + P.var(2, 2) ** 2, "D")
