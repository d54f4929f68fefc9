import itertools
import random

import pytest
from hypothesis import given, strategies as st

from schubop.polyring import SparsePolynomial as P, act
from schubop.ptilde import (
    NotSymmetric, branch, complement, congruent_mod_ideal, elementary, factorization_check,
    kernel_F, kernel_Ptilde, ptilde, ptilde_decompose, qtilde, qtilde_pair, staircase,
    strict_partitions,
)
from schubop.schubert import schur_S
from schubop.weyl import bfs_lengths


def doubled(f, n):
    return f.embed(2 * n)


def test_qtilde_pair_examples():
    assert qtilde_pair(1, 0, 2) == elementary(1, 2)
    x1, x2 = P.var(2, 1), P.var(2, 2)
    assert qtilde_pair(1, 1, 2) == x1 ** 2 + x2 ** 2
    with pytest.raises(ValueError):
        qtilde_pair(0, 1, 2)


def test_single_row_is_elementary():
    for n in range(1, 5):
        for k in range(n + 2):
            assert qtilde((k,), n) == elementary(k, n)


def test_ptilde_one():
    assert ptilde((1,), 2) == (P.var(2, 1) + P.var(2, 2)).scale("1/2")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pfaffian_matches_recursion(n):
    for I in strict_partitions(n):
        assert qtilde(I, n, "pfaffian") == qtilde(I, n, "recursion")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_doubled_part_factorization(n):
    rng = random.Random(n)
    for I in strict_partitions(n):
        j = rng.randint(1, n)
        if j not in I:
            assert factorization_check(I, j, n)


@pytest.mark.parametrize("parts,m", [((1,), 2), ((2, 1), 2), ((3, 2, 1), 3), ((4, 2, 1), 4)])
def test_branching(parts, m):
    ok, contributions = branch(parts, m)
    assert ok
    if parts == (1,):
        assert sorted(contributions) == [((), 1), ((1,), 0)]


class TestDecompose:
    def test_basis_element(self):
        assert ptilde_decompose(ptilde((2, 1), 3), 3, "D") == {(2, 1): P.one(3)}

    def test_schur_staircase_n2(self):
        out = ptilde_decompose(schur_S((1,), 2), 2, "D")
        assert out == {(1,): P.constant(2, 2)}

    @pytest.mark.parametrize("method", ["pairing", "linear"])
    @pytest.mark.parametrize("t", ["B", "D"])
    def test_reconstruction(self, method, t):
        n = 3
        f = elementary(1, n) * elementary(2, n) + elementary(3, n) ** 2
        out = ptilde_decompose(f, n, t, method)
        total = P.zero(n)
        for I, c in out.items():
            assert all(act(c, w) == c for w in bfs_lengths(t, n))
            total = total + c * ptilde(I, n)
        assert total == f

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(-3, 3)), max_size=4))
    def test_methods_agree(self, spec):
        n = 3
        f = P.zero(n)
        for a, b, c in spec:
            f = f + elementary(a, n) * elementary(b, n).scale(c)
        assert ptilde_decompose(f, n, "D", "pairing") == ptilde_decompose(f, n, "D", "linear")

    def test_rejects_non_symmetric(self):
        with pytest.raises(NotSymmetric):
            ptilde_decompose(P.var(2, 1), 2, "D")


class TestKernels:
    def test_n2(self):
        p1 = ptilde((1,), 2)
        expected = doubled(p1, 2) + p1.embed(4, offset=2)
        assert kernel_F(2, "D") == expected
        assert kernel_Ptilde(2, "D") == expected

    @pytest.mark.parametrize("t", ["B", "D"])
    @pytest.mark.parametrize("n", [2, 3])
    def test_F_congruent_to_Ptilde(self, t, n):
        assert congruent_mod_ideal(kernel_F(n, t) - kernel_Ptilde(n, t), t)

    def test_generators_of_the_ideal(self):
        n = 3
        xs = P.monomial(2 * n, (1, 1, 1, 0, 0, 0))
        ys = P.monomial(2 * n, (0, 0, 0, 1, 1, 1))
        assert congruent_mod_ideal(xs - ys, "D")
        assert not congruent_mod_ideal(P.var(2 * n, 1) - P.var(2 * n, n + 1), "D")

    @pytest.mark.parametrize("n", [2, 3])
    def test_vanishing_and_diagonal(self, n):
        from schubop.ptilde import substitute_orbit
        kernel = kernel_Ptilde(n, "D")
        for w in bfs_lengths("D", n):
            value = substitute_orbit(kernel, w, n)
            if w.negatives():
                assert value.is_zero()
            else:
                assert value == schur_S(staircase(n - 1), n)


def test_complement():
    assert complement((3, 1), 4) == (4, 2)
    assert complement((), 2) == (2, 1)
