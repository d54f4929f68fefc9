import itertools
import math

import pytest
from hypothesis import given, strategies as st

from schubop.weyl import (
    HEART, MembershipError, SignedPermutation, bfs_lengths, code, code_inverse, compose,
    distinguished, enumerate_group, evaluate, format_word, generator, generators, identity,
    involution_prime, length, parse_word, reduced_word,
)

SP = SignedPermutation


def test_square_of_generator_is_identity():
    s1 = generator(1, 3)
    assert compose(s1, s1) == identity(3)


def test_heart_and_its_product_with_s1():
    heart = generator(HEART, 2)
    assert heart == SP((-2, -1))
    assert compose(heart, generator(1, 2)) == SP((-1, -2))
    assert compose(heart, generator(1, 2)) == distinguished("D", 2)


def test_heart_through_s0():
    assert evaluate([0, 1, 0], 3) == SP((-2, -1, 3))


@pytest.mark.parametrize("t,n,expected", [
    ("A", 3, 6), ("B", 2, 8), ("D", 3, 24), ("A", 4, 24), ("B", 4, 384), ("D", 4, 192),
])
def test_group_orders(t, n, expected):
    assert len(enumerate_group(t, n)) == expected


@pytest.mark.parametrize("t,n,which,image", [
    ("D", 3, "longest", (1, -2, -3)),
    ("D", 2, "upsilon", (-2, -1)),
    ("B", 3, "longest", (-1, -2, -3)),
])
def test_distinguished_elements(t, n, which, image):
    assert distinguished(t, n, which).image == image


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_longest_lengths(n):
    assert length(identity(n), "B") == 0
    assert length(distinguished("A", n), "A") == math.comb(n, 2)
    assert length(distinguished("B", n), "B") == n * n
    if n >= 2:
        assert length(distinguished("D", n), "D") == n * (n - 1)


def test_reduced_words_small():
    assert reduced_word(identity(3), "B") == ()
    assert reduced_word(SP((-2, -1)), "D") == (HEART,)
    word = reduced_word(distinguished("D", 4), "D")
    assert len(word) == 12
    assert evaluate(word, 4) == SP((-1, -2, -3, -4))


@pytest.mark.parametrize("t,n", [(t, n) for t in "ABD" for n in range(1, 5) if not (t == "D" and n < 2)])
def test_reduced_word_exhaustive(t, n):
    lengths = bfs_lengths(t, n)
    for w, ell in lengths.items():
        word = reduced_word(w, t)
        assert evaluate(word, n) == w
        assert len(word) == ell == length(w, t)
        for s in generators(t, n):
            assert abs(length(compose(w, generator(s, n)), t) - ell) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_coxeter_relations(n):
    def order(a, b):
        p = compose(generator(a, n), generator(b, n))
        power, k = p, 1
        while power != identity(n):
            power, k = compose(power, p), k + 1
        return k

    for i in range(1, n - 1):
        assert order(i, i + 1) == 3
    for i, j in itertools.combinations(range(1, n), 2):
        if j - i > 1:
            assert order(i, j) == 2
    assert order(0, 1) == 4
    for j in range(2, n):
        assert order(0, j) == 2
    if n >= 3:
        assert order(HEART, 2) == 3
    assert order(HEART, 1) == 2


def test_code_examples():
    assert code(identity(4)) == (0, 0, 0, 0)
    assert code(distinguished("A", 4)) == (3, 2, 1, 0)
    assert involution_prime((3, 2, 1, 0)) == (0, 0, 0, 0)


def _codes(n):
    return list(itertools.product(*[range(n - i) for i in range(n)]))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_code_round_trip(n):
    seen = set()
    for alpha in _codes(n):
        w = code_inverse(alpha, n)
        assert code(w) == alpha
        assert involution_prime(involution_prime(alpha, n), n) == alpha
        seen.add(w)
    assert len(seen) == math.factorial(n)


def test_membership():
    w = SP((-1, 2, 3))
    assert w.belongs_to("B") and not w.belongs_to("D") and not w.belongs_to("A")
    with pytest.raises(MembershipError):
        w.require("D")
    with pytest.raises(ValueError):
        SP((1, 1, 2))


def test_word_text_round_trip():
    word = parse_word("h 0 0c 1 2")
    assert format_word(word) == "h 0 0c 1 2"


@given(st.lists(st.sampled_from([0, 1, 2, 3]), max_size=12))
def test_length_bounded_by_word(word):
    w = evaluate(word, 4)
    assert length(w, "B") <= len(word)
    assert length(w, "B") % 2 == len(word) % 2
