"""Divided differences acting on the left: ``f ∂_a ∂_b`` applies ``∂_a`` first.

Letters follow :mod:`schubop.weyl`: ``i >= 1`` is Newton's ``∂_i``, ``0`` is
``∂_0 = (f - f^{s_0}) / (-x_1)``, ``HEART`` is ``∂_h = (f - f^{s_h}) / (-x_1 - x_2)``
and ``ZERO_C`` is ``∂_0^C = (f - f^{s_0}) / (2 x_1)``.

The simple operators are evaluated monomial by monomial from closed forms
(no polynomial division); :func:`apply_simple_by_division` is the literal
quotient, kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polyring import BITS, MASK, SparsePolynomial, act, exact_divide
from .weyl import (
    HEART, ZERO_C, GroupType, SignedPermutation, bfs_lengths, compose, distinguished,
    enumerate_group, evaluate, format_letter, generator, length, parse_letter,
    reduced_word,
)

__all__ = [
    "apply_simple", "apply_simple_by_division", "apply_word", "apply_element",
    "word_nabla_B", "word_nabla_D", "word_partial_v", "nabla_B", "nabla_D",
    "partial_v", "antisymmetrize", "delta", "PlanarDisplay", "parse_display",
    "row_reading", "column_reading", "congruent", "relation_14", "lemma1_check",
    "lemma1_sign",
    "tau", "omega_factorization_check",
]


def _newton(terms: dict[int, int], i: int) -> dict[int, int]:
    lo = BITS * (i - 1)
    hi = lo + BITS
    clear = ~((MASK << lo) | (MASK << hi))
    out: dict[int, int] = {}
    get = out.get
    for k, c in terms.items():
        a = (k >> lo) & MASK
        b = (k >> hi) & MASK
        if a == b:
            continue
        base = k & clear
        if a > b:
            for j in range(a - b):
                nk = base | ((a - 1 - j) << lo) | ((b + j) << hi)
                out[nk] = get(nk, 0) + c
        else:
            for j in range(b - a):
                nk = base | ((a + j) << lo) | ((b - 1 - j) << hi)
                out[nk] = get(nk, 0) - c
    return out


def _heart(terms: dict[int, int]) -> dict[int, int]:
    # ∂_h = -τ ∂_1 τ with τ: x_2 -> -x_2
    clear = ~((MASK) | (MASK << BITS))
    out: dict[int, int] = {}
    get = out.get
    for k, c in terms.items():
        a = k & MASK
        b = (k >> BITS) & MASK
        if a == b:
            continue
        base = k & clear
        if a > b:
            for j in range(a - b):
                q = b + j
                nk = base | (a - 1 - j) | (q << BITS)
                out[nk] = get(nk, 0) + (c if (b + q) & 1 else -c)
        else:
            for j in range(b - a):
                q = b - 1 - j
                nk = base | (a + j) | (q << BITS)
                out[nk] = get(nk, 0) - (c if (b + q) & 1 else -c)
    return out


def _zero(terms: dict[int, int], factor: int) -> dict[int, int]:
    # odd powers of x_1 survive: x_1^a -> factor * x_1^(a-1)
    return {k - 1: factor * c for k, c in terms.items() if k & 1}


def apply_simple(f: SparsePolynomial, letter: int) -> SparsePolynomial:
    if letter >= 1:
        if letter >= f.n:
            raise ValueError(f"∂_{letter} needs at least {letter + 1} variables")
        terms = _newton(f._terms, letter)
    elif letter == 0:
        terms = _zero(f._terms, -2)
    elif letter == ZERO_C:
        terms = _zero(f._terms, 1)
    elif letter == HEART:
        if f.n < 2:
            raise ValueError("∂_h needs at least 2 variables")
        terms = _heart(f._terms)
    else:
        raise ValueError(f"invalid letter {letter!r}")
    return SparsePolynomial._make(f.n, terms, f._shift)


def _simple_image(f: SparsePolynomial, letter: int) -> SparsePolynomial:
    n = f.n
    image = list(range(1, n + 1))
    if letter >= 1:
        image[letter - 1], image[letter] = image[letter], image[letter - 1]
    elif letter in (0, ZERO_C):
        image[0] = -1
    else:
        image[0], image[1] = -2, -1
    return act(f, image)


def apply_simple_by_division(f: SparsePolynomial, letter: int) -> SparsePolynomial:
    """``(f - f^s) / denominator`` computed with :func:`exact_divide`."""
    n = f.n
    x = [SparsePolynomial.var(n, i) for i in range(1, min(n, 2) + 1)]
    if letter >= 1:
        xi, xj = SparsePolynomial.var(n, letter), SparsePolynomial.var(n, letter + 1)
        den = xi - xj
    elif letter == 0:
        den = -x[0]
    elif letter == ZERO_C:
        den = x[0] * 2
    else:
        den = -(x[0] + x[1])
    return exact_divide(f - _simple_image(f, letter), den)


def apply_word(f: SparsePolynomial, word: Sequence[int]) -> SparsePolynomial:
    for letter in word:
        if f.is_zero():
            return f
        f = apply_simple(f, letter)
    return f


def apply_element(f: SparsePolynomial, w: SignedPermutation, t) -> SparsePolynomial:
    return apply_word(f, reduced_word(w, t))


def word_nabla_B(k: int, n: int) -> tuple[int, ...]:
    """``(∂_0 ∂_1 ... ∂_{n-1}) ... (∂_0 ∂_1 ... ∂_{n-k})``."""
    if not 0 <= k <= n:
        raise ValueError(f"nabla_B needs 0 <= k <= n, got k={k}, n={n}")
    word: list[int] = []
    for j in range(k):
        word.extend(range(0, n - j))
    return tuple(word)


def word_nabla_D(k: int, n: int) -> tuple[int, ...]:
    """Blocks ``(∂_h ∂_2 ... ∂_{m-1} ∂_1 ... ∂_{m-2})`` for ``m = n, n-2, ..., n-2k+2``."""
    if not 0 <= 2 * k <= n:
        raise ValueError(f"nabla_D needs 0 <= k <= n/2, got k={k}, n={n}")
    word: list[int] = []
    for j in range(1, k + 1):
        m = n - 2 * j + 2
        word.append(HEART)
        word.extend(range(2, m))
        word.extend(range(1, m - 1))
    return tuple(word)


def word_partial_v(n: int) -> tuple[int, ...]:
    # the displayed blocks stop at m = 2 (n even) or m = 3 (n odd)
    return word_nabla_D(n // 2, n)


def nabla_B(f: SparsePolynomial, k: int, n: int) -> SparsePolynomial:
    return apply_word(f, word_nabla_B(k, n))


def nabla_D(f: SparsePolynomial, k: int, n: int) -> SparsePolynomial:
    return apply_word(f, word_nabla_D(k, n))


def partial_v(f: SparsePolynomial, n: int) -> SparsePolynomial:
    return apply_word(f, word_partial_v(n))


def antisymmetrize(f: SparsePolynomial, t, n: int | None = None) -> SparsePolynomial:
    """``f Ω^W = Σ_w (-1)^{ℓ(w)} f^w``."""
    n = f.n if n is None else n
    result = SparsePolynomial.zero(f.n)
    for w, ell in bfs_lengths(t, n).items():
        term = act(f, w)
        result = result - term if ell % 2 else result + term
    return result


def delta(t, n: int) -> SparsePolynomial:
    t = GroupType.of(t)
    x = [SparsePolynomial.var(n, i) for i in range(1, n + 1)]
    result = SparsePolynomial.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            if t is GroupType.A:
                result = result * (x[i] - x[j])
            else:
                result = result * (x[j] * x[j] - x[i] * x[i])
    if t is GroupType.B:
        for xi in x:
            result = result * xi
    return result


def tau(i: int, n: int) -> SignedPermutation:
    """``τ_1 = s_0``, ``τ_i = s_{i-1} τ_{i-1} s_{i-1}`` (negates entry ``i``)."""
    t = generator(0, n)
    for j in range(2, i + 1):
        s = generator(j - 1, n)
        t = compose(compose(s, t), s)
    return t


def omega_factorization_check(f: SparsePolynomial, t) -> bool:
    """Both factorizations of ``Ω^B`` (or ``Ω^D``) through ``Ω^S`` on ``f``."""
    t = GroupType.of(t)
    n = f.n
    taus = [tau(i, n) for i in range(1, n + 1)]

    def product(g, sign):
        for tw in taus:
            g = g + act(g, tw) * sign
        return g

    target = antisymmetrize(f, t)
    if t is GroupType.B:
        left = product(antisymmetrize(f, "A"), -1)
        right = antisymmetrize(product(f, -1), "A")
    else:
        g = antisymmetrize(f, "A")
        left = (product(g, 1) + product(g, -1)).scale(Fraction(1, 2))
        right = antisymmetrize((product(f, 1) + product(f, -1)).scale(Fraction(1, 2)), "A")
    return left == target and right == target


def lemma1_sign(t, n: int) -> int:
    """Sign ``c`` with ``f Ω^W / Δ_W == c · f ∂_{w_0}``.

    With denominators ``-x_1`` and ``-x_1 - x_2`` the product of positive roots is
    ``Δ`` (type A), ``(-1)^n Δ^B`` and ``Δ^D``.
    """
    t = GroupType.of(t)
    if t is GroupType.B:
        return -1 if n % 2 else 1
    return 1


def lemma1_check(t, n: int, sign: int | None = None) -> bool:
    """``f Ω^W / Δ_W == sign · f ∂_{w_0}`` on every monomial of the free-module basis."""
    t = GroupType.of(t)
    if n > 4:
        raise ValueError("lemma1_check is limited to n <= 4")
    if t is GroupType.A:
        bounds = [n - 1 - i for i in range(n)]
    elif t is GroupType.B:
        bounds = [2 * n - 1 - 2 * i for i in range(n)]
    else:
        bounds = [2 * n - 2 - 2 * i for i in range(n)]
    sign = lemma1_sign(t, n) if sign is None else sign
    den = delta(t, n)
    w0 = distinguished(t, n)
    word = reduced_word(w0, t)

    def monomials(i):
        if i == n:
            yield ()
            return
        for a in range(bounds[i] + 1):
            for rest in monomials(i + 1):
                yield (a,) + rest

    for exp in monomials(0):
        f = SparsePolynomial.monomial(n, exp)
        lhs = exact_divide(antisymmetrize(f, t), den)
        if lhs != apply_word(f, word).scale(sign):
            return False
    return True


@dataclass(frozen=True)
class PlanarDisplay:
    """Rows of generator letters; ``offset`` counts leading empty cells."""

    rows: tuple[tuple[int, tuple[int, ...]], ...]

    def __str__(self):
        return "/".join(
            " ".join(["."] * off + [format_letter(x) for x in letters]) for off, letters in self.rows
        )


def parse_display(text: str) -> PlanarDisplay:
    """Parse ``"0 1 2 3/. 0 1 2/. . 0 1"``: rows split on ``/``, dots pad."""
    rows = []
    for chunk in text.split("/"):
        tokens = chunk.split()
        if not tokens:
            raise ValueError(f"empty row in display {text!r}")
        off = 0
        while off < len(tokens) and tokens[off] == ".":
            off += 1
        letters = tokens[off:]
        if not letters or "." in letters:
            raise ValueError(f"malformed display row {chunk!r}")
        rows.append((off, tuple(parse_letter(tok) for tok in letters)))
    return PlanarDisplay(tuple(rows))


def row_reading(d: PlanarDisplay) -> tuple[int, ...]:
    return tuple(x for _, letters in d.rows for x in letters)


def column_reading(d: PlanarDisplay) -> tuple[int, ...]:
    cells = {}
    for r, (off, letters) in enumerate(d.rows):
        for j, x in enumerate(letters):
            cells[(off + j, r)] = x
    return tuple(cells[key] for key in sorted(cells))


def _word_group(word: Sequence[int]) -> GroupType:
    if HEART in word:
        if 0 in word:
            raise ValueError("a word cannot mix s_0 and s_h")
        return GroupType.D
    if 0 in word:
        return GroupType.B
    return GroupType.A


def congruent(w1: Sequence[int], w2: Sequence[int], t=None, n: int | None = None,
              reduced: bool = True) -> bool:
    """Words are congruent iff they name the same element and (by default) are both reduced.

    With ``reduced=False`` only equality of the group elements is tested.
    """
    t = GroupType.of(t) if t is not None else _word_group(tuple(w1) + tuple(w2))
    letters = [x for x in (*w1, *w2) if x >= 1]
    n = n if n is not None else max(letters + [1]) + 1
    if ZERO_C in w1 or ZERO_C in w2:
        raise ValueError("0c is not a group generator")
    u, v = evaluate(w1, n), evaluate(w2, n)
    if u != v:
        return False
    if not reduced:
        return True
    return length(u, t) == len(w1) and length(v, t) == len(w2)


def relation_14(a: int, b: int, c: int, d: int, k: int) -> tuple[PlanarDisplay, PlanarDisplay]:
    """The two displays of the rectangle-shifting congruence.

    The rectangle has top row ``b..d`` and bottom row ``a..c``; the left display
    adds ``b+1..b+k`` above its first ``k`` columns, the right one adds
    ``a..a+k-1`` below columns ``2..k+1``.  For ``k = d - b`` the added bottom
    row is ``c-k..c-1``, flush right.
    """
    if not (1 <= a < b and a < c < d and a + d == b + c and 0 <= k <= d - b):
        raise ValueError(f"invalid parameters {(a, b, c, d, k)}")
    height = b - a + 1
    rect = [(0, tuple(range(b - r, d - r + 1))) for r in range(height)]
    left = ([(0, tuple(range(b + 1, b + k + 1)))] if k else []) + rect
    right = rect + ([(1, tuple(range(a, a + k)))] if k else [])
    return PlanarDisplay(tuple(left)), PlanarDisplay(tuple(right))
