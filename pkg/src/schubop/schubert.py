"""Schubert polynomials of type A, Schur polynomials, scalar products and the
orthogonal Schubert polynomials of types B and D."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Sequence

from .divdiff import apply_element, apply_word, word_nabla_B, word_partial_v
from .polyring import SparsePolynomial, act
from .ptilde import complement, is_strict, normalize, ptilde, staircase
from .weyl import (
    GroupType, SignedPermutation, code_inverse, compose, distinguished, inverse,
    involution_prime, length,
)

__all__ = [
    "rho", "in_staircase", "schubert_Y", "schur_S", "pair", "schubert_X", "v_of_I",
    "w_of_I", "grassmannian_element", "stability_check", "top_class", "dual_code",
    "NotInStaircase", "PAIRING_FORMS", "sign_of_top", "ptilde_dual", "act_omega", "in_coinvariant_ideal",
]

PAIRING_FORMS = ("A", "D_v", "D_full", "B_nabla", "B_full")


class NotInStaircase(ValueError):
    pass


def rho(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _pad(alpha: Sequence[int], n: int) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) > n:
        if any(alpha[n:]):
            raise NotInStaircase(f"{list(alpha)} has more than {n} entries")
        alpha = alpha[:n]
    return alpha + (0,) * (n - len(alpha))


def in_staircase(alpha: Sequence[int], n: int) -> bool:
    try:
        alpha = _pad(alpha, n)
    except NotInStaircase:
        return False
    return all(0 <= a <= r for a, r in zip(alpha, rho(n)))


@lru_cache(maxsize=None)
def _schubert(alpha: tuple[int, ...], n: int) -> SparsePolynomial:
    w = code_inverse(alpha, n)
    return apply_element(SparsePolynomial.monomial(n, rho(n)), compose(distinguished("A", n), w), "A")


def schubert_Y(alpha: Sequence[int], n: int, stable: bool = False) -> SparsePolynomial:
    """``Y_α = x^ρ ∂_{ω u}``, ``u`` the permutation with Lehmer code ``α``.

    With ``stable=True`` a code sticking out of the staircase is allowed: the
    polynomial is computed in a larger alphabet and only involves the first
    variables, so it is restricted back to ``x_1..x_n``.
    """
    padded = tuple(int(a) for a in alpha)
    if in_staircase(padded, n):
        return _schubert(_pad(padded, n), n)
    if not stable or any(a < 0 for a in padded):
        raise NotInStaircase(f"{list(alpha)} is not contained in rho({n})")
    big = max(n, max(i + 1 + a for i, a in enumerate(padded)))
    return _schubert(_pad(padded, big), big).truncate_alphabet(n)


def top_class(n: int) -> SparsePolynomial:
    return SparsePolynomial.monomial(n, rho(n))


def dual_code(alpha: Sequence[int], n: int) -> tuple[int, ...]:
    """``α ↦ α'``, the code of ``u ω`` when ``α`` is the code of ``u``."""
    return involution_prime(_pad(alpha, n), n)


def schur_S(parts: Sequence[int], k: int) -> SparsePolynomial:
    """Schur polynomial ``s_λ(x_1..x_k)`` via the Jacobi symmetrizer ``x^{λ+ρ} ∂_ω``."""
    parts = normalize(parts)
    if len(parts) > k:
        raise ValueError(f"{parts} has more than {k} parts")
    lam = parts + (0,) * (k - len(parts))
    exp = [a + r for a, r in zip(lam, rho(k))]
    return apply_element(SparsePolynomial.monomial(k, exp), distinguished("A", k), "A")


def pair(f: SparsePolynomial, g: SparsePolynomial, form: str, n: int | None = None) -> SparsePolynomial:
    """The scalar products ``fg∂_ω`` (``A``), ``fg∂_v`` (``D_v``), ``fg∂_{w_0^D}`` (``D_full``),
    ``fg∇_n^B(n)`` (``B_nabla``) and ``fg∂_{w_0^B}`` (``B_full``)."""
    n = f.n if n is None else n
    if f.n != n or g.n != n:
        raise ValueError("both arguments must live in x_1..x_n")
    product = f * g
    if form in ("D_v", "B_nabla"):
        if not (f.is_symmetric() and g.is_symmetric()):
            raise ValueError(f"the {form} pairing needs symmetric arguments")
        word = word_partial_v(n) if form == "D_v" else word_nabla_B(n, n)
        return apply_word(product, word)
    if form == "A":
        return apply_element(product, distinguished("A", n), "A")
    if form == "D_full":
        return apply_element(product, distinguished("D", n), "D")
    if form == "B_full":
        return apply_element(product, distinguished("B", n), "B")
    raise ValueError(f"unknown pairing {form!r}")


def _check_range(parts: Sequence[int], n: int, t: GroupType) -> tuple[int, ...]:
    parts = normalize(parts)
    bound = n - 1 if t is GroupType.D else n
    if not is_strict(parts) or (parts and parts[0] > bound):
        raise ValueError(f"{parts} is not a strict partition inside rho({bound})")
    return parts


def _complement_values(used: set[int], n: int) -> list[int]:
    return [j for j in range(1, n + 1) if j not in used]


def v_of_I(parts: Sequence[int], n: int, t) -> SignedPermutation:
    """The element whose divided difference carries ``x^ρ P̃_top`` to ``±P̃_I``."""
    t = GroupType.of(t)
    parts = _check_range(parts, n, t)
    if t is GroupType.B:
        js = _complement_values(set(parts), n)
        return SignedPermutation(parts + tuple(-j for j in js))
    head = [i + 1 for i in parts]
    if (n - len(parts)) % 2:
        head.append(1)
    js = _complement_values(set(head), n)
    return SignedPermutation(tuple(head) + tuple(-j for j in js))


def w_of_I(parts: Sequence[int], n: int, t) -> SignedPermutation:
    """``v(I)^{-1} w_0``: the unique element of length ``|I|`` not killing ``P̃_I``."""
    t = GroupType.of(t)
    return compose(inverse(v_of_I(parts, n, t)), distinguished(t, n))


def grassmannian_element(parts: Sequence[int], n: int, t) -> SignedPermutation:
    """The ``w`` with ``X_w = ±P̃_I``, namely ``w_0 v(I)``."""
    t = GroupType.of(t)
    return compose(distinguished(t, n), v_of_I(parts, n, t))


def schubert_X(w: SignedPermutation, t, n: int | None = None) -> SparsePolynomial:
    """Orthogonal Schubert polynomial ``x^ρ P̃_top ∂_{w_0 w}`` of degree ``ℓ(w)``."""
    t = GroupType.of(t)
    if t is GroupType.A:
        raise ValueError("orthogonal Schubert polynomials exist in types B and D")
    n = w.size if n is None else n
    if w.size != n:
        raise ValueError(f"{w} does not have size {n}")
    w.require(t)
    return _schubert_X(w, t)


@lru_cache(maxsize=None)
def _schubert_X(w: SignedPermutation, t: GroupType) -> SparsePolynomial:
    n = w.size
    top = staircase(n - 1 if t is GroupType.D else n)
    start = top_class(n) * ptilde(top, n)
    return apply_element(start, compose(distinguished(t, n), w), t)


def stability_check(w: SignedPermutation, t, n: int | None = None, mode: str = "literal") -> bool:
    """``X_w(n+1)`` at ``x_{n+1} = 0`` against ``X_w(n)``.

    ``mode="literal"`` compares the polynomials as defined; ``"normalized"``
    first rescales both by ``X_id = ±1``; ``"classes"`` compares the normalized
    polynomials modulo the ideal generated by invariants of positive degree.
    """
    t = GroupType.of(t)
    n = w.size if n is None else n
    bigger = SignedPermutation(w.image + (n + 1,))
    restricted = schubert_X(bigger, t).truncate_alphabet(n)
    own = schubert_X(w, t)
    if mode == "literal":
        return restricted == own
    difference = restricted.scale(sign_of_top(n + 1, t)) - own.scale(sign_of_top(n, t))
    if mode == "normalized":
        return difference.is_zero()
    if mode == "classes":
        return in_coinvariant_ideal(difference, t)
    raise ValueError(f"unknown mode {mode!r}")


def in_coinvariant_ideal(f: SparsePolynomial, t) -> bool:
    """Membership of a homogeneous ``f`` in the ideal spanned by positive-degree invariants.

    The pairing ``(f, g) -> f g ∂_{w_0}`` is perfect on the coinvariant
    algebra, so ``f`` lies in the ideal iff it pairs to zero with every
    monomial of complementary degree.
    """
    if f.is_zero():
        return True
    if not f.is_homogeneous():
        raise ValueError("expected a homogeneous polynomial")
    t = GroupType.of(t)
    n = f.n
    w0 = distinguished(t, n)
    rest = length(w0, t) - f.degree()
    if rest < 0:
        return True
    for exp in itertools.product(range(rest + 1), repeat=n):
        if sum(exp) == rest and not apply_element(f * SparsePolynomial.monomial(n, exp), w0, t).is_zero():
            return False
    return True


def sign_of_top(n: int, t) -> int:
    """``(-1)^C(n,2)`` in type D and ``(-1)^C(n+1,2)`` in type B."""
    k = n if GroupType.of(t) is GroupType.D else n + 1
    return -1 if math.comb(k, 2) % 2 else 1


def ptilde_dual(parts: Sequence[int], n: int, t) -> tuple[int, ...]:
    k = n - 1 if GroupType.of(t) is GroupType.D else n
    return complement(parts, k)


def act_omega(f: SparsePolynomial) -> SparsePolynomial:
    """``f^ω``: reverse the variables."""
    return act(f, distinguished("A", f.n))
