"""Q-tilde and P-tilde polynomials, their kernels, and expansions in the P-tilde basis.

``Q̃_i = e_i(x_1..x_n)``, ``Q̃_{i,j} = Q̃_i Q̃_j + 2 Σ_{p=1}^{j} (-1)^p Q̃_{i+p} Q̃_{j-p}``,
``Q̃_I`` is the Pfaffian of ``(Q̃_{i_p, i_q})`` (a zero part is appended for odd
length) and ``P̃_I = 2^{-ℓ(I)} Q̃_I``.

Partitions are plain tuples of parts in decreasing order.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import sympy

from .divdiff import apply_word, word_nabla_B, word_partial_v
from .polyring import BITS, MASK, SparsePolynomial, act, pack
from .weyl import GroupType, bfs_lengths

__all__ = [
    "elementary", "qtilde_pair", "qtilde", "ptilde", "pfaffian", "strict_partitions",
    "complement", "normalize", "is_strict", "branch", "factorization_check",
    "ptilde_decompose", "kernel_F", "kernel_Ptilde", "kernel_reproducing_B",
    "kernel_reproducing_D", "congruent_mod_ideal", "substitute_orbit", "staircase",
    "NotSymmetric",
]


class NotSymmetric(ValueError):
    pass


def normalize(parts: Iterable[int]) -> tuple[int, ...]:
    """Drop zero parts; the remaining parts must be weakly decreasing."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    positive = tuple(p for p in parts if p)
    if any(a < b for a, b in zip(positive, positive[1:])):
        raise ValueError(f"{parts} is not a partition")
    return positive


def is_strict(parts: Sequence[int]) -> bool:
    parts = normalize(parts)
    return all(a > b for a, b in zip(parts, parts[1:]))


def staircase(k: int) -> tuple[int, ...]:
    """``ρ(k) = (k, k-1, ..., 1)``."""
    return tuple(range(k, 0, -1))


def strict_partitions(k: int) -> list[tuple[int, ...]]:
    """All strict partitions contained in ``ρ(k)``, by size then lexicographically."""
    out = []
    for r in range(k + 1):
        for combo in itertools.combinations(range(k, 0, -1), r):
            out.append(combo)
    out.sort(key=lambda I: (sum(I), I))
    return out


def complement(parts: Sequence[int], k: int) -> tuple[int, ...]:
    """``ρ(k) ∖ I``: the parts of ``{k, ..., 1}`` not in ``I``."""
    parts = normalize(parts)
    if not is_strict(parts) or (parts and parts[0] > k):
        raise ValueError(f"{parts} is not a strict partition inside rho({k})")
    return tuple(p for p in range(k, 0, -1) if p not in parts)


@lru_cache(maxsize=None)
def elementary(m: int, n: int) -> SparsePolynomial:
    if m < 0 or m > n:
        return SparsePolynomial.zero(n)
    terms = {}
    for combo in itertools.combinations(range(n), m):
        terms[sum(1 << (BITS * i) for i in combo)] = 1
    return SparsePolynomial._make(n, terms, 0, normalized=True)


@lru_cache(maxsize=None)
def qtilde_pair(i: int, j: int, n: int) -> SparsePolynomial:
    if i < j or j < 0:
        raise ValueError(f"Q̃_(i,j) needs i >= j >= 0, got ({i}, {j})")
    result = elementary(i, n) * elementary(j, n)
    for p in range(1, j + 1):
        term = elementary(i + p, n) * elementary(j - p, n)
        result = result + (term * 2 if p % 2 == 0 else term * -2)
    return result


def pfaffian(entry, size: int):
    """Pfaffian of the skew matrix with upper entries ``entry(p, q)`` (0-based, ``p < q``).

    Recursive expansion along the first row with memoisation on the set of
    remaining indices.
    """
    if size % 2:
        raise ValueError("Pfaffian of an odd-size matrix")

    @lru_cache(maxsize=None)
    def pf(rest: tuple[int, ...]):
        if not rest:
            return 1
        first = rest[0]
        total = None
        for pos in range(1, len(rest)):
            sub = pf(rest[1:pos] + rest[pos + 1:])
            term = entry(first, rest[pos]) * sub
            if pos % 2 == 0:
                term = -term
            total = term if total is None else total + term
        return total

    return pf(tuple(range(size)))


@lru_cache(maxsize=None)
def _qtilde_pfaffian(parts: tuple[int, ...], n: int) -> SparsePolynomial:
    if not parts:
        return SparsePolynomial.one(n)
    padded = parts + (0,) if len(parts) % 2 else parts
    if len(padded) == 2:
        return qtilde_pair(padded[0], padded[1], n)
    # expansion along the first row reuses the cached smaller Pfaffians
    total = SparsePolynomial.zero(n)
    for pos in range(1, len(padded)):
        rest = padded[1:pos] + padded[pos + 1:]
        sub = _qtilde_pfaffian(tuple(p for p in rest if p), n)
        if sub.is_zero():
            continue
        term = qtilde_pair(padded[0], padded[pos], n) * sub
        total = total - term if pos % 2 == 0 else total + term
    return total


@lru_cache(maxsize=None)
def _qtilde_recursion(parts: tuple[int, ...], n: int) -> SparsePolynomial:
    ell = len(parts)
    if ell == 0:
        return SparsePolynomial.one(n)
    if ell == 1:
        return elementary(parts[0], n)
    total = SparsePolynomial.zero(n)
    if ell % 2:
        for j in range(ell):
            term = elementary(parts[j], n) * _qtilde_recursion(parts[:j] + parts[j + 1:], n)
            total = total - term if j % 2 else total + term
    else:
        for j in range(1, ell):
            rest = parts[1:j] + parts[j + 1:]
            term = qtilde_pair(parts[0], parts[j], n) * _qtilde_recursion(rest, n)
            total = total - term if j % 2 == 0 else total + term
    return total


def qtilde(parts: Sequence[int], n: int, method: str = "pfaffian") -> SparsePolynomial:
    parts = normalize(parts)
    if method == "pfaffian":
        return _qtilde_pfaffian(parts, n)
    if method == "recursion":
        return _qtilde_recursion(parts, n)
    raise ValueError(f"unknown method {method!r}")


def ptilde(parts: Sequence[int], n: int) -> SparsePolynomial:
    parts = normalize(parts)
    return qtilde(parts, n).scale(Fraction(1, 2 ** len(parts)))


def branch(parts: Sequence[int], m: int) -> tuple[bool, list[tuple[tuple[int, ...], int]]]:
    """Check ``Q̃_I(x_1..x_m) = Σ_j x_m^j Σ_{|I|-|J|=j} Q̃_J(x_1..x_{m-1})``.

    ``J`` runs over (not necessarily strict) partitions obtained by removing at
    most one box from each row of ``I``.  Returns the verdict and the
    contributing ``(J, j)`` pairs.
    """
    parts = normalize(parts)
    if m < 1:
        raise ValueError("m must be positive")
    lhs = qtilde(parts, m)
    contributions = []
    rhs = SparsePolynomial.zero(m)
    xm = SparsePolynomial.var(m, m)
    for drops in itertools.product((0, 1), repeat=len(parts)):
        J = tuple(p - d for p, d in zip(parts, drops))
        if any(a < b for a, b in zip(J, J[1:])):
            continue
        j = sum(drops)
        contributions.append((normalize(J), j))
        if m == 1:
            sub = SparsePolynomial.one(1) if not normalize(J) else SparsePolynomial.zero(1)
        else:
            sub = qtilde(J, m - 1).embed(m)
        rhs = rhs + sub * xm ** j
    return lhs == rhs, contributions


def factorization_check(parts: Sequence[int], j: int, n: int) -> bool:
    """``Q̃_{I'} = Q̃_{j,j} Q̃_I`` where ``I'`` inserts a doubled part ``j`` into ``I``."""
    parts = normalize(parts)
    doubled = tuple(sorted(parts + (j, j), reverse=True))
    return qtilde(doubled, n) == qtilde_pair(j, j, n) * qtilde(parts, n)


# expansion in the P̃ basis


def _check_symmetric(f: SparsePolynomial, n: int):
    if f.n != n or not f.is_symmetric():
        raise NotSymmetric("expected a symmetric polynomial in x_1..x_n")


def _basis_data(n: int, t) -> tuple[int, tuple[int, ...], int]:
    t = GroupType.of(t)
    if t is GroupType.D:
        k = n - 1
        sign = -1 if math.comb(n, 2) % 2 else 1
    else:
        k = n
        sign = -1 if math.comb(n + 1, 2) % 2 else 1
    return k, staircase(k), sign


def pairing_symmetric(f: SparsePolynomial, g: SparsePolynomial, n: int, t) -> SparsePolynomial:
    """``⟨f, g⟩ = f g ∂_v`` (type D) or ``f g ∇_n^B(n)`` (type B)."""
    t = GroupType.of(t)
    word = word_partial_v(n) if t is GroupType.D else word_nabla_B(n, n)
    return apply_word(f * g, word)


def _decompose_pairing(f: SparsePolynomial, n: int, t) -> dict[tuple[int, ...], SparsePolynomial]:
    k, _, sign = _basis_data(n, t)
    out = {}
    for I in strict_partitions(k):
        c = pairing_symmetric(f, ptilde(complement(I, k), n), n, t)
        if not c.is_zero():
            out[I] = c.scale(sign)
    return out


def _partitions_of(d: int, max_part: int | None = None, max_len: int | None = None):
    if d == 0:
        yield ()
        return
    if max_len == 0:
        return
    top = d if max_part is None else min(d, max_part)
    for first in range(top, 0, -1):
        for rest in _partitions_of(d - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _invariant_basis(d: int, n: int, t: GroupType) -> tuple[SparsePolynomial, ...]:
    """A Z[1/2]-basis of the degree-``d`` invariants of type ``t`` in ``n`` variables."""
    squares = [
        elementary(j, n).map_monomials(lambda e: (1, [2 * a for a in e])) for j in range(1, n + 1)
    ]
    out = []
    top_odd = [0, 1] if t is GroupType.D else [0]
    for b in top_odd:
        rest = d - b * n
        if rest < 0 or rest % 2:
            continue
        for lam in _partitions_of(rest // 2, n):
            g = elementary(n, n) ** b
            for part in lam:
                g = g * squares[part - 1]
            out.append(g)
    return tuple(out)


def _dominant_coords(f: SparsePolynomial) -> dict[int, Fraction]:
    n = f.n
    out = {}
    for key, c in f._terms.items():
        exp = [(key >> (BITS * i)) & MASK for i in range(n)]
        if all(a >= b for a, b in zip(exp, exp[1:])):
            out[key] = Fraction(c, 1 << f._shift)
    return out


def _decompose_linear(f: SparsePolynomial, n: int, t) -> dict[tuple[int, ...], SparsePolynomial]:
    t = GroupType.of(t)
    k, _, _ = _basis_data(n, t)
    result: dict[tuple[int, ...], SparsePolynomial] = {}
    by_degree: dict[int, dict[int, int]] = {}
    for key, c in f._terms.items():
        d = sum((key >> (BITS * i)) & MASK for i in range(n))
        by_degree.setdefault(d, {})[key] = c
    for d, terms in sorted(by_degree.items()):
        fd = SparsePolynomial._make(n, terms, f._shift)
        columns = []
        labels = []
        for I in strict_partitions(k):
            if sum(I) > d:
                continue
            p = ptilde(I, n)
            for g in _invariant_basis(d - sum(I), n, t):
                columns.append(_dominant_coords(g * p))
                labels.append((I, g))
        rows = sorted(set().union(*columns, _dominant_coords(fd))) if columns else []
        target = _dominant_coords(fd)
        if not columns:
            if target:
                raise NotSymmetric("no basis elements in this degree")
            continue
        A = sympy.Matrix([[col.get(r, 0) for col in columns] for r in rows])
        b = sympy.Matrix([target.get(r, 0) for r in rows])
        sol = A.LUsolve(b) if A.shape[0] == A.shape[1] else A.solve_least_squares(b)
        for (I, g), value in zip(labels, sol):
            value = Fraction(int(sympy.fraction(value)[0]), int(sympy.fraction(value)[1]))
            if value:
                result[I] = result.get(I, SparsePolynomial.zero(n)) + g.scale(value)
    return {I: c for I, c in result.items() if not c.is_zero()}


def ptilde_decompose(f: SparsePolynomial, n: int, t, method: str = "pairing"):
    """Coefficients ``c_I`` (invariants of type ``t``) with ``f = Σ c_I P̃_I``.

    ``method="pairing"`` extracts ``c_I`` through the duality of the P̃ basis;
    ``method="linear"`` solves for the coefficients in the monomial symmetric
    coordinates, which is much cheaper for large ``n``.
    """
    _check_symmetric(f, n)
    if method == "pairing":
        return _decompose_pairing(f, n, t)
    if method == "linear":
        out = _decompose_linear(f, n, t)
        check = SparsePolynomial.zero(n)
        for I, c in out.items():
            check = check + c * ptilde(I, n)
        if check != f:
            raise ArithmeticError("P̃ expansion failed to reconstruct the input")
        return out
    raise ValueError(f"unknown method {method!r}")


# kernels over the doubled alphabet x_1..x_n, y_1..y_n


def _in_x(f: SparsePolynomial, n: int) -> SparsePolynomial:
    return f.embed(2 * n)


def _in_y(f: SparsePolynomial, n: int) -> SparsePolynomial:
    return f.embed(2 * n, offset=n)


def _determinant(matrix: list[list[SparsePolynomial]], size: int, m: int) -> SparsePolynomial:
    if size == 0:
        return SparsePolynomial.one(m)

    @lru_cache(maxsize=None)
    def det(cols: tuple[int, ...]) -> SparsePolynomial:
        row = size - len(cols)
        if not cols:
            return SparsePolynomial.one(m)
        total = SparsePolynomial.zero(m)
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            term = entry * det(cols[:pos] + cols[pos + 1:])
            total = total - term if pos % 2 else total + term
        return total

    return det(tuple(range(size)))


def kernel_F(n: int, t) -> SparsePolynomial:
    """Fulton's determinant ``|P̃_{m}(X) + P̃_{m}(Y)|`` with ``P̃_0 := 1/2``-sums giving 1."""
    t = GroupType.of(t)
    size = n - 1 if t is GroupType.D else n
    offset = n if t is GroupType.D else n + 1
    m = 2 * n
    matrix = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            deg = offset + j - 2 * i
            if deg < 0:
                row.append(SparsePolynomial.zero(m))
            elif deg == 0:
                row.append(SparsePolynomial.one(m))
            else:
                p = ptilde((deg,), n)
                row.append(_in_x(p, n) + _in_y(p, n))
        matrix.append(row)
    return _determinant(matrix, size, m)


def kernel_Ptilde(n: int, t) -> SparsePolynomial:
    """``Σ_I P̃_I(X) P̃_{ρ∖I}(Y)`` over strict ``I`` inside ``ρ(n-1)`` (D) or ``ρ(n)`` (B)."""
    k, _, _ = _basis_data(n, t)
    total = SparsePolynomial.zero(2 * n)
    for I in strict_partitions(k):
        total = total + _in_x(ptilde(I, n), n) * _in_y(ptilde(complement(I, k), n), n)
    return total


def substitute_orbit(f: SparsePolynomial, w, n: int) -> SparsePolynomial:
    """Specialize ``Y := X^w``: ``x_i -> x_i`` and ``y_i -> sign(w(i)) x_|w(i)|``."""
    image = tuple(getattr(w, "image", w))
    if f.n != 2 * n or len(image) != n:
        raise ValueError("expected a polynomial over the doubled alphabet")
    out: dict[int, int] = {}
    for key, c in f._terms.items():
        exp = [(key >> (BITS * i)) & MASK for i in range(2 * n)]
        new = exp[:n]
        sign = 1
        for i in range(n):
            a = exp[n + i]
            if a:
                target = image[i]
                new[abs(target) - 1] += a
                if target < 0 and a & 1:
                    sign = -sign
        nk = pack(new)
        out[nk] = out.get(nk, 0) + sign * c
    return SparsePolynomial._make(n, out, f._shift)


def congruent_mod_ideal(f: SparsePolynomial, t) -> bool:
    """Vanishing of ``f(X, Y)`` under every specialization ``Y := X^w``, ``w`` in the group.

    This is the operational meaning of congruence modulo the ideal relating the
    symmetric functions of ``X^2`` and ``Y^2`` (plus ``x_1...x_n = y_1...y_n``
    in type D).
    """
    if f.n % 2:
        raise ValueError("expected a polynomial over the doubled alphabet")
    n = f.n // 2
    return all(substitute_orbit(f, w, n).is_zero() for w in bfs_lengths(t, n))


def kernel_reproducing_D(n: int) -> SparsePolynomial:
    """``Π_{n>=i>j>=1} (x_i - y_j) F(X, Y)``, the kernel for ``[f, g] = f g ∂_{w_0^D}``."""
    return _vandermonde_xy(n) * kernel_F(n, "D")


def kernel_reproducing_B(n: int) -> SparsePolynomial:
    return _vandermonde_xy(n) * kernel_F(n, "B")


def _vandermonde_xy(n: int) -> SparsePolynomial:
    m = 2 * n
    out = SparsePolynomial.one(m)
    for i in range(1, n + 1):
        for j in range(1, i):
            out = out * (SparsePolynomial.var(m, i) - SparsePolynomial.var(m, n + j))
    return out


def ptilde_at(parts: Sequence[int], n: int, w) -> SparsePolynomial:
    """``P̃_I(X^w)``."""
    return act(ptilde(parts, n), w)
