"""Symmetric functions in countably many variables, truncated at a degree cap.

Elements are stored in the power-sum basis: a dict from partitions ``λ`` to
``Fraction`` coefficients of ``p_λ``.  Products silently drop everything of
degree above the cap.  The Hall scalar product is ``⟨p_λ, p_μ⟩ = z_λ δ_{λμ}``
and the Foulkes derivative ``D_f`` (adjoint of multiplication by ``f``) acts on
the right: ``g D_{p_k} = k ∂g/∂p_k``.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .divdiff import apply_word
from .dyadic import DyadicRational
from .polyring import BITS, SparsePolynomial, pack
from .weyl import ZERO_C
from .ptilde import elementary, normalize, pfaffian

__all__ = [
    "SymFunExpr", "partitions", "z_lambda", "generator", "sym_arith", "hall_pair",
    "foulkes_D", "vertex", "schur_PQ", "qtilde_sym", "realize", "power_sum",
    "complete", "q_poly", "schur_P_poly", "rectangle_word",
    "rectangle_apply", "d_coefficient", "partial_zero_C",
]


@lru_cache(maxsize=None)
def partitions(d: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``d`` (largest part first), in reverse lexicographic order."""
    if d == 0:
        return ((),)
    top = d if max_part is None else min(d, max_part)
    out = []
    for first in range(top, 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def z_lambda(lam: tuple[int, ...]) -> int:
    z = 1
    for part, mult in Counter(lam).items():
        z *= part ** mult * math.factorial(mult)
    return z


def _merge(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a + b, reverse=True))


class SymFunExpr:
    __slots__ = ("coeffs", "cap")

    def __init__(self, coeffs: Mapping[Sequence[int], object] | None = None, cap: int = 8):
        self.cap = cap
        clean: dict[tuple[int, ...], Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(sorted((int(p) for p in lam if p), reverse=True))
            if sum(lam) > cap:
                continue
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def constant(cls, c, cap: int) -> SymFunExpr:
        return cls({(): c}, cap)

    def degree(self) -> int:
        return max((sum(lam) for lam in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: SymFunExpr):
        if self.cap != other.cap:
            raise ValueError(f"degree caps {self.cap} and {other.cap} differ")

    def _lift(self, other) -> SymFunExpr | None:
        if isinstance(other, SymFunExpr):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SymFunExpr.constant(other, self.cap)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunExpr(out, self.cap)

    __radd__ = __add__

    def __neg__(self):
        return SymFunExpr({k: -v for k, v in self.coeffs.items()}, self.cap)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunExpr({k: v * other for k, v in self.coeffs.items()}, self.cap)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for a, ca in self.coeffs.items():
            da = sum(a)
            for b, cb in other.coeffs.items():
                if da + sum(b) > self.cap:
                    continue
                lam = _merge(a, b)
                out[lam] = out.get(lam, 0) + ca * cb
        return SymFunExpr(out, self.cap)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other) if not isinstance(other, SymFunExpr) else other
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def homogeneous(self, d: int) -> SymFunExpr:
        return SymFunExpr({k: v for k, v in self.coeffs.items() if sum(k) == d}, self.cap)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam in sorted(self.coeffs, key=lambda k: (sum(k), k)):
            c = self.coeffs[lam]
            mono = "*".join(f"p{k}" for k in lam)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def sym_arith(a: SymFunExpr, b: SymFunExpr, kind: str) -> SymFunExpr:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


@lru_cache(maxsize=None)
def _generator(kind: str, k: int, cap: int) -> SymFunExpr:
    if k < 0:
        return SymFunExpr({}, cap)
    if k == 0:
        return SymFunExpr.constant(1, cap)
    if kind == "p":
        return SymFunExpr({(k,): 1}, cap)
    out = {}
    for lam in partitions(k):
        if kind == "e":
            out[lam] = Fraction((-1) ** (k - len(lam)), z_lambda(lam))
        elif kind == "s_row":
            out[lam] = Fraction(1, z_lambda(lam))
        elif kind in ("q", "P_row"):
            if all(p % 2 for p in lam):
                out[lam] = Fraction(2 ** len(lam), z_lambda(lam))
        else:
            raise ValueError(f"unknown generator {kind!r}")
    f = SymFunExpr(out, cap)
    return f * Fraction(1, 2) if kind == "P_row" else f


def generator(kind: str, k: int, cap: int) -> SymFunExpr:
    """``p_k``, ``e_k``, one-row Schur ``s_k = h_k``, ``q_k`` or ``P_k = q_k/2``."""
    if k > cap:
        raise ValueError(f"degree {k} exceeds the cap {cap}")
    return _generator(kind, k, cap)


def hall_pair(a: SymFunExpr, b: SymFunExpr) -> Fraction:
    a._check(b)
    return sum((c * b.coeffs.get(lam, 0) * z_lambda(lam) for lam, c in a.coeffs.items()), Fraction(0))


def _derive_p(g: SymFunExpr, lam: tuple[int, ...]) -> SymFunExpr:
    """``g D_{p_λ}``: apply ``k ∂/∂p_k`` for every part ``k`` of ``λ``."""
    current = g.coeffs
    for k in lam:
        nxt: dict[tuple[int, ...], Fraction] = {}
        for mu, c in current.items():
            m = mu.count(k)
            if not m:
                continue
            rest = list(mu)
            rest.remove(k)
            key = tuple(rest)
            nxt[key] = nxt.get(key, 0) + c * k * m
        current = nxt
    return SymFunExpr(current, g.cap)


def foulkes_D(f: SymFunExpr, g: SymFunExpr) -> SymFunExpr:
    """``g D_f``, the adjoint of multiplication by ``f`` applied to ``g``."""
    f._check(g)
    out = SymFunExpr({}, g.cap)
    for lam, c in f.coeffs.items():
        out = out + _derive_p(g, lam) * c
    return out


_VERTEX = {"Us": ("P_row", "s_row"), "Ue": ("P_row", "e"), "Ve": ("e", "P_row")}


def vertex(kind: str, f: SymFunExpr) -> SymFunExpr:
    """``f ↦ Σ_k (-1)^k (f D_{a_k}) b_k`` for ``U^s`` (a=P, b=s), ``U^e`` (a=P, b=e)
    and ``V^e`` (a=e, b=P)."""
    try:
        derive, multiply = _VERTEX[kind]
    except KeyError:
        raise ValueError(f"unknown vertex operator {kind!r}") from None
    cap = f.cap
    total = SymFunExpr(f.coeffs, cap)
    for k in range(1, f.degree() + 1):
        term = foulkes_D(generator(derive, k, cap), f)
        if term.is_zero():
            continue
        term = term * generator(multiply, k, cap)
        total = total - term if k % 2 else total + term
    return total


def _pair_entry(gen, i: int, j: int, cap: int) -> SymFunExpr:
    out = gen(i) * gen(j)
    for p in range(1, j + 1):
        term = gen(i + p) * gen(j - p)
        out = out + term * (2 if p % 2 == 0 else -2)
    return out


def _pfaffian_family(parts: tuple[int, ...], gen, cap: int) -> SymFunExpr:
    if not parts:
        return SymFunExpr.constant(1, cap)
    padded = parts + (0,) if len(parts) % 2 else parts
    return pfaffian(lambda p, q: _pair_entry(gen, padded[p], padded[q], cap), len(padded))


def schur_PQ(parts: Sequence[int], cap: int, kind: str = "P") -> SymFunExpr:
    """Schur ``Q_I`` (Pfaffian built on ``q_k``) or ``P_I = 2^{-ℓ} Q_I``."""
    parts = normalize(parts)
    if sum(parts) > cap:
        raise ValueError(f"|I| = {sum(parts)} exceeds the cap {cap}")
    q = _pfaffian_family(parts, lambda k: _generator("q", k, cap), cap)
    if kind == "Q":
        return q
    if kind == "P":
        return q * Fraction(1, 2 ** len(parts))
    raise ValueError(f"unknown kind {kind!r}")


def qtilde_sym(parts: Sequence[int], cap: int) -> SymFunExpr:
    """``Q̃_I`` as a symmetric function: the same Pfaffian built on ``e_k``."""
    parts = normalize(parts)
    return _pfaffian_family(parts, lambda k: _generator("e", k, cap), cap)


# finite alphabets


@lru_cache(maxsize=None)
def power_sum(k: int, n: int) -> SparsePolynomial:
    return SparsePolynomial._make(n, {k << (BITS * i): 1 for i in range(n)} if k else {0: n}, 0)


@lru_cache(maxsize=None)
def _p_monomial(lam: tuple[int, ...], n: int) -> SparsePolynomial:
    if not lam:
        return SparsePolynomial.one(n)
    return _p_monomial(lam[1:], n) * power_sum(lam[0], n)


def realize(f: SymFunExpr, n: int) -> SparsePolynomial:
    """Specialize ``p_k -> x_1^k + ... + x_n^k``; the result must have dyadic coefficients."""
    den = 1
    for c in f.coeffs.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    acc = SparsePolynomial.zero(n)
    for lam, c in f.coeffs.items():
        acc = acc + _p_monomial(lam, n) * int(c * den)
    scale = Fraction(1, den)
    out = {}
    for exp, c in acc.terms().items():
        out[exp] = DyadicRational.coerce(c.as_fraction() * scale)
    return SparsePolynomial(n, out)


@lru_cache(maxsize=None)
def complete(k: int, n: int) -> SparsePolynomial:
    """Complete homogeneous ``h_k(x_1..x_n)`` by the recursion on the last variable."""
    if k < 0:
        return SparsePolynomial.zero(n)
    out = {}
    for exp in _compositions(k, n):
        out[pack(exp)] = 1
    return SparsePolynomial._make(n, out, 0, normalized=True)


def _compositions(k: int, n: int) -> Iterable[list[int]]:
    if n == 1:
        yield [k]
        return
    for a in range(k, -1, -1):
        for rest in _compositions(k - a, n - 1):
            yield [a] + rest


@lru_cache(maxsize=None)
def q_poly(k: int, n: int) -> SparsePolynomial:
    """``q_k(x_1..x_n) = Σ_j e_j h_{k-j}``."""
    if k < 0:
        return SparsePolynomial.zero(n)
    out = SparsePolynomial.zero(n)
    for j in range(min(k, n) + 1):
        out = out + elementary(j, n) * complete(k - j, n)
    return out


@lru_cache(maxsize=None)
def _schur_Q_poly(parts: tuple[int, ...], n: int) -> SparsePolynomial:
    if not parts:
        return SparsePolynomial.one(n)
    padded = parts + (0,) if len(parts) % 2 else parts

    def entry(p, q):
        i, j = padded[p], padded[q]
        out = q_poly(i, n) * q_poly(j, n)
        for s in range(1, j + 1):
            term = q_poly(i + s, n) * q_poly(j - s, n)
            out = out + term * (2 if s % 2 == 0 else -2)
        return out

    return pfaffian(entry, len(padded))


def schur_P_poly(parts: Sequence[int], n: int) -> SparsePolynomial:
    """Schur ``P_I(x_1..x_n)`` for any sequence of positive parts (Pfaffian definition)."""
    parts = tuple(int(p) for p in parts if p)
    return _schur_Q_poly(parts, n).scale(Fraction(1, 2 ** len(parts)))


def partial_zero_C(f: SparsePolynomial) -> SparsePolynomial:
    return apply_word(f, [ZERO_C])


def rectangle_word(q: int, r: int) -> tuple[int, ...]:
    """Rows ``∂_q..∂_{q+r-1}`` down to ``∂_1..∂_r``, read top row first."""
    word: list[int] = []
    for top in range(q, 0, -1):
        word.extend(range(top, top + r))
    return tuple(word)


def rectangle_apply(f: SparsePolynomial, q: int, r: int) -> SparsePolynomial:
    if q < 1 or r < 1 or q + r != f.n:
        raise ValueError("need 0 < q < n and q + r = n")
    return apply_word(f, rectangle_word(q, r))


def d_coefficient(q: int, r: int, k: int, h: int) -> int:
    """Scalar in front of ``P_{IJ}`` when the rectangle is applied to ``P_I P_J Π(x_i+x_j)``."""
    n = q + r
    if not (0 < q < n and 0 <= k <= q and 0 <= h <= r):
        raise ValueError(f"invalid parameters q={q} r={r} k={k} h={h}")
    if (q - k) * (r - h) % 2:
        return 0
    sign = -1 if (q - k) * r % 2 else 1
    return sign * math.comb((n - k - h) // 2, (q - k) // 2)
