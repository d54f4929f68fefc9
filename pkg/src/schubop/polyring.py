"""Sparse multivariate polynomials over Z[1/2].

Monomials are packed into a single Python int (16 bits per exponent) so that
multiplying two monomials is an integer addition.  Coefficients share a common
power-of-two denominator: a polynomial is ``sum(c * x^a) / 2**shift`` with
integer ``c``.  The public surface only ever speaks exponent tuples and
:class:`DyadicRational` values.

The canonical monomial order (used for printing, JSON and leading terms) is
graded reverse-lexicographic with ``x1 > x2 > ... > xn``.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .dyadic import DyadicRational, NonDyadicError, split_power_of_two

__all__ = [
    "SparsePolynomial",
    "AlphabetMismatch",
    "NonDivisible",
    "TermLimitExceeded",
    "arith",
    "act",
    "exact_divide",
    "grevlex_key",
]

BITS = 16
MASK = (1 << BITS) - 1
MAX_DEGREE = MASK


class AlphabetMismatch(ValueError):
    pass


class NonDivisible(ArithmeticError):
    pass


class TermLimitExceeded(MemoryError):
    pass


def pack(exp: Sequence[int]) -> int:
    key = 0
    for i, a in enumerate(exp):
        if a < 0 or a > MAX_DEGREE:
            raise ValueError(f"exponent {a} out of range")
        key |= a << (BITS * i)
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (BITS * i)) & MASK for i in range(n))


def grevlex_key(exp: Sequence[int]):
    """Sort key; larger key means larger monomial in grevlex."""
    return (sum(exp), tuple(-a for a in reversed(exp)))


def _term_limit() -> int | None:
    raw = os.environ.get("SCHUBOP_MAX_TERMS")
    return int(raw) if raw else None


def _scale_terms(terms: dict[int, int], bits: int) -> dict[int, int]:
    if bits == 0:
        return terms
    return {k: c << bits for k, c in terms.items()}


class SparsePolynomial:
    __slots__ = ("n", "_terms", "_shift", "__dict__")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object] | None = None):
        if n < 1:
            raise ValueError("alphabet size must be positive")
        self.n = n
        raw: dict[int, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise AlphabetMismatch(f"exponent {exp} has length {len(exp)}, expected {n}")
            value = DyadicRational.coerce(c).as_fraction() if not isinstance(c, int) else Fraction(c)
            key = pack(exp)
            raw[key] = raw.get(key, Fraction(0)) + value
        shift = max((split_power_of_two(v.denominator)[1] for v in raw.values()), default=0)
        ints = {k: int(v * (1 << shift)) for k, v in raw.items() if v}
        self._terms, self._shift = _normalize(ints, shift)

    @classmethod
    def _make(cls, n: int, terms: dict[int, int], shift: int = 0, normalized: bool = False):
        obj = object.__new__(cls)
        obj.n = n
        if not normalized:
            terms = {k: c for k, c in terms.items() if c}
            terms, shift = _normalize(terms, shift)
        obj._terms = terms
        obj._shift = shift
        limit = _term_limit()
        if limit is not None and len(terms) > limit:
            raise TermLimitExceeded(f"{len(terms)} terms exceeds SCHUBOP_MAX_TERMS={limit}")
        return obj

    # construction helpers

    @classmethod
    def zero(cls, n: int) -> SparsePolynomial:
        return cls._make(n, {}, 0, normalized=True)

    @classmethod
    def constant(cls, n: int, c=1) -> SparsePolynomial:
        return cls(n, {(0,) * n: c})

    @classmethod
    def one(cls, n: int) -> SparsePolynomial:
        return cls._make(n, {0: 1}, 0, normalized=True)

    @classmethod
    def var(cls, n: int, i: int) -> SparsePolynomial:
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= n:
            raise AlphabetMismatch(f"x{i} is not in an alphabet of size {n}")
        return cls._make(n, {1 << (BITS * (i - 1)): 1}, 0, normalized=True)

    @classmethod
    def monomial(cls, n: int, exp: Sequence[int], c=1) -> SparsePolynomial:
        if len(exp) != n:
            raise AlphabetMismatch(f"exponent {tuple(exp)} has length {len(exp)}, expected {n}")
        return cls(n, {tuple(exp): c})

    # inspection

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def terms(self) -> dict[tuple[int, ...], DyadicRational]:
        return {unpack(k, self.n): DyadicRational(c, -self._shift) for k, c in self._terms.items()}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], DyadicRational]]:
        items = list(self.terms().items())
        items.sort(key=lambda item: grevlex_key(item[0]), reverse=True)
        return items

    def coeff(self, exp: Sequence[int]) -> DyadicRational:
        return DyadicRational(self._terms.get(pack(exp), 0), -self._shift)

    def constant_term(self) -> DyadicRational:
        return DyadicRational(self._terms.get(0, 0), -self._shift)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(unpack(k, self.n)) for k in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(unpack(k, self.n)) for k in self._terms}) <= 1

    def leading_term(self) -> tuple[tuple[int, ...], DyadicRational]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    # arithmetic

    def _check(self, other: SparsePolynomial):
        if self.n != other.n:
            raise AlphabetMismatch(f"alphabet sizes {self.n} and {other.n} differ")

    def _coerce(self, other) -> SparsePolynomial | None:
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, DyadicRational)):
            return SparsePolynomial.constant(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        shift = max(self._shift, other._shift)
        out = _scale_terms(self._terms, shift - self._shift)
        if out is self._terms:
            out = dict(out)
        get = out.get
        b = other._terms if shift == other._shift else _scale_terms(other._terms, shift - other._shift)
        for k, c in b.items():
            out[k] = get(k, 0) + c
        return SparsePolynomial._make(self.n, out, shift)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial._make(self.n, {k: -c for k, c in self._terms.items()}, self._shift, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, DyadicRational)):
            return self.scale(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check(other)
        if not self._terms or not other._terms:
            return SparsePolynomial.zero(self.n)
        if self.degree() + other.degree() > MAX_DEGREE:
            raise OverflowError("degree exceeds packed exponent range")
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return SparsePolynomial._make(self.n, out, self._shift + other._shift)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, DyadicRational)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> SparsePolynomial:
        c = DyadicRational.coerce(c)
        if not c:
            return SparsePolynomial.zero(self.n)
        m, e = c.mantissa, c.exponent
        if e >= 0:
            terms = {k: v * (m << e) for k, v in self._terms.items()}
            return SparsePolynomial._make(self.n, terms, self._shift)
        terms = {k: v * m for k, v in self._terms.items()}
        return SparsePolynomial._make(self.n, terms, self._shift - e)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePolynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.n == other.n and self._shift == other._shift and self._terms == other._terms
        if isinstance(other, (int, Fraction, DyadicRational)):
            return self == SparsePolynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self._shift, frozenset(self._terms.items())))

    # alphabet manipulation

    def map_monomials(self, fn) -> SparsePolynomial:
        """Apply ``fn(exp) -> (sign, new_exp)`` to every monomial (same alphabet)."""
        out: dict[int, int] = {}
        n = self.n
        for k, c in self._terms.items():
            sign, new = fn(unpack(k, n))
            nk = pack(new)
            out[nk] = out.get(nk, 0) + sign * c
        return SparsePolynomial._make(n, out, self._shift)

    def embed(self, m: int, offset: int = 0) -> SparsePolynomial:
        """View in an alphabet of size ``m``, variable ``x_i`` becoming ``x_{i+offset}``."""
        out = {}
        for k, c in self._terms.items():
            exp = unpack(k, self.n)
            new = [0] * m
            for i, a in enumerate(exp):
                if a:
                    if not 0 <= i + offset < m:
                        raise AlphabetMismatch("polynomial uses variables outside the target alphabet")
                    new[i + offset] = a
            out[pack(new)] = c
        return SparsePolynomial._make(m, out, self._shift, normalized=True)

    def set_zero(self, indices: Iterable[int]) -> SparsePolynomial:
        """Specialize the listed variables (1-based) to zero."""
        mask = 0
        for i in indices:
            mask |= MASK << (BITS * (i - 1))
        terms = {k: c for k, c in self._terms.items() if not k & mask}
        return SparsePolynomial._make(self.n, terms, self._shift)

    def truncate_alphabet(self, m: int) -> SparsePolynomial:
        """Set ``x_{m+1}, ...`` to zero and drop them from the alphabet."""
        keep = (1 << (BITS * m)) - 1
        terms = {k: c for k, c in self._terms.items() if not k & ~keep}
        return SparsePolynomial._make(m, terms, self._shift)

    def substitute(self, images: Sequence[SparsePolynomial]) -> SparsePolynomial:
        """Ring homomorphism sending ``x_i`` to ``images[i-1]``."""
        if len(images) != self.n:
            raise AlphabetMismatch("need one image per variable")
        m = images[0].n
        powers: list[dict[int, SparsePolynomial]] = [dict() for _ in images]

        def power(i, a):
            cache = powers[i]
            if a not in cache:
                cache[a] = images[i] ** a
            return cache[a]

        result = SparsePolynomial.zero(m)
        for k, c in self._terms.items():
            term = SparsePolynomial.constant(m, c)
            for i, a in enumerate(unpack(k, self.n)):
                if a:
                    term = term * power(i, a)
            result = result + term
        return result.scale(DyadicRational(1, -self._shift))

    def is_symmetric(self, variables: Sequence[int] | None = None) -> bool:
        """Invariance under adjacent swaps among the given consecutive variables."""
        variables = list(variables) if variables is not None else list(range(1, self.n + 1))
        for i in variables[:-1]:
            if act_swap(self, i) != self:
                return False
        return True

    # serialization

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.n)
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(exp) if a
            )
            negative = c.mantissa < 0
            mag = -c if negative else c
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if negative else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SparsePolynomial({self.n}, {self.to_text()!r})"

    @classmethod
    def parse(cls, text: str, n: int, names: Sequence[str] | None = None) -> SparsePolynomial:
        names = list(names) if names is not None else default_names(n)
        index = {name: i for i, name in enumerate(names)}
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty polynomial text")
        if compact[0] not in "+-":
            compact = "+" + compact
        terms: dict[tuple[int, ...], DyadicRational] = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", compact):
            coeff = DyadicRational(1)
            exp = [0] * n
            factors = body.split("*")
            i = 0
            while i < len(factors):
                f = factors[i]
                if re.fullmatch(r"\d+(/\d+)?", f) or re.fullmatch(r"\d+/2\^\d+", f):
                    coeff = coeff * DyadicRational.parse(f)
                else:
                    name, _, power = f.partition("^")
                    if name not in index:
                        raise ValueError(f"unknown variable {name!r}")
                    exp[index[name]] += int(power) if power else 1
                i += 1
            if sign == "-":
                coeff = -coeff
            key = tuple(exp)
            terms[key] = terms.get(key, DyadicRational(0)) + coeff
        if re.sub(r"[+-][^+-]+", "", compact):
            raise ValueError(f"malformed polynomial text {text!r}")
        return cls(n, terms)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"coeff": {"m": str(c.mantissa), "e": c.exponent}, "exp": list(exp)}
                for exp, c in self.sorted_terms()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, doc: dict | str) -> SparsePolynomial:
        if isinstance(doc, str):
            doc = json.loads(doc)
        n = int(doc["n"])
        terms = {
            tuple(t["exp"]): DyadicRational(int(t["coeff"]["m"]), int(t["coeff"]["e"]))
            for t in doc["terms"]
        }
        return cls(n, terms)


def default_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def kernel_names(n: int) -> list[str]:
    """Variable names for the doubled alphabet X ∪ Y of size ``2n``."""
    return [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]


def _normalize(terms: dict[int, int], shift: int) -> tuple[dict[int, int], int]:
    if not terms:
        return terms, 0
    if shift <= 0:
        if shift < 0:
            return {k: c << -shift for k, c in terms.items()}, 0
        return terms, 0
    acc = 0
    for c in terms.values():
        acc |= c
        if acc & 1:
            return terms, shift
    tz = (acc & -acc).bit_length() - 1
    drop = min(tz, shift)
    return {k: c >> drop for k, c in terms.items()}, shift - drop


def arith(a: SparsePolynomial, b: SparsePolynomial, kind: str) -> SparsePolynomial:
    a._check(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def act(f: SparsePolynomial, w) -> SparsePolynomial:
    """Image ``f^w``: ``x_i -> sign(w(i)) * x_|w(i)|`` for a signed permutation ``w``.

    ``w`` may be a :class:`~schubop.weyl.SignedPermutation` or a plain sequence
    of signed images.  Note ``act(act(f, u), v) == act(f, compose(v, u))``.
    """
    image = tuple(getattr(w, "image", w))
    if len(image) != f.n:
        raise AlphabetMismatch(f"element of size {len(image)} acting on {f.n} variables")
    targets = [abs(t) - 1 for t in image]
    negatives = [i for i, t in enumerate(image) if t < 0]

    def move(exp):
        new = [0] * len(exp)
        for i, a in enumerate(exp):
            new[targets[i]] = a
        parity = sum(exp[i] for i in negatives) & 1
        return (-1 if parity else 1), new

    return f.map_monomials(move)


def act_swap(f: SparsePolynomial, i: int) -> SparsePolynomial:
    """Exchange ``x_i`` and ``x_{i+1}``."""
    lo = BITS * (i - 1)
    hi = lo + BITS
    keep = ~((MASK << lo) | (MASK << hi))
    out = {}
    for k, c in f._terms.items():
        a = (k >> lo) & MASK
        b = (k >> hi) & MASK
        out[(k & keep) | (b << lo) | (a << hi)] = c
    return SparsePolynomial._make(f.n, out, f._shift, normalized=True)


def exact_divide(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    """Quotient ``q`` with ``f == q * g``, by repeated leading-term elimination."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    g_exp, g_coeff = g.leading_term()
    g_frac = g_coeff.as_fraction()
    n = f.n
    quotient = SparsePolynomial.zero(n)
    rem = f
    while not rem.is_zero():
        exp, c = rem.leading_term()
        diff = [a - b for a, b in zip(exp, g_exp)]
        if min(diff) < 0:
            raise NonDivisible("leading monomial not divisible")
        try:
            qc = DyadicRational.coerce(c.as_fraction() / g_frac)
        except NonDyadicError as exc:
            raise NonDivisible("quotient leaves Z[1/2]") from exc
        term = SparsePolynomial.monomial(n, diff, qc)
        quotient = quotient + term
        rem = rem - term * g
    return quotient
