"""Named verification suites.

Each suite evaluates both sides of a family of identities exactly and records
every mismatch.  The predicted side is always computed from a closed rule
(sign, erased parts, power of two) and never from the operator under test.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import divdiff, ptilde as pt, schubert as sb, symfun as sf
from .divdiff import apply_element, apply_simple, apply_word, word_nabla_B, word_nabla_D
from .polyring import SparsePolynomial, act
from .weyl import (
    HEART, ZERO_C, GroupType, SignedPermutation, bfs_lengths, compose, distinguished,
    evaluate, generator, generators, identity, inverse, length, reduced_word,
)

__all__ = [
    "Failure", "SuiteReport", "SUITES", "run_suite", "fact4_rule", "thm9_rule",
    "thm11_rule", "weakly_increasing", "reduced_words", "random_polynomial",
]


@dataclass
class Failure:
    case: dict
    expected: str
    actual: str

    def to_json(self) -> dict:
        return {"case": self.case, "expected": self.expected, "actual": self.actual}


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case: dict, expected, actual) -> bool:
        self.cases += 1
        if expected == actual:
            return True
        self.failures.append(Failure({k: _plain(v) for k, v in case.items()}, str(expected), str(actual)))
        return False

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": {k: _plain(v) for k, v in self.params.items()},
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
        }


def _plain(v):
    if isinstance(v, SignedPermutation):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, (int, str, float, bool)) or v is None:
        return v
    return str(v)


# combinatorial helpers


def weakly_increasing(length_: int, top: int, bottom: int = 0) -> list[tuple[int, ...]]:
    """All ``bottom <= a_1 <= ... <= a_k <= top``."""
    if length_ == 0:
        return [()]
    return [tuple(c) for c in itertools.combinations_with_replacement(range(bottom, top + 1), length_)]


def codes(n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(*[range(n - i) for i in range(n)]))


def reduced_words(w: SignedPermutation, t, limit: int | None = None) -> list[tuple[int, ...]]:
    """Reduced words of ``w``, found by peeling right descents."""
    t = GroupType.of(t)
    n = w.size

    @lru_cache(maxsize=None)
    def words(u: SignedPermutation) -> tuple[tuple[int, ...], ...]:
        if length(u, t) == 0:
            return ((),)
        out = []
        for letter in generators(t, n):
            v = compose(u, generator(letter, n))
            if length(v, t) < length(u, t):
                out.extend(word + (letter,) for word in words(v))
                if limit is not None and len(out) >= limit:
                    break
        return tuple(out[:limit] if limit else out)

    return list(words(w))


def random_polynomial(rng: random.Random, n: int, terms: int = 6, max_exp: int = 4) -> SparsePolynomial:
    out = {}
    for _ in range(terms):
        exp = tuple(rng.randint(0, max_exp) for _ in range(n))
        out[exp] = Fraction(rng.randint(-9, 9), 2 ** rng.randint(0, 2))
    return SparsePolynomial(n, out)


def _positions(parts: Sequence[int], erased: Iterable[int]) -> int:
    return sum(parts.index(v) + 1 for v in erased)


def fact4_rule(parts, alpha, n) -> tuple[int, tuple[int, ...]] | None:
    """Predicted ``(coefficient, J)`` for ``Q̃_I Y_α ∇_k^B(n)`` with ``α_k <= n-k``."""
    parts = tuple(parts)
    values = [n - j - a for j, a in enumerate(alpha)]
    if not all(v in parts for v in values):
        return None
    k = len(alpha)
    s = _positions(parts, values)
    sign = -1 if (k * (n - 1) + s) % 2 else 1
    return sign * 2 ** k, tuple(p for p in parts if p not in values)


def thm9_rule(parts, alpha, n) -> tuple[int, tuple[int, ...]] | None:
    """Predicted value at the boundary ``α_k = n-k+1``."""
    parts = tuple(parts)
    k = len(alpha)
    values = [n - j - a for j, a in enumerate(alpha[:-1])]
    if len(parts) % 2 == n % 2 or not all(v in parts for v in values):
        return None
    s = _positions(parts, values)
    sign = -1 if ((k - 1) * (n - 1) + 1 + s) % 2 else 1
    return sign * 2 ** k, tuple(p for p in parts if p not in values)


def thm11_rule(parts, alpha, n) -> tuple[int, tuple[int, ...]] | None:
    """Predicted ``(sign, J)`` for ``P̃_I Y_α ∇_k^D(n)``; the value 0 counts as an extra part."""
    parts = tuple(parts)
    values = [n - 1 - j - a for j, a in enumerate(alpha)]
    extended = parts + (0,)
    if not all(v in extended for v in values):
        return None
    s = _positions(extended, values)
    return (-1 if s % 2 else 1), tuple(p for p in parts if p not in values)


# suites


def _ranks(n: int | None, default: Sequence[int]) -> list[int]:
    return [n] if n is not None else list(default)


def suite_coxeter(report: SuiteReport, n: int | None, seed: int):
    for t in "ABD":
        for m in _ranks(n, (1, 2, 3, 4)):
            if t == "D" and m < 2:
                continue
            lengths = bfs_lengths(t, m)
            expected = {"A": math.factorial(m), "B": 2 ** m * math.factorial(m),
                        "D": 2 ** (m - 1) * math.factorial(m)}[t]
            report.check({"type": t, "n": m, "what": "order"}, expected, len(lengths))
            mismatched = [w for w, ell in lengths.items() if length(w, t) != ell]
            report.check({"type": t, "n": m, "what": "length"}, [], mismatched)
            bad_words = [w for w in lengths if evaluate(reduced_word(w, t), m) != w
                         or len(reduced_word(w, t)) != lengths[w]]
            report.check({"type": t, "n": m, "what": "reduced word"}, [], bad_words)
            gens = generators(t, m)
            for a, b in itertools.combinations_with_replacement(gens, 2):
                order = _coxeter_order(a, b) if a != b else 1
                ga, gb = generator(a, m), generator(b, m)
                prod = compose(ga, gb)
                power = identity(m)
                for _ in range(order):
                    power = compose(power, prod)
                report.check({"type": t, "n": m, "pair": [a, b], "order": order}, identity(m), power)
                if order > 1:
                    lower = identity(m)
                    for _ in range(order - 1):
                        lower = compose(lower, prod)
                    report.check({"type": t, "n": m, "pair": [a, b], "minimal": True},
                                 True, lower != identity(m))


def _coxeter_order(a: int, b: int) -> int:
    if {a, b} == {0, 1}:
        return 4
    if HEART in (a, b):
        other = b if a == HEART else a
        return 3 if other == 2 else 2
    if 0 in (a, b):
        return 2
    return 3 if abs(a - b) == 1 else 2


def suite_welldef(report: SuiteReport, n: int | None, seed: int):
    rng = random.Random(seed)
    targets = [("B", 3), ("D", 4)] if n is None else [("B", n), ("D", n)]
    for t, m in targets:
        f = random_polynomial(rng, m, terms=5, max_exp=5)
        for w in bfs_lengths(t, m):
            words = reduced_words(w, t, limit=4)
            images = {apply_word(f, word) for word in words}
            report.check({"type": t, "n": m, "w": w, "words": len(words)}, 1, len(images))
    # nilpotence and braid relations on random polynomials
    m = 4 if n is None else max(n, 3)
    for letter in [0, HEART, ZERO_C, 1, 2, 3][: 3 + m - 1]:
        for trial in range(200):
            f = random_polynomial(rng, m)
            report.check({"relation": "square", "letter": letter, "trial": trial},
                         SparsePolynomial.zero(m), apply_word(f, [letter, letter]))
    braids = [([0, 1, 0, 1], [1, 0, 1, 0]), ([1, 2, 1], [2, 1, 2]), ([HEART, 2, HEART], [2, HEART, 2]),
              ([HEART, 1], [1, HEART]), ([HEART, 3], [3, HEART]), ([0, 2], [2, 0]), ([1, 3], [3, 1]),
              ([2, 3, 2], [3, 2, 3])]
    for left, right in braids:
        for trial in range(200):
            f = random_polynomial(rng, m)
            report.check({"relation": [left, right], "trial": trial}, apply_word(f, left), apply_word(f, right))


def suite_lemma1(report: SuiteReport, n: int | None, seed: int):
    for t in "ABD":
        for m in _ranks(n, (2, 3)):
            report.check({"type": t, "n": m}, True, divdiff.lemma1_check(t, m))
    rng = random.Random(seed)
    for t in "BD":
        for m in _ranks(n, (2, 3)):
            for trial in range(5):
                f = random_polynomial(rng, m, terms=3, max_exp=3)
                report.check({"type": t, "n": m, "trial": trial, "what": "factorization"},
                             True, divdiff.omega_factorization_check(f, t))


def suite_displays(report: SuiteReport, n: int | None, seed: int):
    left, right = divdiff.parse_display("2/1 2"), divdiff.parse_display("1 2/. 1")
    report.check({"displays": ["2/1 2", "1 2/. 1"]}, True,
                 divdiff.congruent(divdiff.row_reading(left), divdiff.row_reading(right)))
    for text in ("0 1 2 3/. 0 1 2/. . 0 1/. . . 0", "3 4 5 6/2 3 4 5/1 2 3 4", "2/1 2"):
        d = divdiff.parse_display(text)
        report.check({"display": text}, True,
                     divdiff.congruent(divdiff.row_reading(d), divdiff.column_reading(d)))
    for d in range(3, 9):
        for a, b in itertools.combinations(range(1, d), 2):
            c = a + d - b
            if not a < c < d:
                continue
            for k in range(d - b + 1):
                left, right = divdiff.relation_14(a, b, c, d, k)
                report.check({"abcdk": [a, b, c, d, k]}, True,
                             divdiff.congruent(divdiff.row_reading(left), divdiff.row_reading(right)))


def suite_schubertA(report: SuiteReport, n: int | None, seed: int):
    rng = random.Random(seed)
    for m in _ranks(n, (2, 3, 4)):
        table = {a: sb.schubert_Y(a, m) for a in codes(m)}
        report.check({"n": m, "what": "top"}, sb.top_class(m), table[sb.rho(m)])
        for a, y in table.items():
            for i in range(m - 1):
                if a[i] > a[i + 1]:
                    b = list(a)
                    b[i], b[i + 1] = a[i + 1], a[i] - 1
                    report.check({"n": m, "alpha": a, "i": i + 1}, table[tuple(b)], apply_simple(y, i + 1))
            if all(x >= y_ for x, y_ in zip(a, a[1:])):
                report.check({"n": m, "alpha": a, "what": "dominant"}, SparsePolynomial.monomial(m, a), y)
            k = max((i + 1 for i, x in enumerate(a) if x), default=0)
            if k and all(x <= y_ for x, y_ in zip(a[:k], a[1:k])):
                lam = tuple(reversed(a[:k]))
                report.check({"n": m, "alpha": a, "what": "schur"}, sb.schur_S(lam, k).embed(m), y)
        for _ in range(10):
            k = rng.randint(1, m - 1)
            alpha = [rng.randint(0, m - 1 - i - 1) if m - 2 - i >= 0 else 0 for i in range(k)]
            lhs = sb.schubert_Y(alpha, m) * SparsePolynomial.monomial(m, [1] * k + [0] * (m - k))
            report.check({"n": m, "alpha": alpha, "what": "shift"}, sb.schubert_Y([x + 1 for x in alpha], m), lhs)


def suite_qtilde(report: SuiteReport, n: int | None, seed: int):
    rng = random.Random(seed)
    for m in _ranks(n, (1, 2, 3, 4, 5)):
        for I in pt.strict_partitions(m):
            report.check({"n": m, "I": I, "what": "pfaffian=recursion"},
                         pt.qtilde(I, m, "pfaffian"), pt.qtilde(I, m, "recursion"))
    for m in _ranks(n, (2, 3, 4)):
        for _ in range(15):
            I = rng.choice(pt.strict_partitions(m))
            j = rng.randint(1, m)
            report.check({"n": m, "I": I, "j": j, "what": "factorization"}, True, pt.factorization_check(I, j, m))
        for I in pt.strict_partitions(m):
            report.check({"m": m, "I": I, "what": "branching"}, True, pt.branch(I, m)[0])


def _fact4_cases(ns):
    for m in ns:
        for I in pt.strict_partitions(m):
            for k in range(1, m + 1):
                for alpha in weakly_increasing(k, m - k):
                    yield m, I, alpha


def suite_fact4(report: SuiteReport, n: int | None, seed: int):
    for m, I, alpha in _fact4_cases(_ranks(n, (3, 4, 5))):
        image = apply_word(pt.qtilde(I, m) * sb.schubert_Y(alpha, m), word_nabla_B(len(alpha), m))
        rule = fact4_rule(I, alpha, m)
        expected = SparsePolynomial.zero(m) if rule is None else pt.qtilde(rule[1], m).scale(rule[0])
        report.check({"n": m, "I": I, "alpha": alpha}, expected, image)


def suite_thm21(report: SuiteReport, n: int | None, seed: int):
    for m, I, alpha in _fact4_cases(_ranks(n, (3, 4, 5))):
        image = apply_word(pt.ptilde(I, m) * sb.schubert_Y(alpha, m), word_nabla_B(len(alpha), m))
        rule = fact4_rule(I, alpha, m)
        expected = SparsePolynomial.zero(m)
        if rule is not None:
            expected = pt.ptilde(rule[1], m).scale(1 if rule[0] > 0 else -1)
        report.check({"n": m, "I": I, "alpha": alpha}, expected, image)


def suite_thm9(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (3, 4, 5)):
        for I in pt.strict_partitions(m):
            for k in range(1, m + 1):
                for head in weakly_increasing(k - 1, m - k + 1):
                    alpha = head + (m - k + 1,)
                    y = sb.schubert_Y(alpha, m, stable=True)
                    image = apply_word(pt.qtilde(I, m) * y, word_nabla_B(k, m))
                    rule = thm9_rule(I, alpha, m)
                    expected = SparsePolynomial.zero(m) if rule is None else pt.qtilde(rule[1], m).scale(rule[0])
                    report.check({"n": m, "I": I, "alpha": alpha}, expected, image)


def suite_thm11(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (4, 5, 6)):
        for I in pt.strict_partitions(m - 1):
            p = pt.ptilde(I, m)
            for k in range(1, m // 2 + 1):
                word = word_nabla_D(k, m)
                for alpha in weakly_increasing(2 * k, m - 2 * k):
                    image = apply_word(p * sb.schubert_Y(alpha, m), word)
                    rule = thm11_rule(I, alpha, m)
                    expected = SparsePolynomial.zero(m) if rule is None else pt.ptilde(rule[1], m).scale(rule[0])
                    report.check({"n": m, "I": I, "alpha": alpha, "k": k}, expected, image)


def _product_x(m: int, upto: int) -> SparsePolynomial:
    return SparsePolynomial.monomial(m, [1] * upto + [0] * (m - upto))


def _omega_split(f: SparsePolynomial, k: int, m: int) -> SparsePolynomial:
    """``x_1..x_{2k} ∇_{2k}^B(m) + x_1..x_{2k-1} ∇_{2k-1}^B(m) ∂_1..∂_{m-2k}``."""
    first = apply_word(f * _product_x(m, 2 * k), word_nabla_B(2 * k, m))
    second = apply_word(f * _product_x(m, 2 * k - 1), word_nabla_B(2 * k - 1, m) + tuple(range(1, m - 2 * k + 1)))
    return first + second


def suite_prop6(report: SuiteReport, n: int | None, seed: int):
    ks = (1, 2) if n is None else (n // 2,)
    for k in ks:
        m = 2 * k
        for I in pt.strict_partitions(m):
            f = pt.qtilde(I, m)
            report.check({"k": k, "I": I}, apply_word(f, word_nabla_D(k, m)), _omega_split(f, k, m))


def suite_cor8(report: SuiteReport, n: int | None, seed: int):
    pairs = [(1, 3), (1, 4), (2, 5)] if n is None else [(k, n) for k in range(1, n // 2 + 1)]
    for k, m in pairs:
        for f, label in _two_block_symmetric(2 * k, m):
            report.check({"k": k, "n": m, "monomial": label},
                         apply_word(f, word_nabla_D(k, m)), _omega_split(f, k, m))


def _two_block_symmetric(split: int, m: int, top: int = 2):
    """Monomial symmetric products ``m_λ(x_1..x_split) m_μ(x_{split+1}..x_m)`` with parts <= top."""
    for lam in _box_partitions(split, top):
        left = _monomial_symmetric(lam, split).embed(m)
        for mu in _box_partitions(m - split, top):
            right = _monomial_symmetric(mu, m - split).embed(m, offset=split)
            yield left * right, [list(lam), list(mu)]


def _box_partitions(rows: int, cols: int) -> list[tuple[int, ...]]:
    return [tuple(p) for p in itertools.combinations_with_replacement(range(cols, -1, -1), rows)]


def _monomial_symmetric(exp: Sequence[int], m: int) -> SparsePolynomial:
    return SparsePolynomial(m, {e: 1 for e in set(itertools.permutations(exp))})


def suite_dualityA(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (2, 3)):
        table = {a: sb.schubert_Y(a, m) for a in codes(m)}
        for a, b in itertools.product(table, repeat=2):
            value = sb.pair(sb.act_omega(table[a]), table[sb.dual_code(b, m)], "A")
            expected = SparsePolynomial.constant(m, (-1) ** sum(a) if a == b else 0)
            report.check({"n": m, "alpha": a, "beta": b, "eq": "dual pairing"}, expected, value)
        for a, b in itertools.product(table, repeat=2):
            if sum(a) != sum(b):
                continue
            value = sb.pair(table[a], table[tuple(r - x for r, x in zip(sb.rho(m), b))], "A")
            report.check({"n": m, "alpha": a, "beta": b, "eq": "complementary pairing"},
                         SparsePolynomial.constant(m, 1 if a == b else 0), value)


def suite_dualityA_printed(report: SuiteReport, n: int | None, seed: int):
    """The complementary pairing on the stratum ``|α| + |β| = |ρ|`` as literally printed."""
    for m in _ranks(n, (2, 3)):
        table = {a: sb.schubert_Y(a, m) for a in codes(m)}
        top = sum(sb.rho(m))
        for a, b in itertools.product(table, repeat=2):
            if sum(a) + sum(b) != top:
                continue
            value = sb.pair(table[a], table[tuple(r - x for r, x in zip(sb.rho(m), b))], "A")
            report.check({"n": m, "alpha": a, "beta": b},
                         SparsePolynomial.constant(m, 1 if a == b else 0), value)


def _duality_orthogonal(report: SuiteReport, m: int, t: str):
    k = m - 1 if t == "D" else m
    sign = sb.sign_of_top(m, t)
    short, full = ("D_v", "D_full") if t == "D" else ("B_nabla", "B_full")
    basis = pt.strict_partitions(k)
    for I, J in itertools.product(basis, repeat=2):
        value = sb.pair(pt.ptilde(I, m), pt.ptilde(pt.complement(J, k), m), short)
        report.check({"n": m, "I": I, "J": J, "form": short},
                     SparsePolynomial.constant(m, sign if I == J else 0), value)
    ys = {a: sb.schubert_Y(a, m) for a in codes(m)}
    left = {(a, I): sb.act_omega(ys[a]) * pt.ptilde(I, m) for a in ys for I in basis}
    right = {(b, J): ys[sb.dual_code(b, m)] * pt.ptilde(pt.complement(J, k), m) for b in ys for J in basis}
    for (a, I), f in left.items():
        for (b, J), g in right.items():
            value = sb.pair(f, g, full)
            expected = sign * (-1) ** sum(a) if (a, I) == (b, J) else 0
            report.check({"n": m, "alpha": a, "I": I, "beta": b, "J": J, "form": full},
                         SparsePolynomial.constant(m, expected), value)


def suite_dualityD(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (2, 3)):
        _duality_orthogonal(report, m, "D")


def suite_dualityB(report: SuiteReport, n: int | None, seed: int):
    rng = random.Random(seed)
    for m in _ranks(n, (2, 3)):
        _duality_orthogonal(report, m, "B")
        # the ∇-pairing of symmetric polynomials lands in the B-invariants
        for _ in range(5):
            f = _random_symmetric(rng, m)
            g = _random_symmetric(rng, m)
            value = sb.pair(f, g, "B_nabla")
            report.check({"n": m, "what": "codomain"}, True, _is_invariant(value, "B"))


def _random_symmetric(rng: random.Random, m: int) -> SparsePolynomial:
    out = SparsePolynomial.zero(m)
    for _ in range(3):
        term = SparsePolynomial.constant(m, rng.randint(-3, 3))
        for _ in range(rng.randint(0, 3)):
            term = term * pt.elementary(rng.randint(1, m), m)
        out = out + term
    return out


def _is_invariant(f: SparsePolynomial, t) -> bool:
    return all(act(f, generator(g, f.n)) == f for g in generators(t, f.n))


def suite_kernels(report: SuiteReport, n: int | None, seed: int):
    for t in "DB":
        for m in _ranks(n, (2, 3)):
            F = pt.kernel_F(m, t)
            K = pt.kernel_Ptilde(m, t)
            report.check({"type": t, "n": m, "eq": "F = P(X,Y)"}, True, pt.congruent_mod_ideal(F - K, t))
            k = m - 1 if t == "D" else m
            diagonal = sb.schur_S(pt.staircase(k), m)
            for w in bfs_lengths(t, m):
                value = SparsePolynomial.zero(m)
                for I in pt.strict_partitions(k):
                    value = value + pt.ptilde_at(I, m, w) * pt.ptilde(pt.complement(I, k), m)
                expected = diagonal if w.belongs_to("A") else SparsePolynomial.zero(m)
                report.check({"type": t, "n": m, "w": w}, expected, value)
    for t in "DB":
        for m in _ranks(n, (2,)):
            _reproducing(report, m, t)


def _reproducing(report: SuiteReport, m: int, t: str):
    k = m - 1 if t == "D" else m
    sign = sb.sign_of_top(m, t)
    F = pt.kernel_F(m, t)
    short = divdiff.word_partial_v(m) if t == "D" else word_nabla_B(m, m)
    sym = [pt.ptilde(I, m) * g for I in pt.strict_partitions(k)
           for g in (SparsePolynomial.one(m), pt.elementary(1, m) ** 2, pt.elementary(m, m))]
    for f in sym:
        value = apply_word(f.embed(2 * m) * F, short)
        report.check({"type": t, "n": m, "f": str(f), "eq": "symmetric kernel"}, True,
                     pt.congruent_mod_ideal(value - f.embed(2 * m, offset=m).scale(sign), t))
    kernel = pt.kernel_reproducing_D(m) if t == "D" else pt.kernel_reproducing_B(m)
    w0 = reduced_word(distinguished(t, m), t)
    pol = [sb.schubert_Y(a, m) * pt.ptilde(I, m) for a in codes(m) for I in pt.strict_partitions(k)]
    pol += [SparsePolynomial.monomial(m, e) for e in itertools.product(range(3), repeat=m)]
    for f in pol:
        value = apply_word(f.embed(2 * m) * kernel, w0)
        report.check({"type": t, "n": m, "f": str(f), "eq": "full kernel"}, True,
                     pt.congruent_mod_ideal(value - f.embed(2 * m, offset=m), t))


def suite_thm15(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (2, 3, 4)):
        _grassmannian(report, m, "D")
    for m in _ranks(n, (3, 4)):
        _erased_parts_sign(report, m)


def suite_thm23(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (2, 3)):
        _grassmannian(report, m, "B")


def _grassmannian(report: SuiteReport, m: int, t: str):
    k = m - 1 if t == "D" else m
    sign = sb.sign_of_top(m, t)
    top = sb.top_class(m) * pt.ptilde(pt.staircase(k), m)
    lengths = bfs_lengths(t, m)
    by_length: dict[int, list[SignedPermutation]] = {}
    for w, ell in lengths.items():
        by_length.setdefault(ell, []).append(w)
    for I in pt.strict_partitions(k):
        target = pt.ptilde(I, m).scale(sign * (-1) ** sum(I))
        report.check({"type": t, "n": m, "I": I, "what": "v(I)"}, target,
                     apply_element(top, sb.v_of_I(I, m, t), t))
        report.check({"type": t, "n": m, "I": I, "what": "grassmannian X"}, target,
                     sb.schubert_X(sb.grassmannian_element(I, m, t), t))
        report.check({"type": t, "n": m, "I": I, "what": "barred vector"},
                     _barred_vector(I, m, t), sb.grassmannian_element(I, m, t))
        p = pt.ptilde(I, m)
        survivors = [w for w in by_length.get(sum(I), []) if not apply_element(p, w, t).is_zero()]
        report.check({"type": t, "n": m, "I": I, "what": "unique w(I)"}, [sb.w_of_I(I, m, t)], survivors)
        report.check({"type": t, "n": m, "I": I, "what": "value at w(I)"},
                     SparsePolynomial.constant(m, (-1) ** sum(I)), apply_element(p, sb.w_of_I(I, m, t), t))


def _barred_vector(I, m: int, t: str) -> SignedPermutation:
    """``[-i_1, ..., -i_l, j_1 < ... < j_h]`` (type B) or the shifted type D vector."""
    if t == "B":
        head = [-i for i in I]
    else:
        head = [-(i + 1) for i in I] + ([-1] if len(I) % 2 else [])
    used = {-h for h in head}
    return SignedPermutation(tuple(head) + tuple(j for j in range(1, m + 1) if j not in used))


def _erased_parts_sign(report: SuiteReport, m: int):
    top = pt.ptilde(pt.staircase(m - 1), m)
    for I in pt.strict_partitions(m - 1):
        used = {i + 1 for i in I}
        if (m - len(I)) % 2:
            used.add(1)
        js = [j for j in range(1, m + 1) if j not in used]
        h = len(js)
        alpha = [m - j for j in js] + [0] * (m - h)
        start = SparsePolynomial.monomial(m, alpha) * top
        word = reduced_word(SignedPermutation(tuple(range(h, 0, -1)) + tuple(range(h + 1, m + 1))), "A")
        value = apply_word(start, word + word_nabla_D(h // 2, m))
        # the sign is the parity of the erased parts themselves
        s = sum(pt.staircase(m - 1)) - sum(I)
        report.check({"n": m, "I": I, "what": "erased parts"}, pt.ptilde(I, m).scale((-1) ** s), value)


def suite_prop17(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (3, 4)):
        for I in pt.strict_partitions(m - 1):
            if len(I) < 2:
                continue
            word = [HEART] + list(range(2, I[0] + 1)) + list(range(1, I[1] + 1))
            report.check({"n": m, "I": I}, pt.ptilde(I[2:], m).scale((-1) ** (I[0] + I[1])),
                         apply_word(pt.ptilde(I, m), word))


def suite_prop20(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (2, 3)):
        word = [0] + list(range(1, m))
        for p in range(1, m + 1):
            x = SparsePolynomial.monomial(m, [m - p] + [0] * (m - 1))
            for K in pt.strict_partitions(m):
                if p in K:
                    pos = K.index(p)
                    expected = pt.ptilde(K[:pos] + K[pos + 1:], m).scale((-1) ** (pos + m))
                else:
                    expected = SparsePolynomial.zero(m)
                report.check({"n": m, "p": p, "partition": K}, expected, apply_word(x * pt.ptilde(K, m), word))


def suite_prop22(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (2, 3)):
        for I in pt.strict_partitions(m):
            if not I:
                continue
            report.check({"n": m, "I": I}, pt.ptilde(I[1:], m).scale((-1) ** I[0]),
                         apply_word(pt.ptilde(I, m), [0] + list(range(1, I[0]))))


def suite_thm18(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (2, 3)):
        word = word_nabla_B(m, m)
        sign = sb.sign_of_top(m, "B")
        for a in codes(m):
            y = sb.schubert_Y(a, m)
            for I in pt.strict_partitions(m):
                value = apply_word(y * pt.ptilde(I, m), word)
                if I == pt.staircase(m):
                    expected = sb.act_omega(y).scale(sign * (-1) ** sum(a))
                else:
                    expected = SparsePolynomial.zero(m)
                report.check({"n": m, "alpha": a, "I": I}, expected, value)


def suite_stability(report: SuiteReport, n: int | None, seed: int):
    """Literal restriction, restriction after normalizing ``X_id = 1``, and the same modulo invariants."""
    for t in "DB":
        for m in _ranks(n, (2,)):
            for w in bfs_lengths(t, m):
                report.check({"type": t, "n": m, "w": w, "what": "degree"},
                             length(w, t), sb.schubert_X(w, t).degree())
                for mode in ("literal", "normalized", "classes"):
                    report.check({"type": t, "n": m, "w": w, "mode": mode}, True, sb.stability_check(w, t, mode=mode))


def _strict_up_to(size: int) -> list[tuple[int, ...]]:
    return [lam for d in range(size + 1) for lam in sf.partitions(d)
            if all(a > b for a, b in zip(lam, lam[1:]))]


def suite_prop25(report: SuiteReport, n: int | None, seed: int):
    cap = 8
    for I in _strict_up_to(6):
        q = sf.qtilde_sym(I, cap)
        report.check({"I": I, "eq": "U^s"}, q if len(I) % 2 == 0 else sf.SymFunExpr({}, cap), sf.vertex("Us", q))
        p = sf.schur_PQ(I, cap, "P")
        report.check({"I": I, "eq": "V^e"}, p if len(I) % 2 == 0 else sf.SymFunExpr({}, cap), sf.vertex("Ve", p))


def suite_vertexUe(report: SuiteReport, n: int | None, seed: int):
    """``U^e`` is only recorded: how often it acts on ``Q̃_I`` like ``U^s`` does."""
    cap = 8
    agree = 0
    total = 0
    for I in _strict_up_to(6):
        q = sf.qtilde_sym(I, cap)
        total += 1
        agree += sf.vertex("Ue", q) == sf.vertex("Us", q)
    report.notes.append(f"U^e agrees with U^s on {agree} of {total} Q-tilde functions")


def suite_prop28(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (3, 4, 5)):
        word = [0] + list(range(1, m))
        x = SparsePolynomial.monomial(m, [m] + [0] * (m - 1))
        for I in pt.strict_partitions(m):
            q = pt.qtilde(I, m)
            expected = q.scale(-2) if (m + len(I)) % 2 else SparsePolynomial.zero(m)
            report.check({"n": m, "I": I}, expected, apply_word(q * x, word))


def suite_lemma27(report: SuiteReport, n: int | None, seed: int):
    cap = 8
    for m in _ranks(n, (2, 3, 4)):
        x = SparsePolynomial.monomial(m, [m] + [0] * (m - 1))
        for d in range(7):
            for lam in sf.partitions(d):
                f = sf.SymFunExpr({lam: 1}, cap)
                lhs = sf.realize(f - sf.vertex("Us", f), m)
                rhs = apply_word(sf.partial_zero_C(sf.realize(f, m)) * x, list(range(1, m)))
                report.check({"n": m, "p": lam}, lhs, rhs)


def suite_identities(report: SuiteReport, n: int | None, seed: int):
    rng = random.Random(seed)
    cap = 8
    for m in _ranks(n, (1, 2, 3, 4)):
        x1 = lambda e: SparsePolynomial.monomial(m, [e] + [0] * (m - 1))  # noqa: E731
        shift = list(range(1, m))
        prod = SparsePolynomial.one(m)
        for i in range(2, m + 1):
            prod = prod * (SparsePolynomial.var(m, 1) + SparsePolynomial.var(m, i))
        for k in range(1, 6):
            report.check({"n": m, "k": k, "eq": "P_k from products"}, sf.schur_P_poly((k,), m), apply_word(x1(k) * prod, shift))
        for p in range(9):
            report.check({"n": m, "p": p, "eq": "one-row Schur"}, sf.complete(p - m + 1, m), apply_word(x1(p), shift))
        for d in range(7):
            for lam in sf.partitions(d):
                f = sf.SymFunExpr({lam: 1}, cap)
                rhs = SparsePolynomial.zero(m)
                for k in range(1, d + 1):
                    term = sf.realize(sf.foulkes_D(sf.generator("P_row", k, cap), f), m) * x1(k - 1)
                    rhs = rhs + term if k % 2 else rhs - term
                report.check({"n": m, "p": lam, "eq": "d0c series"}, sf.partial_zero_C(sf.realize(f, m)), rhs)
        for trial in range(40):
            f = random_polynomial(rng, m)
            mm = rng.randint(0, 6)
            even, odd = x1(2 * mm), x1(2 * mm + 1)
            d0 = sf.partial_zero_C
            report.check({"n": m, "m": mm, "trial": trial, "eq": "commute even power"}, d0(f) * even, d0(f * even))
            report.check({"n": m, "m": mm, "trial": trial, "eq": "commute odd power"},
                         -(d0(f) * odd) + f * even, d0(f * odd))


def suite_fact26(report: SuiteReport, n: int | None, seed: int):
    for m in _ranks(n, (2, 3, 4)):
        prod = SparsePolynomial.one(m)
        for i in range(2, m + 1):
            prod = prod * (SparsePolynomial.var(m, 1) + SparsePolynomial.var(m, i))
        for I in pt.strict_partitions(m + 1):
            lhs = apply_word(sf.schur_P_poly(I, m - 1).embed(m, offset=1) * prod, list(range(1, m)))
            full = sf.schur_P_poly(I, m)
            expected = full.scale((-1) ** (m - 1)) if (m - len(I)) % 2 else SparsePolynomial.zero(m)
            report.check({"n": m, "I": I, "eq": "single column"}, expected, lhs)
        for q in range(1, m):
            r = m - q
            cross = SparsePolynomial.one(m)
            for i in range(1, q + 1):
                for j in range(q + 1, m + 1):
                    cross = cross * (SparsePolynomial.var(m, i) + SparsePolynomial.var(m, j))
            for k in range(q + 1):
                for h in range(r + 1):
                    for I in itertools.combinations(range(m + 1, 0, -1), k):
                        for J in itertools.combinations(range(m + 1, 0, -1), h):
                            f = sf.schur_P_poly(I, q).embed(m) * sf.schur_P_poly(J, r).embed(m, offset=q) * cross
                            d = sf.d_coefficient(q, r, k, h)
                            report.check({"n": m, "q": q, "k": k, "h": h, "I": I, "J": J, "eq": "rectangle"},
                                         sf.schur_P_poly(I + J, m).scale(d), sf.rectangle_apply(f, q, r))


# golden examples


def _qt(parts, m):
    return pt.qtilde(parts, m)


def _y(alpha, m):
    return sb.schubert_Y(alpha, m, stable=True)


def _examples() -> list[tuple[str, Callable[[], SparsePolynomial], Callable[[], SparsePolynomial]]]:
    nb, nd = word_nabla_B, word_nabla_D
    P, Q = pt.ptilde, pt.qtilde
    x = SparsePolynomial.monomial
    return [
        ("B7-k2", lambda: apply_word(Q((5, 4, 3, 2, 1), 7) * _y([2, 5], 7), nb(2, 7)),
         lambda: Q((4, 3, 2), 7).scale(4)),
        ("B7-k3", lambda: apply_word(Q((7, 5, 4, 3, 1), 7) * _y([2, 3, 4], 7), nb(3, 7)),
         lambda: Q((7, 4), 7).scale(-8)),
        ("B5-x1^5-a", lambda: apply_word(x(5, [5, 0, 0, 0, 0]) * Q((5, 3, 2, 1), 5), nb(1, 5)),
         lambda: Q((5, 3, 2, 1), 5).scale(-2)),
        ("B5-x1^5-b", lambda: apply_word(x(5, [5, 0, 0, 0, 0]) * Q((5, 2, 1), 5), nb(1, 5)),
         lambda: SparsePolynomial.zero(5)),
        ("B7-long-code-a", lambda: apply_word(Q((7, 6, 4, 1), 7) * _y([1, 6], 7), nb(2, 7)),
         lambda: Q((7, 4, 1), 7).scale(-4)),
        ("B7-long-code-b", lambda: apply_word(Q((7, 6, 4, 3, 1), 7) * _y([1, 6], 7), nb(2, 7)),
         lambda: SparsePolynomial.zero(7)),
        ("B7-k4-a", lambda: apply_word(Q((7, 6, 4, 3, 2, 1), 7) * _y([1, 2, 2, 4], 7), nb(4, 7)),
         lambda: Q((7, 2, 1), 7).scale(16)),
        ("B7-k4-b", lambda: apply_word(Q((7, 6, 4, 3, 2, 1), 7) * _y([1, 3, 4, 4], 7), nb(4, 7)),
         lambda: Q((7, 4, 2), 7).scale(-16)),
        ("D7-k1-a", lambda: apply_word(P((5, 4, 3, 2, 1), 7) * _y([1, 3], 7), nd(1, 7)),
         lambda: P((4, 3, 1), 7).scale(-1)),
        ("D7-k1-b", lambda: apply_word(P((6, 4, 3, 2, 1), 7) * _y([2, 5], 7), nd(1, 7)),
         lambda: P((6, 3, 2, 1), 7)),
        ("D7-k2-a", lambda: apply_word(P((6, 5, 4, 3, 2, 1), 7) * _y([1, 1, 1, 2], 7), nd(2, 7)),
         lambda: P((6, 2), 7).scale(-1)),
        ("D7-k2-b", lambda: apply_word(P((6, 5, 4, 3, 2, 1), 7) * _y([1, 1, 1, 3], 7), nd(2, 7)),
         lambda: P((6, 2, 1), 7)),
        ("D5-split", lambda: apply_word(P((3, 2), 5) * _y([1, 3], 5), nd(1, 5)), lambda: P((2,), 5)),
        ("D5-split-omega1", lambda: apply_word(Q((3, 2), 5) * _y([1, 3], 5) * _product_x(5, 2), nb(2, 5)),
         lambda: Q((2,), 5).scale(4)),
        ("D5-split-omega1-shifted", lambda: apply_word(Q((3, 2), 5) * _y([2, 4], 5), nb(2, 5)),
         lambda: Q((2,), 5).scale(4)),
        ("D5-split-omega2", lambda: apply_word(Q((3, 2), 5) * _y([1, 3], 5) * _product_x(5, 1), nb(1, 5) + (1, 2, 3)),
         lambda: Q((2,), 5).scale(-2)),
        ("D5-split-omega2-shifted", lambda: apply_word(Q((3, 2), 5) * _y([2], 5), nb(1, 5)),
         lambda: Q((2,), 5).scale(-2)),
        ("D7-split-a", lambda: apply_word(P((6, 5, 4, 3, 2, 1), 7) * _y([0, 1, 2, 2], 7), nd(2, 7)),
         lambda: P((5, 3), 7).scale(-1)),
        ("D7-split-a-omega1-product", lambda: apply_word(Q((6, 5, 4, 3, 2, 1), 7) * _y([0, 1, 2, 2], 7) * _product_x(7, 4),
                                                   nb(4, 7)),
         lambda: Q((5, 3), 7).scale(-16)),
        ("D7-split-a-omega1", lambda: apply_word(Q((6, 5, 4, 3, 2, 1), 7) * _y([1, 2, 3, 3], 7), nb(4, 7)),
         lambda: Q((5, 3), 7).scale(-16)),
        ("D7-split-b", lambda: apply_word(P((6, 5, 4, 3, 2, 1), 7) * _y([1, 1, 2, 3], 7), nd(2, 7)),
         lambda: P((6, 3, 1), 7).scale(-1)),
        ("D7-split-b-omega1-product",
         lambda: apply_word(Q((6, 5, 4, 3, 2, 1), 7) * _y([1, 1, 2, 3], 7) * _product_x(7, 4), nb(4, 7)),
         lambda: Q((6, 3, 1), 7).scale(-16)),
        ("D7-split-b-omega2-product",
         lambda: apply_word(Q((6, 5, 4, 3, 2, 1), 7) * _y([1, 1, 2, 3], 7) * _product_x(7, 3), nb(3, 7) + (1, 2, 3)),
         lambda: Q((6, 3, 1), 7).scale(8)),
        ("D7-split-b-omega1", lambda: apply_word(Q((6, 5, 4, 3, 2, 1), 7) * _y([2, 2, 3, 4], 7), nb(4, 7)),
         lambda: Q((6, 3, 1), 7).scale(-16)),
        ("D7-split-b-omega2", lambda: apply_word(Q((6, 5, 4, 3, 2, 1), 7) * _y([2, 2, 3], 7), nb(3, 7)),
         lambda: Q((6, 3, 1), 7).scale(8)),
    ]


def suite_examples(report: SuiteReport, n: int | None, seed: int):
    for name, lhs, rhs in _examples():
        report.check({"example": name}, rhs(), lhs())
    # the operator identities displayed for Sym(2) and Sym(4)
    for k in (1, 2):
        m = 2 * k
        for I in pt.strict_partitions(m):
            f = pt.qtilde(I, m)
            report.check({"example": "nablaD split", "k": k, "I": I}, apply_word(f, word_nabla_D(k, m)), _omega_split(f, k, m))
    report.check({"example": "nablaD word", "word": "nablaD(1,2)"}, (HEART,), word_nabla_D(1, 2))
    report.check({"example": "nablaD word", "word": "nablaD(2,4)"}, (HEART, 2, 3, 1, 2, HEART), word_nabla_D(2, 4))


SUITES: dict[str, Callable[[SuiteReport, int | None, int], None]] = {
    "coxeter": suite_coxeter,
    "welldef": suite_welldef,
    "lemma1": suite_lemma1,
    "displays": suite_displays,
    "schubertA": suite_schubertA,
    "qtilde": suite_qtilde,
    "fact4": suite_fact4,
    "thm9": suite_thm9,
    "thm11": suite_thm11,
    "thm21": suite_thm21,
    "prop6": suite_prop6,
    "cor8": suite_cor8,
    "dualityA": suite_dualityA,
    "dualityA_printed": suite_dualityA_printed,
    "dualityB": suite_dualityB,
    "dualityD": suite_dualityD,
    "kernels": suite_kernels,
    "thm15": suite_thm15,
    "thm18": suite_thm18,
    "thm23": suite_thm23,
    "prop17": suite_prop17,
    "prop20": suite_prop20,
    "prop22": suite_prop22,
    "prop25": suite_prop25,
    "vertexUe": suite_vertexUe,
    "prop28": suite_prop28,
    "lemma27": suite_lemma27,
    "identities": suite_identities,
    "fact26": suite_fact26,
    "stability": suite_stability,
    "examples": suite_examples,
}


def run_suite(name: str, n: int | None = None, seed: int = 0) -> SuiteReport:
    try:
        body = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    report = SuiteReport(name, {"n": n, "seed": seed})
    start = time.perf_counter()
    body(report, n, seed)
    report.seconds = time.perf_counter() - start
    return report
