"""Command-line front end: ``schubop eval | expand | verify``.

Expressions are read left to right; ``|`` applies an operator to everything
on its left, so ``Qt[2,1]*Y[1] | d1 | nablaB(1)`` means
``((Q̃_{21} Y_{[1]}) ∂_1) ∇_1^B``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import ptilde as pt
from . import schubert as sb
from . import symfun as sf
from .divdiff import apply_element, apply_word, word_nabla_B, word_nabla_D, word_partial_v
from .dyadic import DyadicRational
from .polyring import SparsePolynomial
from .suites import SUITES, run_suite
from .weyl import HEART, ZERO_C, SignedPermutation, distinguished, parse_word

DEFAULT_CAP = 8


class ExpressionError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<number>\d+)
      | (?P<name>[A-Za-z][A-Za-z0-9]*)
      | (?P<string>"[^"]*")
      | (?P<punct>[\[\](),+\-*|!^@/])
    )""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# the syntax tree is made of tuples: (tag, position, *payload)


class Parser:
    """Recursive descent; ``|`` binds loosest, then ``+ -``, then ``*``, then ``!``."""

    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        tok = self.tok
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ExpressionError(f"expected {want}, found {got}", tok.pos)
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.tok.text == text and self.tok.kind != "string":
            self.i += 1
            return True
        return False

    def parse(self):
        node = self.pipeline()
        if self.tok.kind != "end":
            raise ExpressionError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def pipeline(self):
        node = self.sum()
        while self.tok.text == "|":
            self.take("|")
            node = self.realizations(("apply", self.tok.pos, node, self.operator()))
        return node

    def sum(self):
        node = self.product()
        while self.tok.text in ("+", "-"):
            op = self.take()
            node = ("add" if op.text == "+" else "sub", op.pos, node, self.product())
        return node

    def product(self):
        node = self.unary()
        while self.tok.text == "*":
            op = self.take("*")
            node = ("mul", op.pos, node, self.unary())
        return node

    def unary(self):
        if self.tok.text == "-":
            op = self.take("-")
            return ("neg", op.pos, self.unary())
        return self.realizations(self.primary())

    def realizations(self, node):
        while self.tok.text == "!":
            op = self.take("!")
            m = int(self.take(kind="number").text)
            if not 1 <= m <= self.n:
                raise ExpressionError(f"cannot realize in {m} variables inside n={self.n}", op.pos)
            node = ("realize", op.pos, node, m)
        return node

    def int_list(self) -> list[int]:
        self.take("[")
        values: list[int] = []
        while not self.accept("]"):
            if values:
                self.take(",")
            sign = -1 if self.accept("-") else 1
            values.append(sign * int(self.take(kind="number").text))
        return values

    def primary(self):
        tok = self.tok
        if self.accept("("):
            node = self.pipeline()
            self.take(")")
            return node
        if tok.kind == "number":
            self.take()
            value = DyadicRational(int(tok.text))
            if self.accept("/"):
                base = self.take(kind="number")
                if base.text != "2":
                    raise ExpressionError("dyadic literals are written m/2^k", base.pos)
                self.take("^")
                value = DyadicRational(int(tok.text), -int(self.take(kind="number").text))
            return ("const", tok.pos, value)
        if tok.kind != "name":
            raise ExpressionError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)
        self.take()
        name = tok.text
        if name in ("Qt", "Pt", "SP", "SQ"):
            parts = self.int_list()
            self._strict(parts, tok.pos, bound=None if name.startswith("S") else self.n)
            return (name, tok.pos, tuple(parts))
        if name == "Y":
            alpha = self.int_list()
            if any(a < 0 for a in alpha) or len(alpha) > self.n:
                raise ExpressionError(f"bad code {alpha} for n={self.n}", tok.pos)
            return ("Y", tok.pos, tuple(alpha))
        if name == "x":
            self.take("^")
            exp = self.int_list()
            if len(exp) > self.n or any(a < 0 for a in exp):
                raise ExpressionError(f"bad exponent {exp} for n={self.n}", tok.pos)
            return ("x", tok.pos, tuple(exp) + (0,) * (self.n - len(exp)))
        if name == "s":
            lam = self.int_list()
            self.take("@")
            k = int(self.take(kind="number").text)
            if not 1 <= k <= self.n or len([p for p in lam if p]) > k:
                raise ExpressionError(f"s[{lam}]@{k} does not fit in n={self.n}", tok.pos)
            try:
                pt.normalize(lam)
            except ValueError as exc:
                raise ExpressionError(str(exc), tok.pos) from None
            return ("s", tok.pos, tuple(lam), k)
        if name in ("XB", "XD"):
            image = self.int_list()
            try:
                w = SignedPermutation(tuple(image)).require(name[1])
            except ValueError as exc:
                raise ExpressionError(str(exc), tok.pos) from None
            if w.size != self.n:
                raise ExpressionError(f"{w} does not have size n={self.n}", tok.pos)
            return ("X", tok.pos, name[1], w)
        if name in ("p", "e", "q"):
            self.take("[")
            k = int(self.take(kind="number").text)
            self.take("]")
            return ("gen", tok.pos, name, k)
        raise ExpressionError(f"unknown atom {name!r}", tok.pos)

    def _strict(self, parts, pos, bound):
        # trailing zeros are allowed, as in Pt[6,5,4,3,2,1,0]
        positive = list(parts)
        while positive and positive[-1] == 0:
            positive.pop()
        if any(p <= 0 for p in positive) or any(a <= b for a, b in zip(positive, positive[1:])):
            raise ExpressionError(f"{parts} is not a strict partition", pos)
        if bound is not None and positive and positive[0] > bound:
            raise ExpressionError(f"{parts} has a part larger than n={bound}", pos)

    def operator(self):
        tok = self.take(kind="name")
        name, n = tok.text, self.n
        simple = re.fullmatch(r"d(\d+)", name)
        if name == "d" and self.tok.kind == "number":
            simple = re.fullmatch(r"(\d+)", self.take().text)
        if simple:
            i = int(simple.group(1))
            if i >= n:
                raise ExpressionError(f"d{i} needs i < n={n}", tok.pos)
            return ("word", tok.pos, (i,))
        if name == "dh":
            if n < 2:
                raise ExpressionError("dh needs n >= 2", tok.pos)
            return ("word", tok.pos, (HEART,))
        if name == "d0c":
            return ("word", tok.pos, (ZERO_C,))
        if name == "dw":
            word_tok = self.take(kind="string")
            try:
                word = parse_word(word_tok.text[1:-1])
            except ValueError as exc:
                raise ExpressionError(str(exc), word_tok.pos) from None
            if any(letter >= n for letter in word) or (HEART in word and n < 2):
                raise ExpressionError(f"word {word_tok.text} does not act on n={n} variables", word_tok.pos)
            return ("word", tok.pos, word)
        if name in ("nablaB", "nablaD"):
            self.take("(")
            k = int(self.take(kind="number").text)
            self.take(")")
            try:
                word = word_nabla_B(k, n) if name == "nablaB" else word_nabla_D(k, n)
            except ValueError as exc:
                raise ExpressionError(str(exc), tok.pos) from None
            return ("word", tok.pos, word)
        if name == "dv":
            return ("word", tok.pos, word_partial_v(n))
        if name in ("dmaxA", "dmaxB", "dmaxD"):
            if name == "dmaxD" and n < 2:
                raise ExpressionError("dmaxD needs n >= 2", tok.pos)
            return ("longest", tok.pos, name[-1])
        if name in ("Us", "Ue", "Ve"):
            return ("vertex", tok.pos, name)
        raise ExpressionError(f"unknown operator {name!r}", tok.pos)


class Evaluator:
    def __init__(self, n: int, cap: int = DEFAULT_CAP):
        self.n = n
        self.cap = cap

    def run(self, node):
        tag, pos = node[0], node[1]
        try:
            return getattr(self, "_" + tag)(pos, *node[2:])
        except ExpressionError:
            raise
        except (ValueError, ArithmeticError) as exc:
            raise ExpressionError(str(exc), pos) from None

    def _const(self, pos, value):
        return value

    def _Qt(self, pos, parts):
        return pt.qtilde(parts, self.n)

    def _Pt(self, pos, parts):
        return pt.ptilde(parts, self.n)

    def _SP(self, pos, parts):
        return sf.schur_PQ(parts, self.cap, "P")

    def _SQ(self, pos, parts):
        return sf.schur_PQ(parts, self.cap, "Q")

    def _Y(self, pos, alpha):
        return sb.schubert_Y(alpha, self.n, stable=True)

    def _x(self, pos, exp):
        return SparsePolynomial.monomial(self.n, exp)

    def _s(self, pos, lam, k):
        return sb.schur_S(lam, k).embed(self.n)

    def _X(self, pos, t, w):
        return sb.schubert_X(w, t)

    def _gen(self, pos, kind, k):
        return sf.generator(kind, k, self.cap)

    def _realize(self, pos, node, m):
        value = self.run(node)
        if not isinstance(value, sf.SymFunExpr):
            raise ExpressionError("! realizes a symmetric function, not a polynomial", pos)
        return sf.realize(value, m).embed(self.n)

    def _neg(self, pos, node):
        return -self.run(node)

    def _binary(self, pos, a, b, op):
        a, b = self.run(a), self.run(b)
        poly_a, poly_b = isinstance(a, SparsePolynomial), isinstance(b, SparsePolynomial)
        sym_a, sym_b = isinstance(a, sf.SymFunExpr), isinstance(b, sf.SymFunExpr)
        if (poly_a and sym_b) or (sym_a and poly_b):
            raise ExpressionError("mixing a symmetric function with a polynomial; realize it with !n", pos)
        if not (poly_a or poly_b or sym_a or sym_b):
            a = SparsePolynomial.constant(self.n, a)
        elif sym_a or sym_b:
            a, b = (_to_fraction(v) for v in (a, b))
        return op(a, b)

    def _add(self, pos, a, b):
        return self._binary(pos, a, b, lambda u, v: u + v)

    def _sub(self, pos, a, b):
        return self._binary(pos, a, b, lambda u, v: u - v)

    def _mul(self, pos, a, b):
        return self._binary(pos, a, b, lambda u, v: u * v)

    def _apply(self, pos, node, op):
        value = self.run(node)
        kind = op[0]
        if kind == "vertex":
            if not isinstance(value, sf.SymFunExpr):
                raise ExpressionError(f"{op[2]} acts on symmetric functions (SP, SQ, p, e, q)", op[1])
            return sf.vertex(op[2], value)
        value = self.polynomial(value, op[1])
        if kind == "word":
            return apply_word(value, op[2])
        return apply_element(value, distinguished(op[2], self.n), op[2])

    def polynomial(self, value, pos) -> SparsePolynomial:
        if isinstance(value, SparsePolynomial):
            return value
        if isinstance(value, sf.SymFunExpr):
            raise ExpressionError("divided differences act on polynomials; realize with !n first", pos)
        return SparsePolynomial.constant(self.n, value)


def _to_fraction(v):
    return v.as_fraction() if isinstance(v, DyadicRational) else v


def evaluate(text: str, n: int, cap: int = DEFAULT_CAP):
    """Parse then evaluate; all range errors surface before any computation."""
    tree = Parser(text, n).parse()
    value = Evaluator(n, cap).run(tree)
    if isinstance(value, DyadicRational):
        value = SparsePolynomial.constant(n, value)
    return value


# rendering


def _latex_coeff(c: DyadicRational) -> str:
    if c.exponent >= 0:
        return str(c.mantissa << c.exponent)
    return rf"\frac{{{c.mantissa}}}{{{1 << -c.exponent}}}"


def polynomial_latex(f: SparsePolynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for exp, c in f.sorted_terms():
        mono = " ".join(f"x_{{{i + 1}}}" + (f"^{{{a}}}" if a > 1 else "") for i, a in enumerate(exp) if a)
        negative = c.mantissa < 0
        mag = -c if negative else c
        body = mono if mono and mag == 1 else (_latex_coeff(mag) + (" " + mono if mono else ""))
        out.append(("-" if negative else "+", body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def symfun_json(f: sf.SymFunExpr) -> dict:
    return {
        "cap": f.cap,
        "terms": [{"p": list(lam), "coeff": str(c)} for lam, c in sorted(f.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))],
    }


def symfun_latex(f: sf.SymFunExpr) -> str:
    if f.is_zero():
        return "0"
    out = []
    for lam, c in sorted(f.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        mono = " ".join(f"p_{{{k}}}" for k in lam)
        mag = abs(c)
        coeff = "" if mag == 1 and mono else (str(mag) if mag.denominator == 1 else rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}")
        out.append(("-" if c < 0 else "+", (coeff + " " + mono).strip()))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def render(value, fmt: str) -> str:
    if isinstance(value, sf.SymFunExpr):
        if fmt == "json":
            return json.dumps(symfun_json(value), sort_keys=True)
        return symfun_latex(value) if fmt == "latex" else str(value)
    if fmt == "json":
        return json.dumps(value.to_json(), sort_keys=True)
    return polynomial_latex(value) if fmt == "latex" else value.to_text()


def expansion(f: SparsePolynomial, t: str, basis: str) -> list[tuple[tuple[int, ...], SparsePolynomial]]:
    """``f = Σ c_I B_I`` with ``B = P̃`` or ``Q̃``, terms ordered by decreasing partition."""
    coeffs = pt.ptilde_decompose(f, f.n, t, method="linear")
    out = []
    for I in sorted(coeffs, key=lambda I: (-sum(I), tuple(-p for p in I))):
        c = coeffs[I]
        out.append((I, c.scale(Fraction(1, 2 ** len(I))) if basis == "Qt" else c))
    return out


def render_expansion(terms, basis: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"basis": basis, "terms": [{"partition": list(I), "coeff": c.to_json()} for I, c in terms]},
                          sort_keys=True)
    if not terms:
        return "0"
    pieces = []
    for I, c in terms:
        atom = f"{basis}[{','.join(map(str, I))}]" if fmt != "latex" else \
            (r"\widetilde{%s}_{(%s)}" % ("Q" if basis == "Qt" else "P", ",".join(map(str, I))))
        text = c.to_text() if fmt != "latex" else polynomial_latex(c)
        if c.is_constant():
            value = c.constant_term()
            sign = "-" if value.mantissa < 0 else "+"
            mag = -value if value.mantissa < 0 else value
            body = atom if mag == 1 else (f"{mag}*{atom}" if fmt != "latex" else f"{_latex_coeff(mag)} {atom}")
        else:
            sign, body = "+", (f"({text})*{atom}" if fmt != "latex" else rf"\left({text}\right) {atom}")
        pieces.append((sign, body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# commands


def _check_n(n: int, max_n: int):
    if n < 1:
        raise SystemExit("error: --n must be positive")
    if n > max_n:
        raise SystemExit(f"error: n={n} exceeds --max-n={max_n}")


def _report_error(text: str, exc: ExpressionError) -> int:
    print(f"error: {exc} (column {exc.position + 1})", file=sys.stderr)
    print("  " + text, file=sys.stderr)
    print("  " + " " * exc.position + "^", file=sys.stderr)
    return 2


def cmd_eval(args) -> int:
    _check_n(args.n, args.max_n)
    try:
        value = evaluate(args.expression, args.n, args.cap)
    except ExpressionError as exc:
        return _report_error(args.expression, exc)
    t = getattr(args, "expand_ptilde", None)
    if t:
        if not isinstance(value, SparsePolynomial):
            print("error: only polynomials can be expanded in the P-tilde basis", file=sys.stderr)
            return 2
        basis = args.basis or ("Qt" if t == "B" else "Pt")
        try:
            terms = expansion(value, t, basis)
        except pt.NotSymmetric as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(render_expansion(terms, basis, args.format))
    else:
        print(render(value, args.format))
    return 0


def cmd_verify(args) -> int:
    if args.n is not None:
        _check_n(args.n, args.max_n)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(name not in SUITES for name in names):
        print(f"error: unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}", file=sys.stderr)
        return 2
    reports = [run_suite(name, args.n, args.seed) for name in names]
    failures = sum(len(r.failures) for r in reports)
    if args.format == "json":
        doc = [r.to_json() for r in reports]
        print(json.dumps(doc[0] if len(doc) == 1 else doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            status = "ok" if r.ok else "FAILED"
            print(f"{r.suite}: {r.cases} cases, {len(r.failures)} failures, {r.seconds:.2f}s  {status}")
            for note in r.notes:
                print(f"  note: {note}")
            for f in r.failures[: args.show]:
                print(f"  case {json.dumps(f.case)}")
                print(f"    expected {f.expected}")
                print(f"    actual   {f.actual}")
    # exit status is the failure count, saturated at the largest portable value
    return min(failures, 255)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubop", description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8, help="refuse larger alphabets (default 8)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("expression")
        p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
        p.add_argument("--basis", choices=("Pt", "Qt"), help="basis used for P-tilde expansions")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="degree cap for symmetric functions")
        p.add_argument("--max-n", type=int, default=argparse.SUPPRESS)

    ev = sub.add_parser("eval", help="evaluate an expression")
    common(ev)
    ev.add_argument("--expand-ptilde", choices=("B", "D"))
    ev.set_defaults(func=cmd_eval)

    ex = sub.add_parser("expand", help="evaluate and expand in the P-tilde basis")
    common(ex)
    ex.add_argument("--type", dest="expand_ptilde", choices=("B", "D"), default="B")
    ex.set_defaults(func=cmd_eval)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("suite", help="suite name or 'all'")
    ve.add_argument("--n", type=int, help="restrict to a single rank")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--format", choices=("plain", "json"), default="plain")
    ve.add_argument("--show", type=int, default=5, help="failures printed per suite")
    ve.add_argument("--max-n", type=int, default=argparse.SUPPRESS)
    ve.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
