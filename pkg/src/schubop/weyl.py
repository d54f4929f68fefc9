"""Signed permutations realizing the Weyl groups of types A, B and D.

An element ``w`` is coded by its one-line image ``[w(1), ..., w(n)]`` with
negative integers for barred entries; ``w(-i) = -w(i)``.  The product is
composition of maps, ``compose(u, v)(i) = u(v(i))``, which agrees with the right
action on vectors: ``[1..n]·(uv) = ([1..n]·u)·v`` where ``s_i`` swaps positions
``i, i+1``, ``s_0`` negates position 1 and ``s_h`` sends ``[v1, v2, ...]`` to
``[-v2, -v1, ...]``.

Generator letters are ints: ``i >= 1`` for ``s_i``, ``0`` for ``s_0``,
:data:`HEART` for the type D generator and :data:`ZERO_C` for the operator-only
letter of the type C divided difference.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

__all__ = [
    "HEART", "ZERO_C", "GroupType", "SignedPermutation", "MembershipError",
    "BoundExceeded", "identity", "generator", "generators", "compose", "inverse",
    "evaluate", "length", "reduced_word", "code", "code_inverse",
    "involution_prime", "enumerate_group", "bfs_lengths", "distinguished",
    "parse_letter", "format_letter", "parse_word", "format_word",
]

HEART = -1
ZERO_C = -2

DEFAULT_ENUMERATION_BOUND = 6


class MembershipError(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


class GroupType(str, Enum):
    A = "A"
    B = "B"
    D = "D"

    @classmethod
    def of(cls, t) -> GroupType:
        return t if isinstance(t, GroupType) else cls(str(t).upper())


@dataclass(frozen=True)
class SignedPermutation:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        object.__setattr__(self, "image", image)
        if sorted(abs(v) for v in image) != list(range(1, len(image) + 1)):
            raise ValueError(f"{list(image)} is not a signed permutation")

    @classmethod
    def of(cls, image: Iterable[int], group=None) -> SignedPermutation:
        w = cls(tuple(image))
        if group is not None:
            w.require(group)
        return w

    @classmethod
    def parse(cls, text: str, group=None) -> SignedPermutation:
        body = text.strip().strip("[]")
        return cls.of((int(v) for v in body.split(",") if v.strip()), group)

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1] if i > 0 else -self.image[-i - 1]

    def negatives(self) -> int:
        return sum(1 for v in self.image if v < 0)

    def belongs_to(self, t) -> bool:
        t = GroupType.of(t)
        if t is GroupType.A:
            return self.negatives() == 0
        if t is GroupType.D:
            return self.negatives() % 2 == 0
        return True

    def require(self, t) -> SignedPermutation:
        if not self.belongs_to(t):
            raise MembershipError(f"{self} is not in the Weyl group of type {GroupType.of(t).value}")
        return self

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __str__(self):
        return "[" + ",".join(str(v) for v in self.image) + "]"


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def generator(letter: int, n: int) -> SignedPermutation:
    image = list(range(1, n + 1))
    if letter >= 1:
        if letter >= n:
            raise ValueError(f"s_{letter} needs n > {letter}")
        image[letter - 1], image[letter] = image[letter], image[letter - 1]
    elif letter == 0:
        image[0] = -1
    elif letter == HEART:
        if n < 2:
            raise ValueError("s_h needs n >= 2")
        image[0], image[1] = -2, -1
    else:
        raise ValueError(f"letter {format_letter(letter)} is not a group generator")
    return SignedPermutation(tuple(image))


def generators(t, n: int) -> list[int]:
    """Generator letters of the group, in the order used for greedy descents."""
    t = GroupType.of(t)
    simple = list(range(1, n))
    if t is GroupType.B:
        return [0] + simple
    if t is GroupType.D:
        return ([HEART] if n >= 2 else []) + simple
    return simple


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    if u.size != v.size:
        raise ValueError(f"sizes {u.size} and {v.size} differ")
    ui = u.image
    return SignedPermutation(tuple(ui[t - 1] if t > 0 else -ui[-t - 1] for t in v.image))


def inverse(u: SignedPermutation) -> SignedPermutation:
    out = [0] * u.size
    for i, t in enumerate(u.image, start=1):
        out[abs(t) - 1] = i if t > 0 else -i
    return SignedPermutation(tuple(out))


def evaluate(word: Sequence[int], n: int) -> SignedPermutation:
    w = identity(n)
    for letter in word:
        w = compose(w, generator(letter, n))
    return w


def _inv(image) -> int:
    n = len(image)
    return sum(1 for i in range(n) for j in range(i + 1, n) if image[i] > image[j])


def _nsp(image) -> int:
    n = len(image)
    return sum(1 for i in range(n) for j in range(i + 1, n) if image[i] + image[j] < 0)


def length(w: SignedPermutation, t) -> int:
    """Coxeter length of ``w`` in the group of type ``t``."""
    t = GroupType.of(t)
    w.require(t)
    im = w.image
    if t is GroupType.A:
        return _inv(im)
    if t is GroupType.B:
        return _inv(im) + _nsp(im) + w.negatives()
    return _inv(im) + _nsp(im)


def _is_right_descent(image, letter: int) -> bool:
    if letter >= 1:
        return image[letter - 1] > image[letter]
    if letter == 0:
        return image[0] < 0
    return image[0] + image[1] < 0


def reduced_word(w: SignedPermutation, t) -> tuple[int, ...]:
    """Reduced word built by repeatedly stripping the lowest right descent."""
    t = GroupType.of(t)
    w.require(t)
    gens = generators(t, w.size)
    word: list[int] = []
    while True:
        for letter in gens:
            if _is_right_descent(w.image, letter):
                w = compose(w, generator(letter, w.size))
                word.append(letter)
                break
        else:
            break
    return tuple(reversed(word))


def code(w: SignedPermutation) -> tuple[int, ...]:
    """Lehmer code ``c_i = #{j > i : w(j) < w(i)}`` of a plain permutation."""
    w.require(GroupType.A)
    im = w.image
    n = len(im)
    return tuple(sum(1 for j in range(i + 1, n) if im[j] < im[i]) for i in range(n))


def code_inverse(alpha: Sequence[int], n: int | None = None) -> SignedPermutation:
    n = len(alpha) if n is None else n
    alpha = list(alpha) + [0] * (n - len(alpha))
    if len(alpha) > n:
        raise ValueError(f"code {alpha} longer than {n}")
    remaining = list(range(1, n + 1))
    image = []
    for i, a in enumerate(alpha):
        if not 0 <= a <= n - 1 - i:
            raise ValueError(f"{alpha} is not a Lehmer code (entry {i + 1} exceeds {n - 1 - i})")
        image.append(remaining.pop(a))
    return SignedPermutation(tuple(image))


def involution_prime(alpha: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """``alpha -> alpha'`` with ``code(w) = alpha -> code(w·omega)``."""
    n = len(alpha) if n is None else n
    w = code_inverse(alpha, n)
    return code(compose(w, distinguished("A", n)))


def bfs_lengths(t, n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> dict[SignedPermutation, int]:
    """All group elements with their word-metric distance from the identity."""
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")
    gens = [generator(g, n) for g in generators(t, n)]
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        d = dist[w] + 1
        for s in gens:
            ws = compose(w, s)
            if ws not in dist:
                dist[ws] = d
                queue.append(ws)
    return dist


def enumerate_group(t, n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> set[SignedPermutation]:
    return set(bfs_lengths(t, n, bound))


def distinguished(t, n: int, which: str = "longest") -> SignedPermutation:
    t = GroupType.of(t)
    if which == "upsilon":
        if t is not GroupType.D:
            raise ValueError("upsilon is only defined in type D")
        return compose(distinguished("A", n), distinguished("D", n))
    if which != "longest":
        raise ValueError(f"unknown distinguished element {which!r}")
    if t is GroupType.A:
        return SignedPermutation(tuple(range(n, 0, -1)))
    if t is GroupType.B or n % 2 == 0:
        return SignedPermutation(tuple(-i for i in range(1, n + 1)))
    return SignedPermutation((1,) + tuple(-i for i in range(2, n + 1)))


def parse_letter(token: str) -> int:
    token = token.strip().lower()
    if token in ("h", "♡"):
        return HEART
    if token in ("0c", "0^c"):
        return ZERO_C
    value = int(token)
    if value < 0:
        raise ValueError(f"bad generator letter {token!r}")
    return value


def format_letter(letter: int) -> str:
    if letter == HEART:
        return "h"
    if letter == ZERO_C:
        return "0c"
    return str(letter)


def parse_word(text: str) -> tuple[int, ...]:
    return tuple(parse_letter(tok) for tok in text.split())


def format_word(word: Sequence[int]) -> str:
    return " ".join(format_letter(letter) for letter in word)
