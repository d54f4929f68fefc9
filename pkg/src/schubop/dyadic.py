"""Exact dyadic rationals, i.e. elements of Z[1/2].

A value is stored as ``mantissa * 2**exponent`` with an odd mantissa (or the
pair ``(0, 0)`` for zero), so equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["DyadicRational", "NonDyadicError", "split_power_of_two"]


class NonDyadicError(ArithmeticError):
    """Raised when a value would leave Z[1/2]."""


def split_power_of_two(m: int) -> tuple[int, int]:
    """Return ``(odd, e)`` with ``m == odd * 2**e``; zero maps to ``(0, 0)``."""
    if m == 0:
        return 0, 0
    e = (m & -m).bit_length() - 1
    return m >> e, e


_TEXT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(?:2\^(\d+)|(\d+)))?\s*$")


class DyadicRational:
    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: int = 0, exponent: int = 0):
        m, e = split_power_of_two(int(mantissa))
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", exponent + e if m else 0)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicRational is immutable")

    @classmethod
    def coerce(cls, value) -> DyadicRational:
        if isinstance(value, DyadicRational):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, (Fraction, Rational)):
            num, den = value.numerator, value.denominator
            odd, e = split_power_of_two(den)
            if odd != 1:
                raise NonDyadicError(f"{value} is not dyadic")
            return cls(num, -e)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to DyadicRational")

    @classmethod
    def parse(cls, text: str) -> DyadicRational:
        """Parse ``m``, ``m/2^k`` or ``m/d`` with ``d`` a power of two."""
        match = _TEXT.match(text)
        if not match:
            raise ValueError(f"malformed dyadic literal {text!r}")
        m = int(match.group(1))
        if match.group(2) is not None:
            return cls(m, -int(match.group(2)))
        if match.group(3) is not None:
            return cls.coerce(Fraction(m, int(match.group(3))))
        return cls(m)

    def as_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def is_integer(self) -> bool:
        return self.exponent >= 0

    def __int__(self):
        if self.exponent < 0:
            raise ValueError(f"{self} is not an integer")
        return self.mantissa << self.exponent

    def __bool__(self):
        return self.mantissa != 0

    def _align(self, other: DyadicRational) -> tuple[int, int, int]:
        e = min(self.exponent, other.exponent)
        return self.mantissa << (self.exponent - e), other.mantissa << (other.exponent - e), e

    def __add__(self, other):
        try:
            other = DyadicRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, e = self._align(other)
        return DyadicRational(a + b, e)

    __radd__ = __add__

    def __neg__(self):
        return DyadicRational(-self.mantissa, self.exponent)

    def __sub__(self, other):
        try:
            other = DyadicRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = DyadicRational.coerce(other)
        except TypeError:
            return NotImplemented
        return DyadicRational(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = DyadicRational.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        if abs(other.mantissa) != 1:
            raise NonDyadicError(f"division by {other} leaves Z[1/2]")
        return DyadicRational(self.mantissa * other.mantissa, self.exponent - other.exponent)

    def __eq__(self, other):
        if isinstance(other, DyadicRational):
            return self.mantissa == other.mantissa and self.exponent == other.exponent
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        return self.as_fraction() < DyadicRational.coerce(other).as_fraction()

    def __hash__(self):
        return hash(self.as_fraction())

    def __repr__(self):
        return f"DyadicRational({self.mantissa}, {self.exponent})"

    def __str__(self):
        if self.exponent >= 0:
            return str(self.mantissa << self.exponent)
        return f"{self.mantissa}/2^{-self.exponent}"
