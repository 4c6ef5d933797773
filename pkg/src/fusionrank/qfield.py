"""Exact arithmetic in the real quadratic field Q(sqrt 5).

Elements are stored as a + b*sqrt(5) with rational a, b.  Since sqrt(5)
is irrational this representation is unique, so equality, zero tests and
integrality tests are exact.  No floating point is used anywhere; the
golden ratio constants below make closed-form rank expressions direct to
write down and evaluate.

The module also carries the two integer sequences those closed forms
produce: Fibonacci numbers (fast doubling, negative indices included)
and binomial coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class NonIntegralError(ValueError):
    """A Q5 value expected to be a plain integer is not one."""

    def __init__(self, value: "Q5"):
        self.value = value
        super().__init__(f"not an integer: {value}")


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class Q5:
    """An element a + b*sqrt(5) of Q(sqrt 5) with exact coefficients.

    Instances are immutable; arithmetic returns new values.  Integers and
    Fractions mix freely on either side of the operators.  ``conjugate``
    is the field automorphism sending sqrt(5) to -sqrt(5), and the norm
    a^2 - 5 b^2 is the product of an element with its conjugate.
    """

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    # -- arithmetic -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Q5 | None":
        if isinstance(other, Q5):
            return other
        if isinstance(other, Fraction) or (
            isinstance(other, int) and not isinstance(other, bool)
        ):
            return Q5(Fraction(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Q5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Q5(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Q5(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # (a1 + b1 r)(a2 + b2 r) with r^2 = 5
        return Q5(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Q5":
        """Multiplicative inverse; raises ZeroDivisionError at zero."""
        n = self.norm()
        if n == 0:
            # norm vanishes exactly at 0 because sqrt(5) is irrational
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        return Q5(self.a / n, -self.b / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "Q5":
        """Integer powers by square-and-multiply; k < 0 inverts first."""
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = ONE
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure --------------------------------------------------

    def conjugate(self) -> "Q5":
        return Q5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def to_integer(self) -> int:
        """The value as a plain int, or NonIntegralError if it is not one."""
        if self.b != 0 or self.a.denominator != 1:
            raise NonIntegralError(self)
        return self.a.numerator

    def to_json(self) -> dict:
        """Coefficients as exact decimal-free strings, e.g. {"a": "5/2", "b": "1/2"}."""
        return {"a": str(self.a), "b": str(self.b)}

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __repr__(self) -> str:
        return f"Q5({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt(5)"


ZERO = Q5(0)
ONE = Q5(1)
SQRT5 = Q5(0, 1)
PHI = Q5(Fraction(1, 2), Fraction(1, 2))
PHIBAR = PHI.conjugate()


def fib(k: int) -> int:
    """The kth Fibonacci number, any integer k.

    F(0) = 0, F(1) = 1, F(k) = F(k-1) + F(k-2); negative indices follow
    F(-k) = (-1)**(k+1) * F(k).  Fast doubling keeps this O(log |k|)
    multiplications.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("fib expects an int")
    if k < 0:
        value = _fib_pair(-k)[0]
        return value if k % 2 else -value
    return _fib_pair(k)[0]


def _fib_pair(k: int) -> tuple[int, int]:
    # returns (F(k), F(k+1)) for k >= 0
    if k == 0:
        return 0, 1
    f, g = _fib_pair(k >> 1)
    c = f * (2 * g - f)
    d = f * f + g * g
    if k & 1:
        return d, c + d
    return c, d


def binom(n: int, k: int) -> int:
    """Binomial coefficient with binom(n, k) = 0 for k > n; n, k >= 0."""
    if not isinstance(n, int) or not isinstance(k, int):
        raise TypeError("binom expects ints")
    if n < 0 or k < 0:
        raise ValueError("binom is defined for nonnegative arguments")
    if k > n:
        return 0
    return math.comb(n, k)
