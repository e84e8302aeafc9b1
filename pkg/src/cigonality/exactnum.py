"""Exact integer/rational helpers and certified enclosures of irrational values.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are exact at every magnitude.  Irrational quantities (fractional powers,
natural logarithms) are represented by an :class:`Enclosure`, a closed
rational interval guaranteed to contain the real value.  No floating point is
used anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Optional, Union

from .errors import ArgumentError

Number = Union[int, Fraction]

__all__ = [
    "Enclosure",
    "binomial",
    "factorial",
    "iroot",
    "power_enclosure",
    "log_enclosure",
    "to_fraction",
]


def to_fraction(x) -> Fraction:
    """Coerce an int/Fraction (or ``"p/q"`` string) to Fraction; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ArgumentError("booleans are not numbers here")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as exc:
            raise ArgumentError(f"cannot parse rational {x!r}") from exc
    raise ArgumentError(f"expected an exact rational, got {type(x).__name__}")


def binomial(top: int, bottom: int) -> int:
    """C(top, bottom), defined to be 0 whenever top < bottom (negative top included)."""
    if bottom < 0:
        raise ArgumentError(f"binomial: negative lower index {bottom}")
    if top < bottom:
        return 0
    return math.comb(top, bottom)


def factorial(n: int) -> int:
    if n < 0:
        raise ArgumentError(f"factorial of negative integer {n}")
    return math.factorial(n)


def iroot(value: int, k: int) -> int:
    """Floor of the real k-th root of a nonnegative integer."""
    if value < 0:
        raise ArgumentError("iroot of a negative integer")
    if k < 1:
        raise ArgumentError("iroot degree must be >= 1")
    if k == 1 or value < 2:
        return value
    if k == 2:
        return math.isqrt(value)
    # Newton iteration from an overestimate; decreases monotonically to the floor.
    x = 1 << -(-value.bit_length() // k)
    while True:
        y = ((k - 1) * x + value // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval ``[lower, upper]`` containing an exact real value.

    Arithmetic is exact on the endpoints, so every composite enclosure is
    automatically outward rounded: the exact value of the composite
    expression lies inside the result.
    """

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        lo = to_fraction(self.lower)
        hi = to_fraction(self.upper)
        if lo > hi:
            raise ArgumentError(f"enclosure with lower {lo} > upper {hi}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def exact(cls, value) -> "Enclosure":
        v = to_fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def contains(self, value) -> bool:
        v = to_fraction(value)
        return self.lower <= v <= self.upper

    def contains_enclosure(self, other: "Enclosure") -> bool:
        return self.lower <= other.lower and other.upper <= self.upper

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _lift(other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return other
        return Enclosure.exact(other)

    def __add__(self, other) -> "Enclosure":
        o = self._lift(other)
        return Enclosure(self.lower + o.lower, self.upper + o.upper)

    __radd__ = __add__

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.upper, -self.lower)

    def __sub__(self, other) -> "Enclosure":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Enclosure":
        return self._lift(other) - self

    def __mul__(self, other) -> "Enclosure":
        if not isinstance(other, Enclosure):
            return self.scale(other)
        products = (
            self.lower * other.lower,
            self.lower * other.upper,
            self.upper * other.lower,
            self.upper * other.upper,
        )
        return Enclosure(min(products), max(products))

    __rmul__ = __mul__

    def scale(self, factor) -> "Enclosure":
        c = to_fraction(factor)
        if c >= 0:
            return Enclosure(self.lower * c, self.upper * c)
        return Enclosure(self.upper * c, self.lower * c)

    def __truediv__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            if other.lower <= 0 <= other.upper:
                raise ArgumentError("division by an enclosure containing zero")
            return self * Enclosure(1 / other.upper, 1 / other.lower)
        c = to_fraction(other)
        if c == 0:
            raise ArgumentError("division by zero")
        return self.scale(1 / c)

    # -- comparisons ----------------------------------------------------
    def compare_le(self, rhs) -> Optional[bool]:
        """Decide ``value <= rhs``; ``None`` when the enclosure is not decisive."""
        o = self._lift(rhs)
        if self.upper <= o.lower:
            return True
        if self.lower > o.upper:
            return False
        return None

    def compare_lt(self, rhs) -> Optional[bool]:
        """Decide ``value < rhs``; ``None`` when the enclosure is not decisive."""
        o = self._lift(rhs)
        if self.upper < o.lower:
            return True
        if self.lower >= o.upper:
            return False
        return None

    def round_outward(self, digits: int) -> "Enclosure":
        """Widen both endpoints onto the decimal grid 10**-digits."""
        scale = 10**digits
        lo = Fraction(math.floor(self.lower * scale), scale)
        hi = Fraction(math.ceil(self.upper * scale), scale)
        return Enclosure(lo, hi)

    def floor_lower(self) -> int:
        return math.floor(self.lower)

    def ceil_upper(self) -> int:
        return math.ceil(self.upper)

    def __repr__(self) -> str:
        return f"Enclosure({self.lower}, {self.upper})"


def power_enclosure(base: int, num: int, den: int, precision: int) -> Enclosure:
    """Enclosure of ``base ** (num/den)`` of width at most 10**-precision.

    The root is extracted exactly with integer arithmetic on
    ``base**num * 10**(den*precision)``, rounded down for the lower endpoint
    and up for the upper one.  Perfect powers come back as a point interval.
    """
    if base < 0:
        raise ArgumentError("power_enclosure requires base >= 0")
    if den < 1:
        raise ArgumentError("power_enclosure requires den >= 1")
    if precision < 1:
        raise ArgumentError("power_enclosure requires precision >= 1")
    if num == 0:
        return Enclosure.exact(1)
    if base == 0:
        if num < 0:
            raise ArgumentError("zero to a negative power")
        return Enclosure.exact(0)
    scale = 10**precision
    target = scale**den
    if num > 0:
        radicand = base**num * target
        root = iroot(radicand, den)
        exact = root**den == radicand
    else:
        v = base ** (-num)
        radicand = target // v
        root = iroot(radicand, den)
        exact = root**den * v == target
    if exact:
        return Enclosure.exact(Fraction(root, scale))
    return Enclosure(Fraction(root, scale), Fraction(root + 1, scale))


def _atanh_series(z: Fraction, tol: Fraction) -> Enclosure:
    """Enclosure of ``2*atanh(z)`` for |z| <= 1/3, tail below ``tol``."""
    if z == 0:
        return Enclosure.exact(0)
    z2 = z * z
    tail_factor = 2 / (1 - z2)
    total = Fraction(0)
    power = z
    j = 0
    while True:
        total += 2 * power / (2 * j + 1)
        j += 1
        power *= z2
        # every remaining term has the sign of z; their sum is below this bound
        tail = tail_factor * abs(power) / (2 * j + 1)
        if tail <= tol:
            break
    if z > 0:
        return Enclosure(total, total + tail)
    return Enclosure(total - tail, total)


def log_enclosure(x, precision: int) -> Enclosure:
    """Enclosure of the natural logarithm of a positive rational.

    Reduces ``x = 2**k * y`` with ``y`` in (1/2, 2] and sums the
    ``2*atanh((y-1)/(y+1))`` series with an explicit tail bound.  The result
    is rounded outward onto the grid 10**-(precision+1), so its width is at
    most 0.21 * 10**-precision and never grows with precision.
    """
    if precision < 1:
        raise ArgumentError("log_enclosure requires precision >= 1")
    q = to_fraction(x)
    if q <= 0:
        raise ArgumentError(f"logarithm of nonpositive value {q}")
    if q == 1:
        return Enclosure.exact(0)
    k = q.numerator.bit_length() - q.denominator.bit_length()
    y = q / Fraction(2) ** k
    while y > 2:
        y /= 2
        k += 1
    while y <= Fraction(1, 2):
        y *= 2
        k -= 1
    budget = Fraction(1, 10 ** (precision + 2))
    log_y = _atanh_series((y - 1) / (y + 1), budget / 2)
    if k:
        log2 = _atanh_series(Fraction(1, 3), budget / (2 * abs(k)))
        result = log2.scale(k) + log_y
    else:
        result = log_y
    return result.round_outward(precision + 1)
