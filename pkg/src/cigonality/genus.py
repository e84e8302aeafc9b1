"""Genus and multiplicity inequalities for curves on complete intersections."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import ArgumentError
from .exactnum import Enclosure, power_enclosure, to_fraction
from .hilbert import CompleteIntersectionSpec

__all__ = [
    "CurveOnCI",
    "genus_lower_bound",
    "plane_gap_bound",
    "delta_lower_bound",
    "castelnuovo_upper_bound",
    "min_power_sum",
]


@dataclass(frozen=True)
class CurveOnCI:
    """Numerical data of a curve: its degree and its multiplicities at marked points."""

    ambient: CompleteIntersectionSpec
    degree: int
    mults: Tuple[int, ...]

    def __post_init__(self):
        mults = tuple(int(m) for m in self.mults)
        object.__setattr__(self, "mults", mults)
        if self.degree < 1:
            raise ArgumentError(f"curve degree must be >= 1, got {self.degree}")
        if any(m < 0 for m in mults):
            raise ArgumentError(f"multiplicities must be >= 0, got {mults}")
        # sanity cap, far from anything geometric
        if sum(mults) > self.degree * self.ambient.ambient_dim:
            raise ArgumentError(
                f"multiplicities {mults} exceed degree * ambient dimension"
            )


def genus_lower_bound(spec: CompleteIntersectionSpec, degree: int) -> Fraction:
    """1 + (sum d_i - 2 dim - codim) * degree / 2, for curves on a very general CI.

    Returned unclamped: it can be negative, where the inequality says nothing.
    """
    if spec.dim < 2:
        raise ArgumentError("the genus bound needs dimension >= 2")
    if degree < 1:
        raise ArgumentError(f"curve degree must be >= 1, got {degree}")
    slope = sum(spec.degrees) - 2 * spec.dim - spec.codim
    return 1 + Fraction(slope * degree, 2)


def plane_gap_bound(degree: int, genus_lb) -> Fraction:
    """Upper bound (k-1)(k-2)/2 - g on sum m_i(m_i - 1)/2 after projecting to the plane.

    A negative value means no curve with these invariants exists.
    """
    if degree < 1:
        raise ArgumentError(f"curve degree must be >= 1, got {degree}")
    return Fraction((degree - 1) * (degree - 2), 2) - to_fraction(genus_lb)


def delta_enclosure(n: int, m: int, precision: int) -> Enclosure:
    """Enclosure of (n-1)^(n/(n-1)) / n * m^(n/(n-1)) - n m."""
    # (n-1)^(n/(n-1)) * m^(n/(n-1)) = ((n-1) m)^(n/(n-1))
    power = power_enclosure((n - 1) * m, n, n - 1, precision)
    return power.scale(Fraction(1, n)) - n * m


def delta_lower_bound(n: int, m: int, precision: int = 12) -> int:
    """Certified integer lower bound for p_a - p_g at a point of multiplicity m.

    Floors the enclosure of the bound for a smooth ambient variety of
    dimension n, raising precision until the floor is unambiguous; clamped
    at 0 because p_a - p_g is never negative.
    """
    if n < 2:
        raise ArgumentError(f"need ambient dimension n >= 2, got {n}")
    if m < 1:
        raise ArgumentError(f"multiplicity must be >= 1, got {m}")
    p = max(precision, 1)
    while True:
        enc = delta_enclosure(n, m, p)
        lo = math.floor(enc.lower)
        if lo == math.floor(enc.upper) or lo < 0:
            break
        p *= 2
    return max(lo, 0)


def castelnuovo_upper_bound(degrees_Y: Sequence[int], a_e: int, degree: int) -> Fraction:
    """(a_1 + ... + a_{e-1} + 2 a_e / 3) * deg C, the arithmetic genus ceiling."""
    if degree < 1:
        raise ArgumentError(f"curve degree must be >= 1, got {degree}")
    return (sum(degrees_Y) + Fraction(2 * a_e, 3)) * degree


def min_power_sum(
    total: int, parts: int, exponent_num: int, exponent_den: int, precision: int = 12
) -> Enclosure:
    """parts * (total/parts)^exponent: the real minimum of sum x_i^exponent with sum x_i = total.

    Integer vectors with the same total never go below it (convexity).
    """
    if not (total >= parts >= 1):
        raise ArgumentError(f"need total >= parts >= 1, got {total}, {parts}")
    if exponent_den < 1 or exponent_num < exponent_den:
        raise ArgumentError("exponent must be a rational >= 1")
    g = math.gcd(exponent_num, exponent_den)
    num, den = exponent_num // g, exponent_den // g
    if den == 1:
        return Enclosure.exact(parts * Fraction(total, parts) ** num)
    # (T/p)^(num/den) = (T^num * p^(j*den - num))^(1/den) / p^j with j*den >= num
    j = -(-num // den)
    radicand = total**num * parts ** (j * den - num)
    root = power_enclosure(radicand, 1, den, precision)
    return root.scale(Fraction(parts, parts**j))
