"""Dimension counts behind the choice of the surfaces V_1, V_2 through the blown-up points.

Each check computes h^0 exactly with the nested sum and, next to it, every
link of the closed-form estimate chain, so a failing link can be located.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence, Tuple

from .errors import ArgumentError
from .hilbert import CompleteIntersectionSpec, h0_ci_nested, h0_projective

__all__ = [
    "DimCountReport",
    "check_first_surface",
    "check_second_surface",
    "vanishing_threshold",
    "castelnuovo_slope",
]


@dataclass(frozen=True)
class DimCountReport:
    twist: int
    exact_h0: int
    estimate_lower_bound: Fraction
    required: int
    exact_passes: bool
    estimate_passes: bool
    chain: Tuple[Tuple[str, Fraction], ...] = ()

    @property
    def both_pass(self) -> bool:
        return self.exact_passes and self.estimate_passes

    @property
    def chain_monotone(self) -> bool:
        """exact >= every link, and each link >= the next."""
        values = [Fraction(self.exact_h0)] + [v for _, v in self.chain]
        return all(x >= y for x, y in zip(values, values[1:]))


def _validate(e: int, degrees_Y: Sequence[int], a_e: int, s: int) -> Tuple[int, ...]:
    if e < 2:
        raise ArgumentError(f"need e >= 2, got {e}")
    degrees = tuple(int(d) for d in degrees_Y)
    if len(degrees) != e - 1:
        raise ArgumentError(f"expected {e - 1} threefold degrees, got {len(degrees)}")
    if any(d < 1 for d in degrees) or a_e < 3:
        raise ArgumentError("degrees must be positive and a_e >= 3")
    if s < 0:
        raise ArgumentError(f"s must be >= 0, got {s}")
    return degrees


def _truncated_sum(degrees: Sequence[int], e: int, twist: int, n: int) -> int:
    ranges = [range(a // (3 * e) + 1) for a in degrees]
    return sum(h0_projective(n, twist - sum(js)) for js in product(*ranges))


def _chain(degrees, e, a_e, n, twist):
    """Links of the estimate chain for P^n, from the truncated sum down to the closed form."""
    tops = [a // (3 * e) for a in degrees]
    count = math.prod(t + 1 for t in tops)
    lowest = twist - sum(tops) + 1
    head = Fraction(math.prod(degrees), (3 * e) ** len(degrees))
    tail = a_e // 3 - (e - 1) * (a_e // (3 * e)) + 1
    alpha = math.prod(degrees)
    closed = Fraction(alpha * a_e**n, math.factorial(n) * (3 * e) ** (e - 1 + n))
    return (
        ("truncated sum", Fraction(_truncated_sum(degrees, e, twist, n))),
        ("constant summand", Fraction(count * max(lowest, 0) ** n, math.factorial(n))),
        ("product form", head * Fraction(max(tail, 0) ** n, math.factorial(n))),
        ("closed form", closed),
    )


def check_first_surface(e: int, degrees_Y: Sequence[int], a_e: int, s: int) -> DimCountReport:
    """h^0(Y, O(floor(a_e/3))) on the threefold Y of type degrees_Y, against s + 1."""
    degrees = _validate(e, degrees_Y, a_e, s)
    twist = a_e // 3
    exact = h0_ci_nested(CompleteIntersectionSpec(3, degrees), twist)
    chain = _chain(degrees, e, a_e, 3, twist)
    bound = chain[-1][1]
    return DimCountReport(
        twist=twist,
        exact_h0=exact,
        estimate_lower_bound=bound,
        required=s + 1,
        exact_passes=exact > s + 1,
        estimate_passes=bound > s + 1,
        chain=chain,
    )


def check_second_surface(
    e: int, degrees_Y: Sequence[int], b1: int, a_e: int, s: int
) -> DimCountReport:
    """h^0(V_1, O(floor(a_e/3))) on the surface V_1 = Y cut by a degree-b1 hypersurface."""
    degrees = _validate(e, degrees_Y, a_e, s)
    twist = a_e // 3
    if not 1 <= b1 <= twist:
        raise ArgumentError(f"need 1 <= b1 <= floor(a_e/3) = {twist}, got {b1}")
    exact = h0_ci_nested(CompleteIntersectionSpec(2, degrees + (b1,)), twist)
    # only the j_0 = 0 slice of the sum is kept in the estimate
    chain = _chain(degrees, e, a_e, 2, twist)
    bound = chain[-1][1]
    return DimCountReport(
        twist=twist,
        exact_h0=exact,
        estimate_lower_bound=bound,
        required=s + 1,
        exact_passes=exact > s + 1,
        estimate_passes=bound > s + 1,
        chain=chain,
    )


def vanishing_threshold(degrees_Y: Sequence[int], b1: int, b2: int) -> int:
    """H^1 of the ideal of the points H cap V_1 cap V_2 vanishes for twists strictly above this."""
    e = len(degrees_Y) + 1
    return sum(degrees_Y) - e - 2 + b1 + b2


def castelnuovo_slope(degrees_Y: Sequence[int], a_e: int) -> Fraction:
    """Per-degree genus slope after taking b1, b2 <= a_e/3 in the vanishing threshold."""
    return sum(degrees_Y) + Fraction(2 * a_e, 3)
