"""Hilbert functions h^0(Y, O(l)) of complete intersections, computed three ways.

* :func:`h0_ci_koszul` -- alternating sum over subsets of the defining degrees
  (the Koszul resolution read off on global sections);
* :func:`h0_ci_nested` -- the nested sum over 0 <= j_i < a_i of h^0(P^n, O(l - sum j));
* :func:`h0_series_oracle` -- a coefficient of prod(1 - t^a_i) / (1 - t)^(n+f+1)
  by truncated power-series arithmetic, sharing no code with the other two.

The nested-sum identity is usually stated for n >= 2; the formulas stay
well defined for n >= 1 and f >= 0, which is the range accepted here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence, Tuple

from . import kernels
from .errors import ArgumentError
from .exactnum import binomial

__all__ = [
    "CompleteIntersectionSpec",
    "h0_projective",
    "h0_ci_koszul",
    "h0_ci_nested",
    "h0_series_oracle",
]


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    """A complete intersection of dimension ``dim`` and type ``degrees`` in P^(dim+codim).

    ``codim`` may be omitted and is then read off ``degrees``; an empty
    degree list is projective space itself.
    """

    dim: int
    degrees: Tuple[int, ...] = ()
    codim: Optional[int] = field(default=None)

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if self.codim is None:
            object.__setattr__(self, "codim", len(degrees))
        if self.dim < 1:
            raise ArgumentError(f"dimension must be >= 1, got {self.dim}")
        if self.codim != len(degrees):
            raise ArgumentError(
                f"codim {self.codim} does not match {len(degrees)} degrees"
            )
        if any(d < 1 for d in degrees):
            raise ArgumentError(f"degrees must be >= 1, got {degrees}")

    @property
    def ambient_dim(self) -> int:
        return self.dim + self.codim

    @property
    def degree(self) -> int:
        """Degree of Y in its ambient projective space (product of the degrees)."""
        out = 1
        for d in self.degrees:
            out *= d
        return out


def h0_projective(n: int, twist: int) -> int:
    """h^0(P^n, O(twist)) = C(twist + n, n); zero for negative twists."""
    if n < 0:
        raise ArgumentError(f"projective dimension must be >= 0, got {n}")
    return binomial(twist + n, n)


def h0_ci_koszul(spec: CompleteIntersectionSpec, twist: int) -> int:
    n_amb = spec.ambient_dim
    total = 0
    degs = spec.degrees
    for size in range(len(degs) + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(degs, size):
            total += sign * h0_projective(n_amb, twist - sum(subset))
    return total


def h0_ci_nested(spec: CompleteIntersectionSpec, twist: int) -> int:
    """Nested sum of h^0(P^n, O(twist - j_1 - ... - j_f)) over 0 <= j_i < a_i.

    Terms are grouped by ``j = j_1 + ... + j_f``: ``box_counts`` gives the
    number of index vectors with each total, so the result is
    ``sum_j count[j] * h^0(P^n, O(twist - j))``.
    """
    if twist < 0:
        return 0
    counts = kernels.box_counts(spec.degrees)
    n = spec.dim
    top = min(twist, len(counts) - 1)
    return sum(counts[j] * h0_projective(n, twist - j) for j in range(top + 1))


def _mul_truncated(p: Sequence[int], q: Sequence[int], deg: int) -> list:
    out = [0] * (deg + 1)
    for i, pi in enumerate(p[: deg + 1]):
        if pi:
            for j, qj in enumerate(q[: deg + 1 - i]):
                out[i + j] += pi * qj
    return out


def h0_series_oracle(spec: CompleteIntersectionSpec, twist: int) -> int:
    """Coefficient of t^twist in the Hilbert series of the complete intersection."""
    if twist < 0:
        raise ArgumentError("series oracle is defined for twist >= 0 only")
    numerator = [1] + [0] * twist
    for a in spec.degrees:
        factor = [0] * (twist + 1)
        factor[0] = 1
        if a <= twist:
            factor[a] = -1
        numerator = _mul_truncated(numerator, factor, twist)
    # 1/(1-t)^(N+1): start from the constant 1 and take prefix sums N+1 times
    series = [1] + [0] * twist
    for _ in range(spec.ambient_dim + 1):
        acc = 0
        for i in range(twist + 1):
            acc += series[i]
            series[i] = acc
    return sum(numerator[i] * series[twist - i] for i in range(twist + 1))
