"""Covering-gonality lower bounds for complete intersections, with hypothesis reports."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import ArgumentError, HypothesisError
from .exactnum import factorial
from .primesel import select_prime_degrees, selection_threshold

__all__ = [
    "Hypothesis",
    "BoundCertificate",
    "cg_bound_codim2",
    "cg_bound_surface_special",
    "cg_bound_surface_general",
    "constant_A",
    "constant_B",
    "special_coefficient",
]

IRR_REMARK = "irr(X) >= cg(X), so the guarantee also bounds the degree of irrationality"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    satisfied: bool
    detail: str = ""


@dataclass(frozen=True)
class BoundCertificate:
    """A rational lower bound for cg(X) and the integer r + 1 it certifies."""

    kind: str
    bound_rational: Fraction
    integer_guarantee: int
    hypotheses: Tuple[Hypothesis, ...]
    constants_used: Tuple[Tuple[str, object], ...] = ()
    notes: Tuple[str, ...] = field(default=(IRR_REMARK,))

    def __post_init__(self):
        failed = [h for h in self.hypotheses if not h.satisfied]
        if failed:
            raise HypothesisError(failed[0].name, failed[0].detail)
        if self.integer_guarantee != math.floor(self.bound_rational) + 1:
            raise ArgumentError("integer guarantee must be floor(bound) + 1")

    @property
    def r(self) -> int:
        return self.integer_guarantee - 1


def _require(checks: List[Hypothesis]) -> None:
    for h in checks:
        if not h.satisfied:
            raise HypothesisError(h.name, h.detail)


def cg_bound_codim2(n: int, a: int, b: int) -> BoundCertificate:
    """cg(X) >= 2ab / (3 (n+1)^2) for very general X of type (a, b) in P^(n+2)."""
    if n < 2:
        raise ArgumentError(f"the codimension-two bound needs n >= 2, got {n}")
    checks = [
        Hypothesis("7a >= 18n", 7 * a >= 18 * n, f"7*{a} = {7 * a} vs 18*{n} = {18 * n}"),
        Hypothesis("7b >= 18n", 7 * b >= 18 * n, f"7*{b} = {7 * b} vs 18*{n} = {18 * n}"),
    ]
    _require(checks)
    bound = Fraction(2 * a * b, 3 * (n + 1) ** 2)
    r = math.floor(bound)
    small, big = sorted((a, b))
    # bigness of L = bH - (n+1) sum E_i on the blow-up, with b >= a
    volume = small * big ** (n + 1) - r * (n + 1) ** (n + 1)
    checks.append(
        Hypothesis(
            "bigness (L^(n+1)) > 0",
            volume > 0,
            f"a*b^(n+1) - r*(n+1)^(n+1) = {volume} with (a, b) = ({small}, {big})",
        )
    )
    return BoundCertificate(
        kind="codim2",
        bound_rational=bound,
        integer_guarantee=r + 1,
        hypotheses=tuple(checks),
        constants_used=(
            ("coefficient", Fraction(2, 3 * (n + 1) ** 2)),
            ("r", r),
        ),
    )


def special_coefficient(e: int) -> Fraction:
    """2 / (3^4 (3e+2) ((e+1)!)^e), the constant in front of a_1 ... a_e."""
    return Fraction(2, 3**4 * (3 * e + 2) * factorial(e + 1) ** e)


def constant_B(e: int) -> Fraction:
    if e < 2:
        raise ArgumentError(f"B(e) is defined for e >= 2, got {e}")
    return special_coefficient(e) / 2 ** (e - 1)


def constant_A(e: int) -> int:
    """Certified ceiling of (e+1)! * 4(e-1) * ln 4(e-1)."""
    return selection_threshold(e)


def _special_form_checks(e: int, adjusted: Sequence[int]) -> List[Hypothesis]:
    fact = factorial(e + 1)
    head = adjusted[: e - 1]
    checks = [
        Hypothesis(
            "a_1 <= ... <= a_e",
            list(adjusted) == sorted(adjusted),
            f"degrees {tuple(adjusted)}",
        ),
        Hypothesis("a_1 >= 3e", adjusted[0] >= 3 * e, f"a_1 = {adjusted[0]}, 3e = {3 * e}"),
        Hypothesis(
            "(e+1)! divides a_i for i < e",
            all(a % fact == 0 for a in head),
            f"(e+1)! = {fact}, a_i = {tuple(head)}",
        ),
    ]
    qs = [a // fact for a in head]
    coprime = all(
        math.gcd(qs[i], qs[j]) == 1 for i in range(len(qs)) for j in range(i + 1, len(qs))
    )
    checks.append(Hypothesis("q_i pairwise coprime", coprime, f"q_i = {tuple(qs)}"))
    return checks


def cg_bound_surface_special(e: int, adjusted: Sequence[int]) -> BoundCertificate:
    """cg(X) >= 2 a_1...a_e / (3^4 (3e+2) ((e+1)!)^e) for degrees a_i = (e+1)! q_i (i < e)."""
    adjusted = tuple(int(a) for a in adjusted)
    if e < 2:
        raise ArgumentError(f"surface bound needs e >= 2, got {e}")
    if len(adjusted) != e:
        raise ArgumentError(f"expected {e} degrees, got {len(adjusted)}")
    checks = _special_form_checks(e, adjusted)
    _require(checks)
    fact = factorial(e + 1)
    bound = special_coefficient(e) * math.prod(adjusted)
    r = math.floor(bound)
    alpha = math.prod(adjusted[:-1])
    volume = alpha * adjusted[-1] ** 3 - 27 * r
    checks.append(
        Hypothesis("bigness (L^3) > 0", volume > 0, f"alpha*a_e^3 - 27r = {volume}")
    )
    notes = [IRR_REMARK]
    qs = [a // fact for a in adjusted[:-1]]
    small = [q for q in qs if q <= 2 ** (e + 1)]
    if small:
        notes.append(
            f"q_i <= 2^(e+1) = {2 ** (e + 1)} for {tuple(small)}: the curve-degree "
            "divisibility input to the nef argument assumes every q_i > 2^(e+1)"
        )
    return BoundCertificate(
        kind="surface-special",
        bound_rational=bound,
        integer_guarantee=r + 1,
        hypotheses=tuple(checks),
        constants_used=(
            ("coefficient", special_coefficient(e)),
            ("q", tuple(qs)),
            ("r", r),
        ),
        notes=tuple(notes),
    )


def cg_bound_surface_general(e: int, degrees: Sequence[int]) -> BoundCertificate:
    """cg(X) >= B(e) d_1 ... d_e once every d_i >= A(e); needs e >= 3."""
    degrees = tuple(int(d) for d in degrees)
    if e < 3:
        raise ArgumentError(
            f"the general-degree surface bound needs e >= 3, got {e}; "
            "use the special-form or codimension-two bound instead"
        )
    if len(degrees) != e:
        raise ArgumentError(f"expected {e} degrees, got {len(degrees)}")
    if list(degrees) != sorted(degrees):
        raise ArgumentError(f"degrees must be ascending, got {degrees}")
    threshold = constant_A(e)
    selection = select_prime_degrees(e, degrees[:-1])
    checks = [
        Hypothesis(
            "d_i >= A(e)",
            degrees[0] >= threshold,
            f"d_1 = {degrees[0]}, A({e}) = {threshold}",
        )
    ]
    special = special_coefficient(e) * math.prod(selection.adjusted) * degrees[-1]
    bound = constant_B(e) * math.prod(degrees)
    return BoundCertificate(
        kind="surface-general",
        bound_rational=bound,
        integer_guarantee=math.floor(bound) + 1,
        hypotheses=tuple(checks),
        constants_used=(
            ("A", threshold),
            ("B", constant_B(e)),
            ("primes", selection.primes),
            ("adjusted", selection.adjusted + (degrees[-1],)),
            ("special_form_bound", special),
        ),
    )
