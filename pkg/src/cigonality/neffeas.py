"""Induction-step feasibility systems over numerical curve classes (k; m_1, ..., m_{s+1}).

A curve class that violates nefness in the step r = s -> s+1 must satisfy
a short list of integer inequalities.  Each system is decided two
independent ways:

* analytically, by deriving a certified interval for the degree k and
  checking whether it contains an admissible integer;
* by brute force, scanning k and the total S = sum m_i with the multiplicities
  balanced (balanced vectors minimize every convex separable function of
  the m_i among integer vectors with a fixed total).

When the analytic interval is nonempty, it also bounds the scan, so the
combined verdict is still certified.  A scan cut short by a horizon reports
``INFEASIBLE_WITHIN_HORIZON`` and never plain ``INFEASIBLE``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import kernels
from .errors import ArgumentError, HypothesisError
from .exactnum import factorial, power_enclosure
from .genus import genus_lower_bound, plane_gap_bound
from .gonality import _special_form_checks, special_coefficient
from .hilbert import CompleteIntersectionSpec
from .primesel import min_curve_degree

__all__ = [
    "Status",
    "Outcome",
    "ConstraintCheck",
    "CurveClass",
    "KInterval",
    "FeasibilityVerdict",
    "Codim2System",
    "SurfaceSystem",
    "Theorem",
    "InductionReport",
    "balanced_partition",
    "codim2_constraints",
    "codim2_decide_analytic",
    "codim2_decide_bruteforce",
    "surface_constraints",
    "surface_decide",
    "surface_decide_bruteforce",
    "verify_induction",
    "PRECISION_CAP",
    "STATE_CAP",
]

PRECISION_CAP = 40
STATE_CAP = 10**6


class Status(str, enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    UNDECIDED = "undecided"
    INACTIVE = "inactive"


class Outcome(str, enum.Enum):
    INFEASIBLE = "infeasible"
    INFEASIBLE_WITHIN_HORIZON = "infeasible-within-horizon"
    WITNESS = "witness"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class ConstraintCheck:
    name: str
    status: Status
    detail: str = ""

    @property
    def satisfied(self) -> Optional[bool]:
        if self.status is Status.SATISFIED:
            return True
        if self.status is Status.VIOLATED:
            return False
        return None


def _check(name: str, ok: bool, detail: str = "") -> ConstraintCheck:
    return ConstraintCheck(name, Status.SATISFIED if ok else Status.VIOLATED, detail)


@dataclass(frozen=True)
class CurveClass:
    degree: int
    mults: Tuple[int, ...]


@dataclass(frozen=True)
class KInterval:
    """Certified range for the curve degree k: lower <= k (or <), k < upper (or <=).

    When ``step`` > 1, only multiples of ``step`` are admissible.
    """

    lower: Fraction
    lower_source: str
    upper: Optional[Fraction]
    upper_source: str
    lower_strict: bool = False
    upper_strict: bool = True
    step: int = 1

    def integer_range(self) -> Tuple[int, Optional[int]]:
        lo = math.floor(self.lower) + 1 if self.lower_strict else math.ceil(self.lower)
        lo = max(lo, 1)
        if self.step > 1:
            lo = -(-lo // self.step) * self.step
        if self.upper is None:
            return lo, None
        hi = math.ceil(self.upper) - 1 if self.upper_strict else math.floor(self.upper)
        return lo, hi

    @property
    def is_empty(self) -> bool:
        lo, hi = self.integer_range()
        return hi is not None and lo > hi


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class Codim2System:
    """Step s -> s+1 for bH - (n+1) sum E_i on the blow-up of a degree-a hypersurface in P^(n+2)."""

    n: int
    a: int
    b: int
    s: int

    def __post_init__(self):
        if self.n < 2 or self.s < 2 or self.a < 1 or self.b < 1:
            raise ArgumentError(
                f"need n >= 2, s >= 2, a, b >= 1; got n={self.n}, a={self.a}, b={self.b}, s={self.s}"
            )

    @property
    def parts(self) -> int:
        return self.s + 1

    def default_horizon(self) -> int:
        return 5 * self.a


@dataclass(frozen=True)
class SurfaceSystem:
    """Step s -> s+1 for a_e H - 3 sum E_i on the blow-up of a threefold of type degrees_Y."""

    e: int
    degrees_Y: Tuple[int, ...]
    a_e: int
    s: int
    alpha: int = 0

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees_Y)
        object.__setattr__(self, "degrees_Y", degs)
        if self.e < 2 or self.s < 2:
            raise ArgumentError(f"need e >= 2 and s >= 2, got e={self.e}, s={self.s}")
        if len(degs) != self.e - 1:
            raise ArgumentError(f"expected {self.e - 1} threefold degrees, got {len(degs)}")
        if any(d < 1 for d in degs) or self.a_e < 1:
            raise ArgumentError("degrees must be positive")
        if list(degs) + [self.a_e] != sorted(list(degs) + [self.a_e]):
            raise ArgumentError(f"degrees must satisfy a_1 <= ... <= a_e, got {degs + (self.a_e,)}")
        product = math.prod(degs)
        if self.alpha == 0:
            object.__setattr__(self, "alpha", product)
        elif self.alpha != product:
            raise ArgumentError(f"alpha = {self.alpha} differs from product {product}")

    @property
    def parts(self) -> int:
        return self.s + 1

    @property
    def fact(self) -> int:
        return factorial(self.e + 1)

    @property
    def qs(self) -> Tuple[int, ...]:
        return tuple(a // self.fact for a in self.degrees_Y)

    @property
    def special_form(self) -> bool:
        """a_i = (e+1)! q_i for i < e with pairwise coprime q_i, and a_1 >= 3e."""
        if any(a % self.fact for a in self.degrees_Y):
            return False
        qs = self.qs
        if any(math.gcd(qs[i], qs[j]) != 1 for i in range(len(qs)) for j in range(i + 1, len(qs))):
            return False
        return self.degrees_Y[0] >= 3 * self.e

    @property
    def divisibility_hypothesis(self) -> bool:
        """Every q_i exceeds 2^(e+1), as the curve-degree divisibility requires."""
        return self.special_form and all(q > 2 ** (self.e + 1) for q in self.qs)

    @property
    def degree_modulus(self) -> int:
        """Least k > 0 with prod q_i | e! k; every admissible degree is a multiple of it."""
        prod = math.prod(self.qs)
        modulus = prod // math.gcd(prod, factorial(self.e))
        if self.divisibility_hypothesis:
            assert modulus == min_curve_degree(3, self.e - 1, self.qs)
        return modulus

    @property
    def genus_slope_times3(self) -> int:
        """3 * (a_1 + ... + a_{e-1} + 5 a_e / 3), an integer."""
        return 3 * sum(self.degrees_Y) + 5 * self.a_e

    def default_horizon(self) -> int:
        return max(1, 5 * self.alpha // self.fact ** (self.e - 1))


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of deciding one system, with its certificate.

    A witness is re-checked against the raw constraints when the verdict is
    built; a certified infeasibility must carry an empty interval unless the
    whole interval was exhausted by the scan.
    """

    system: object
    outcome: Outcome
    witness: Optional[CurveClass] = None
    interval: Optional[KInterval] = None
    exhausted_by_scan: bool = False
    horizon: Optional[int] = None
    states: int = 0
    route: str = "analytic"
    partial: bool = False
    notes: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.outcome is Outcome.WITNESS:
            if self.witness is None:
                raise ArgumentError("witness verdict without a witness")
            checks = _constraints_for(self.system, self.witness.degree, self.witness.mults)
            bad = [c for c in checks if c.status in (Status.VIOLATED, Status.UNDECIDED)]
            if bad:
                raise AssertionError(f"witness fails {bad[0].name}: {bad[0].detail}")
        if self.outcome is Outcome.INFEASIBLE:
            if self.interval is None:
                raise ArgumentError("certified infeasibility needs an interval")
            if not (self.interval.is_empty or self.exhausted_by_scan):
                raise AssertionError("infeasible certificate with a nonempty interval")

    @property
    def feasible(self) -> bool:
        return self.outcome is Outcome.WITNESS


def balanced_partition(total: int, parts: int) -> Tuple[int, ...]:
    """Ascending integer vector of ``parts`` entries summing to ``total``, entries differing by <= 1."""
    t, q = divmod(total, parts)
    return (t,) * (parts - q) + (t + 1,) * q


def _validate(sys_parts: int, k: int, mults: Sequence[int]) -> Tuple[int, ...]:
    mults = tuple(int(m) for m in mults)
    if len(mults) != sys_parts:
        raise ArgumentError(f"expected {sys_parts} multiplicities, got {len(mults)}")
    if k < 1:
        raise ArgumentError(f"curve degree must be >= 1, got {k}")
    if any(m < 0 for m in mults):
        raise ArgumentError("multiplicities must be >= 0")
    return mults


# ---------------------------------------------------------------------------
# codimension two


def codim2_gap_rhs(sys: Codim2System, k: int) -> Fraction:
    """(k-1)(k-2)/2 - p_g lower bound for a degree-k curve on the hypersurface Y."""
    y = CompleteIntersectionSpec(sys.n + 1, (sys.a,))
    return plane_gap_bound(k, genus_lower_bound(y, k))


def codim2_constraints(sys: Codim2System, k: int, mults: Sequence[int]) -> List[ConstraintCheck]:
    mults = _validate(sys.parts, k, mults)
    n, a, b, s = sys.n, sys.a, sys.b, sys.s
    total = sum(mults)
    lower = Fraction(b * k, n + 1)
    upper = Fraction((s + 1) * b * k, s * (n + 1))
    gap = sum(Fraction(m * (m - 1), 2) for m in mults)
    rhs = codim2_gap_rhs(sys, k)
    return [
        _check("(i) sum m_i > b k/(n+1)", total > lower, f"{total} > {lower}"),
        _check("(ii) sum m_i <= (s+1) b k/(s(n+1))", total <= upper, f"{total} <= {upper}"),
        _check(
            "(iii) sum m_i(m_i-1)/2 <= (k^2 + (2n-a)k)/2",
            gap <= rhs,
            f"{gap} <= {rhs}",
        ),
        _check("(iv) m_i >= 1", all(m >= 1 for m in mults), f"min m_i = {min(mults)}"),
    ]


def _codim2_scan_verdict(sys, k_lo, k_hi, interval, route, certified):
    k, total, states = kernels.codim2_scan(sys.n, sys.a, sys.b, sys.s, k_lo, k_hi)
    if k:
        return FeasibilityVerdict(
            system=sys,
            outcome=Outcome.WITNESS,
            witness=CurveClass(k, balanced_partition(total, sys.parts)),
            interval=interval,
            horizon=k_hi,
            states=states,
            route=route,
        )
    return FeasibilityVerdict(
        system=sys,
        outcome=Outcome.INFEASIBLE if certified else Outcome.INFEASIBLE_WITHIN_HORIZON,
        interval=interval,
        exhausted_by_scan=certified,
        horizon=k_hi,
        states=states,
        route=route,
    )


def codim2_interval(sys: Codim2System) -> Tuple[KInterval, Optional[Fraction]]:
    """Certified k-interval and the coefficient of k on the quadratic-mean side.

    The upper end is ``None`` when that coefficient is not positive, in which
    case dividing by it would be meaningless.
    """
    n, a, b, s = sys.n, sys.a, sys.b, sys.s
    lower = Fraction(max(1, a - 2 * n))
    coeff = Fraction(b * b, (n + 1) ** 2 * (s + 1)) - 1
    rhs = 2 * n - a + Fraction((s + 1) * b, s * (n + 1))
    upper = rhs / coeff if coeff > 0 else None
    interval = KInterval(
        lower=lower,
        lower_source="(iii) with m_i(m_i-1) >= 0 gives k >= a - 2n",
        upper=upper,
        upper_source=(
            "[b^2/((n+1)^2 (s+1)) - 1] k < 2n - a + (s+1) b/(s(n+1))"
            if upper is not None
            else "coefficient of k is not positive; no analytic upper bound"
        ),
    )
    return interval, coeff


def codim2_decide_analytic(sys: Codim2System) -> FeasibilityVerdict:
    interval, coeff = codim2_interval(sys)
    if interval.upper is None:
        horizon = sys.default_horizon()
        return _codim2_scan_verdict(sys, 1, horizon, interval, "bruteforce-fallback", False)
    if interval.is_empty:
        return FeasibilityVerdict(system=sys, outcome=Outcome.INFEASIBLE, interval=interval)
    lo, hi = interval.integer_range()
    return _codim2_scan_verdict(sys, lo, hi, interval, "analytic+scan", True)


def codim2_decide_bruteforce(sys: Codim2System, k_max: int) -> FeasibilityVerdict:
    if k_max < 1:
        raise ArgumentError(f"k_max must be >= 1, got {k_max}")
    return _codim2_scan_verdict(sys, 1, k_max, None, "bruteforce", False)


# ---------------------------------------------------------------------------
# surfaces


def _sqrt_sum_le(terms: Sequence[Tuple[int, int]], bound: int, precision: int, cap: int):
    """Decide sum_c c * sqrt(v) <= bound for (c, v) pairs with c, v >= 0.

    Each root is enclosed by integer square roots on the grid 10**-p; p is
    doubled until the enclosure is decisive or exceeds ``cap``.  Returns the
    status and the last precision used.
    """
    p = max(1, min(precision, cap))
    while True:
        scale = 10**p
        lo = 0
        slack = 0
        for c, v in terms:
            if c == 0:
                continue
            scaled = v * scale * scale
            r = math.isqrt(scaled)
            lo += c * r
            if r * r != scaled:
                slack += c
        target = bound * scale
        if lo + slack <= target:
            return Status.SATISFIED, p
        if lo > target:
            return Status.VIOLATED, p
        if p >= cap:
            return Status.UNDECIDED, p
        p = min(2 * p, cap)


def surface_constraints(
    sys: SurfaceSystem, k: int, mults: Sequence[int], precision: int = 12, cap: int = PRECISION_CAP
) -> List[ConstraintCheck]:
    mults = _validate(sys.parts, k, mults)
    a_e, s = sys.a_e, sys.s
    total = sum(mults)
    lower = Fraction(a_e * k, 3)
    upper = Fraction((s + 1) * a_e * k, 3 * s)
    checks = [
        _check("(i) sum m_i > a_e k/3", total > lower, f"{total} > {lower}"),
        _check("(ii) sum m_i <= (s+1) a_e k/(3s)", total <= upper, f"{total} <= {upper}"),
    ]
    # 3 * (2^(3/2)/3) m^(3/2) = sqrt(8 m^3); compare against 3 * (sum a_i + 5 a_e/3) k
    bound3 = sys.genus_slope_times3 * k
    terms = [(1, 8 * m**3) for m in mults]
    status, p = _iii_status_with_enclosures(terms, bound3, precision, cap)
    checks.append(
        ConstraintCheck(
            "(iii) sum 2^(3/2)/3 m_i^(3/2) <= (a_1+...+a_{e-1} + 5a_e/3) k",
            status,
            f"compared at precision {p} against {Fraction(bound3, 3)}",
        )
    )
    if sys.special_form:
        prod = math.prod(sys.qs)
        ok = (factorial(sys.e) * k) % prod == 0
        checks.append(
            _check(
                "(iv) q_1...q_{e-1} | e! k",
                ok,
                f"needs k >= {Fraction(prod, factorial(sys.e))}, multiple of {sys.degree_modulus}",
            )
        )
    else:
        checks.append(
            ConstraintCheck(
                "(iv) q_1...q_{e-1} | e! k",
                Status.INACTIVE,
                "degrees are not of the special form; partial system",
            )
        )
    checks.append(_check("(v) m_i >= 1", all(m >= 1 for m in mults), f"min m_i = {min(mults)}"))
    return checks


def _iii_status_with_enclosures(terms, bound3, precision, cap):
    """Same decision as ``_sqrt_sum_le`` but through :func:`power_enclosure`."""
    p = max(1, min(precision, cap))
    while True:
        total = sum((power_enclosure(v, 1, 2, p).scale(c) for c, v in terms), start=0)
        verdict = total.compare_le(bound3)
        if verdict is not None:
            return (Status.SATISFIED if verdict else Status.VIOLATED), p
        if p >= cap:
            return Status.UNDECIDED, p
        p = min(2 * p, cap)


def surface_upper_bound(sys: SurfaceSystem) -> Fraction:
    """k < 3^5 (s+1) (a_1 + ... + a_{e-1} + 5a_e/3)^2 / (8 a_e^3), from squaring (iii) against (i)."""
    slope = Fraction(sys.genus_slope_times3, 3)
    return Fraction(3**5 * (sys.s + 1)) * slope * slope / (8 * sys.a_e**3)


def surface_interval(sys: SurfaceSystem) -> KInterval:
    upper = surface_upper_bound(sys)
    if sys.special_form:
        prod = math.prod(sys.qs)
        return KInterval(
            lower=Fraction(prod, factorial(sys.e)),
            lower_source="(iv) q_1...q_{e-1} | e! k, so k >= q_1...q_{e-1}/e!",
            upper=upper,
            upper_source="squared comparison of (iii) with the convexity bound from (i)",
            step=sys.degree_modulus,
        )
    return KInterval(
        lower=Fraction(1),
        lower_source="k >= 1",
        upper=upper,
        upper_source="squared comparison of (iii) with the convexity bound from (i)",
    )


def _surface_scan(
    sys: SurfaceSystem,
    k_lo: int,
    k_hi: int,
    step: int,
    precision: int,
    cap: int,
    state_cap: int,
):
    """Scan admissible k and every total S; returns (witness, states, last_k, undecided, max_p)."""
    parts = sys.parts
    a_e, s = sys.a_e, sys.s
    states = 0
    max_p = 0
    undecided = None
    last_complete = k_lo - 1
    first = -(-max(k_lo, 1) // step) * step
    for k in range(first, k_hi + 1, step):
        s_lo = max((a_e * k) // 3 + 1, parts)
        s_hi = (parts * a_e * k) // (3 * s)
        if s_hi >= s_lo and states + (s_hi - s_lo + 1) > state_cap:
            break
        bound3 = sys.genus_slope_times3 * k
        for total in range(s_lo, s_hi + 1):
            states += 1
            t, q = divmod(total, parts)
            status, p = _sqrt_sum_le(
                ((parts - q, 8 * t**3), (q, 8 * (t + 1) ** 3)), bound3, precision, cap
            )
            max_p = max(max_p, p)
            if status is Status.SATISFIED:
                return CurveClass(k, balanced_partition(total, parts)), states, k, undecided, max_p
            if status is Status.UNDECIDED and undecided is None:
                undecided = (k, total)
        last_complete = k
    return None, states, last_complete, undecided, max_p


def _surface_verdict(sys, interval, k_lo, k_hi, step, precision, cap, state_cap, route, certified_if_complete):
    witness, states, last, undecided, max_p = _surface_scan(
        sys, k_lo, k_hi, step, precision, cap, state_cap
    )
    notes = [f"max precision used: {max_p}"] if max_p else []
    partial = not sys.special_form
    if witness is not None:
        return FeasibilityVerdict(
            system=sys, outcome=Outcome.WITNESS, witness=witness, interval=interval,
            horizon=k_hi, states=states, route=route, partial=partial, notes=tuple(notes),
        )
    if undecided is not None:
        notes.append(f"(iii) undecided at precision cap {cap} for (k, S) = {undecided}")
        return FeasibilityVerdict(
            system=sys, outcome=Outcome.UNDECIDED, interval=interval, horizon=last,
            states=states, route=route, partial=partial, notes=tuple(notes),
        )
    complete = last >= k_hi
    if not complete:
        notes.append(f"state cap {state_cap} reached; scanned k <= {last}")
    certified = complete and certified_if_complete
    return FeasibilityVerdict(
        system=sys,
        outcome=Outcome.INFEASIBLE if certified else Outcome.INFEASIBLE_WITHIN_HORIZON,
        interval=interval,
        exhausted_by_scan=certified,
        horizon=last if not complete else k_hi,
        states=states,
        route=route,
        partial=partial,
        notes=tuple(notes),
    )


def surface_decide(
    sys: SurfaceSystem,
    k_max: Optional[int] = None,
    precision: int = 12,
    cap: int = PRECISION_CAP,
    state_cap: int = STATE_CAP,
) -> FeasibilityVerdict:
    """Analytic interval first; if it is nonempty, scan it (up to ``k_max``)."""
    if k_max is None:
        k_max = sys.default_horizon()
    if k_max < 1:
        raise ArgumentError(f"k_max must be >= 1, got {k_max}")
    interval = surface_interval(sys)
    partial = not sys.special_form
    notes = () if sys.divisibility_hypothesis or partial else (
        f"q_i <= 2^(e+1) = {2 ** (sys.e + 1)}: divisibility leg used outside its hypothesis",
    )
    if interval.is_empty:
        return FeasibilityVerdict(
            system=sys, outcome=Outcome.INFEASIBLE, interval=interval, partial=partial, notes=notes
        )
    lo, hi = interval.integer_range()
    verdict = _surface_verdict(
        sys, interval, lo, min(hi, k_max), interval.step, precision, cap, state_cap,
        "analytic+scan", hi <= k_max,
    )
    if notes:
        verdict = FeasibilityVerdict(**{**verdict.__dict__, "notes": verdict.notes + notes})
    return verdict


def surface_decide_bruteforce(
    sys: SurfaceSystem,
    k_max: Optional[int] = None,
    precision: int = 12,
    cap: int = PRECISION_CAP,
    state_cap: int = STATE_CAP,
) -> FeasibilityVerdict:
    """Scan every k in [1, k_max] passing (iv) and every admissible total; never certified."""
    if k_max is None:
        k_max = sys.default_horizon()
    if k_max < 1:
        raise ArgumentError(f"k_max must be >= 1, got {k_max}")
    step = sys.degree_modulus if sys.special_form else 1
    return _surface_verdict(
        sys, None, 1, k_max, step, precision, cap, state_cap, "bruteforce", False
    )


def _constraints_for(system, k, mults):
    if isinstance(system, Codim2System):
        return codim2_constraints(system, k, mults)
    if isinstance(system, SurfaceSystem):
        return surface_constraints(system, k, mults, precision=12, cap=PRECISION_CAP * 4)
    raise ArgumentError(f"unknown system type {type(system).__name__}")


# ---------------------------------------------------------------------------
# induction replay


class Theorem(str, enum.Enum):
    CODIM2 = "codim2"
    SURFACE = "surface"


@dataclass(frozen=True)
class InductionReport:
    theorem: Theorem
    params: Tuple[Tuple[str, object], ...]
    r: int
    steps: Tuple[Tuple[int, FeasibilityVerdict], ...]

    @property
    def all_infeasible(self) -> bool:
        return all(v.outcome is Outcome.INFEASIBLE for _, v in self.steps)

    @property
    def witnesses(self) -> Tuple[Tuple[int, CurveClass], ...]:
        return tuple((s, v.witness) for s, v in self.steps if v.outcome is Outcome.WITNESS)


def verify_induction(theorem, **params) -> InductionReport:
    """Replay the induction on r: decide every step s -> s+1 for s = 2, ..., r-1.

    Codim2 takes ``n, a, b``; Surface takes ``e, adjusted`` (a_1, ..., a_e)
    plus optional ``k_max``, ``precision``.  Hypotheses are checked before
    any step runs.
    """
    theorem = Theorem(theorem)
    if theorem is Theorem.CODIM2:
        n, a, b = params["n"], params["a"], params["b"]
        if n < 2:
            raise ArgumentError(f"need n >= 2, got {n}")
        for name, v in (("a", a), ("b", b)):
            if 7 * v < 18 * n:
                raise HypothesisError(f"7{name} >= 18n", f"7*{v} < 18*{n}")
        a, b = sorted((a, b))
        r = math.floor(Fraction(2 * a * b, 3 * (n + 1) ** 2))
        steps = tuple(
            (s, codim2_decide_analytic(Codim2System(n, a, b, s))) for s in range(2, r)
        )
        return InductionReport(theorem, (("n", n), ("a", a), ("b", b)), r, steps)

    e = params["e"]
    adjusted = tuple(int(x) for x in params["adjusted"])
    k_max = params.get("k_max")
    precision = params.get("precision", 12)
    if e < 2:
        raise ArgumentError(f"need e >= 2, got {e}")
    if len(adjusted) != e:
        raise ArgumentError(f"expected {e} degrees, got {len(adjusted)}")
    for h in _special_form_checks(e, adjusted):
        if not h.satisfied:
            raise HypothesisError(h.name, h.detail)
    fact = factorial(e + 1)
    for a in adjusted[:-1]:
        if a // fact <= 2 ** (e + 1):
            raise HypothesisError("q_i > 2^(e+1)", f"q = {a // fact} <= {2 ** (e + 1)}")
    r = math.floor(special_coefficient(e) * math.prod(adjusted))
    steps = []
    for s in range(2, r):
        system = SurfaceSystem(e, adjusted[:-1], adjusted[-1], s)
        steps.append((s, surface_decide(system, k_max=k_max, precision=precision)))
    return InductionReport(
        theorem, (("e", e), ("adjusted", adjusted)), r, tuple(steps)
    )
