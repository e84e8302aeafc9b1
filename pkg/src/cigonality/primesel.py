"""Prime sieving, Ramanujan primes and the prime-degree adjustment.

Also hosts the divisibility bound on degrees of curves in very general
complete intersections whose degrees are ``(n+f-1)! * q_i``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import kernels
from .errors import ArgumentError, ExhaustedError, HypothesisError, ThresholdError
from .exactnum import Enclosure, factorial, log_enclosure

__all__ = [
    "PrimeTable",
    "PrimeDegreeSelection",
    "prime_pi",
    "primes_between",
    "is_prime",
    "ramanujan_prime",
    "sondow_bounds",
    "selection_threshold",
    "select_prime_degrees",
    "min_curve_degree",
]


class PrimeTable:
    """Lazily extended sieve with a running prime count.

    Extension is serialized by a lock; readers only ever index below a limit
    they have already seen, and the backing lists only grow, so concurrent
    reads need no locking.
    """

    def __init__(self, initial: int = 1 << 12):
        self._lock = threading.Lock()
        self._flags = bytearray()
        self._pi: List[int] = []
        self._primes: List[int] = []
        self.limit = -1
        self.extend(initial)

    def extend(self, limit: int) -> None:
        if limit <= self.limit:
            return
        with self._lock:
            if limit <= self.limit:
                return
            self._extend_locked(max(limit, 2 * self.limit + 1))

    def _extend_locked(self, limit: int) -> None:
        if limit <= self.limit:
            return
        root = math.isqrt(limit)
        if limit >= 4 and root > self.limit:
            self._extend_locked(root)
        lo = self.limit + 1
        flags = kernels.sieve_segment(lo, limit + 1, self._primes)
        offset = self._pi[-1] if self._pi else 0
        self._pi.extend(kernels.accumulate_counts(flags, offset))
        self._primes.extend(lo + i for i, f in enumerate(flags) if f)
        self._flags.extend(flags)
        self.limit = limit

    def pi(self, x: int) -> int:
        if x < 0:
            return 0
        self.extend(x)
        return self._pi[x]

    def counts(self, limit: int) -> List[int]:
        """The running-count list, valid at least through index ``limit``."""
        self.extend(limit)
        return self._pi

    def is_prime(self, x: int) -> bool:
        if x < 2:
            return False
        self.extend(x)
        return bool(self._flags[x])

    def primes_between(self, lo: int, hi: int) -> List[int]:
        """Primes p with lo <= p <= hi, ascending."""
        if hi < 2 or hi < lo:
            return []
        self.extend(hi)
        lo = max(lo, 2)
        return [p for p in range(lo, hi + 1) if self._flags[p]]


_TABLE = PrimeTable()


def prime_pi(x: int) -> int:
    """Number of primes not exceeding x."""
    if x < 0:
        raise ArgumentError(f"prime_pi expects x >= 0, got {x}")
    return _TABLE.pi(x)


def is_prime(x: int) -> bool:
    return _TABLE.is_prime(x)


def primes_between(lo: int, hi: int) -> List[int]:
    return _TABLE.primes_between(lo, hi)


def sondow_bounds(n: int, precision: int = 20) -> Tuple[Enclosure, Enclosure]:
    """Enclosures of ``2n log 2n`` and ``4n log 4n``, which bracket R_n."""
    if n < 1:
        raise ArgumentError("Sondow bounds need n >= 1")
    low = log_enclosure(2 * n, precision).scale(2 * n)
    high = log_enclosure(4 * n, precision).scale(4 * n)
    return low, high


def ramanujan_prime(n: int, horizon: Optional[int] = None) -> int:
    """The n-th Ramanujan prime R_n.

    Every x up to ``max(horizon, ceil(4n log 4n))`` is checked for
    ``pi(x) - pi(x/2) < n``; R_n is one past the last such x.  Beyond the
    ceiling of the Sondow bound no deficit can occur, so the default
    horizon is that ceiling.
    """
    if n < 1:
        raise ArgumentError(f"Ramanujan primes are indexed from 1, got {n}")
    _, high = sondow_bounds(n)
    limit = high.ceil_upper()
    if horizon is not None:
        limit = max(limit, horizon)
    pi = _TABLE.counts(limit)
    last = kernels.last_deficit(pi, n, limit)
    if last >= high.ceil_upper():
        raise RuntimeError(f"deficit at x={last} lies above the Sondow bound")
    return last + 1


_THRESHOLDS: Dict[int, int] = {}


def selection_threshold(e: int) -> int:
    """Certified integer ceiling of (e+1)! * 4(e-1) * log 4(e-1).

    The log is the natural logarithm.  Precision is raised until the
    enclosure's endpoints share a ceiling, so the result is the exact ceiling
    of the real threshold.
    """
    if e < 2:
        raise ArgumentError(f"threshold defined for e >= 2, got {e}")
    if e in _THRESHOLDS:
        return _THRESHOLDS[e]
    m = 4 * (e - 1)
    coeff = factorial(e + 1) * m
    precision = 20
    while True:
        enc = log_enclosure(m, precision).scale(coeff)
        if math.ceil(enc.lower) == math.ceil(enc.upper):
            break
        precision *= 2
    _THRESHOLDS[e] = enc.ceil_upper()
    return _THRESHOLDS[e]


@dataclass(frozen=True)
class PrimeDegreeSelection:
    """Distinct primes q_i with d_i/(2(e+1)!) < q_i <= d_i/(e+1)!, and a_i = (e+1)! q_i."""

    e: int
    input_degrees: Tuple[int, ...]
    primes: Tuple[int, ...]
    adjusted: Tuple[int, ...]
    fallback_used: bool = False

    def __post_init__(self):
        fact = factorial(self.e + 1)
        if len(set(self.primes)) != len(self.primes):
            raise ArgumentError(f"selected primes are not distinct: {self.primes}")
        for d, q, a in zip(self.input_degrees, self.primes, self.adjusted):
            if not is_prime(q):
                raise ArgumentError(f"{q} is not prime")
            if not (d < 2 * fact * q and fact * q <= d):
                raise ArgumentError(f"prime {q} outside ({d}/(2*{fact}), {d}/{fact}]")
            if a != fact * q or not (d < 2 * a <= 2 * d):
                raise ArgumentError(f"adjusted degree {a} inconsistent with {d}")


def _interval(d: int, fact: int) -> Tuple[int, int]:
    return d // (2 * fact) + 1, d // fact


def _match(candidates: List[List[int]]) -> Optional[List[int]]:
    """Pick one distinct element from each list, by backtracking."""
    chosen: List[int] = []

    def go(i: int) -> bool:
        if i == len(candidates):
            return True
        for p in candidates[i]:
            if p not in chosen:
                chosen.append(p)
                if go(i + 1):
                    return True
                chosen.pop()
        return False

    return list(chosen) if go(0) else None


def select_prime_degrees(e: int, degrees: Sequence[int]) -> PrimeDegreeSelection:
    """Choose distinct primes for d_1 <= ... <= d_{e-1}, working from i = e-1 down to 1.

    Inside each interval the largest unused prime is taken.  If that greedy
    pass ever runs dry, an exhaustive matching is tried and the result is
    flagged with ``fallback_used``.
    """
    if e < 3:
        raise ArgumentError(f"prime selection requires e >= 3, got {e}")
    degrees = tuple(int(d) for d in degrees)
    if len(degrees) != e - 1:
        raise ArgumentError(f"expected {e - 1} degrees, got {len(degrees)}")
    if list(degrees) != sorted(degrees):
        raise ArgumentError(f"degrees must be ascending, got {degrees}")
    threshold = selection_threshold(e)
    if degrees[0] < threshold:
        raise ThresholdError(
            "d_1 >= A(e)", f"d_1 = {degrees[0]} < A({e}) = {threshold}"
        )
    fact = factorial(e + 1)
    candidates = []
    for d in degrees:
        lo, hi = _interval(d, fact)
        candidates.append(sorted(primes_between(lo, hi), reverse=True))

    picked: List[Optional[int]] = [None] * len(degrees)
    used = set()
    greedy_ok = True
    for i in range(len(degrees) - 1, -1, -1):
        choice = next((p for p in candidates[i] if p not in used), None)
        if choice is None:
            greedy_ok = False
            break
        picked[i] = choice
        used.add(choice)

    if greedy_ok:
        primes = tuple(picked)  # type: ignore[arg-type]
    else:
        matched = _match(candidates)
        if matched is None:
            raise ExhaustedError(f"no distinct primes available for degrees {degrees}")
        primes = tuple(matched)
    return PrimeDegreeSelection(
        e=e,
        input_degrees=degrees,
        primes=primes,
        adjusted=tuple(fact * q for q in primes),
        fallback_used=not greedy_ok,
    )


def min_curve_degree(n: int, f: int, primes: Sequence[int]) -> int:
    """Least d > 0 with prod(q_i) dividing (n+f-2)! * d.

    Curves in a very general complete intersection of type
    ((n+f-1)! q_1, ..., (n+f-1)! q_f) have degree divisible by this number
    when the q_i are pairwise coprime and each exceeds 2^(n+f-1).
    """
    primes = tuple(int(q) for q in primes)
    if n < 1 or f < 1 or n + f < 2:
        raise ArgumentError(f"need n >= 1 and f >= 1, got n={n}, f={f}")
    if len(primes) != f:
        raise ArgumentError(f"expected {f} values q_i, got {len(primes)}")
    bound = 2 ** (n + f - 1)
    for q in primes:
        if q <= bound:
            raise HypothesisError("q_i > 2^(n+f-1)", f"{q} <= {bound}")
    for i in range(f):
        for j in range(i + 1, f):
            if math.gcd(primes[i], primes[j]) != 1:
                raise HypothesisError(
                    "q_i pairwise coprime", f"gcd({primes[i]}, {primes[j]}) > 1"
                )
    prod = math.prod(primes)
    return prod // math.gcd(prod, factorial(n + f - 2))
