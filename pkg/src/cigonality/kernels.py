"""Hot-loop kernels with a compiled backend and a pure-Python fallback.

The Cython extension ``_ckernels`` is used when it was built; otherwise, or
when ``CIGONALITY_PURE_PYTHON`` is set to a non-empty value, the reference
implementations in ``_pykernels`` are used.  Both produce identical results;
the wrappers below route inputs that could overflow 64-bit integers to the
Python implementation regardless of the selected backend.
"""

import os

from . import _pykernels

_INT64_SAFE = 1 << 62

if os.environ.get("CIGONALITY_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
        BACKEND = "python"


def sieve_segment(lo, hi, base_primes):
    if hi >= _INT64_SAFE:
        return _pykernels.sieve_segment(lo, hi, base_primes)
    return _impl.sieve_segment(lo, hi, base_primes)


def accumulate_counts(flags, offset):
    return _impl.accumulate_counts(flags, offset)


def last_deficit(pi, n, limit):
    return _impl.last_deficit(pi, n, limit)


def box_counts(degrees):
    prod = 1
    for a in degrees:
        prod *= a
    if prod >= _INT64_SAFE:
        return _pykernels.box_counts(degrees)
    return _impl.box_counts(degrees)


def codim2_scan(n, a, b, s, k_lo, k_hi):
    # largest intermediate is about max((s+1)*b*k, S**2, k**2); keep all under 2**62
    bound = (s + 1) * b * max(k_hi, 1) * (n + 1) + a * max(k_hi, 1)
    if bound * bound >= _INT64_SAFE:
        return _pykernels.codim2_scan(n, a, b, s, k_lo, k_hi)
    return _impl.codim2_scan(n, a, b, s, k_lo, k_hi)
