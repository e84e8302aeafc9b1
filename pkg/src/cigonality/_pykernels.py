"""Pure-Python reference kernels; ``_ckernels.pyx`` mirrors these signatures."""


def sieve_segment(lo, hi, base_primes):
    """Primality flags for the integers in [lo, hi).

    ``base_primes`` must contain every prime up to isqrt(hi - 1).
    """
    size = hi - lo
    if size <= 0:
        return bytearray()
    flags = bytearray(b"\x01") * size
    if lo < 2:
        for i in range(min(2, hi) - lo):
            flags[i] = 0
    for p in base_primes:
        if p * p >= hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start >= hi:
            continue
        count = len(range(start - lo, size, p))
        flags[start - lo :: p] = bytes(count)
    return flags


def accumulate_counts(flags, offset):
    """Running prime counts: out[i] = offset + sum(flags[: i + 1])."""
    out = [0] * len(flags)
    c = offset
    for i, f in enumerate(flags):
        c += f
        out[i] = c
    return out


def last_deficit(pi, n, limit):
    """Largest x in [0, limit] with pi[x] - pi[x // 2] < n."""
    for x in range(limit, -1, -1):
        if pi[x] - pi[x >> 1] < n:
            return x
    return -1


def box_counts(degrees):
    """Coefficients of prod_i (1 + t + ... + t**(a_i - 1)).

    Entry j counts the index vectors 0 <= j_i < a_i with j_1 + ... + j_f = j.
    """
    coeffs = [1]
    for a in degrees:
        out = [0] * (len(coeffs) + a - 1)
        # sliding window sum of width a
        window = 0
        for j in range(len(out)):
            if j < len(coeffs):
                window += coeffs[j]
            if j - a >= 0 and j - a < len(coeffs):
                window -= coeffs[j - a]
            out[j] = window
        coeffs = out
    return coeffs


def codim2_scan(n, a, b, s, k_lo, k_hi):
    """Scan k in [k_lo, k_hi] and every admissible total S with balanced multiplicities.

    Returns ``(k, S, states)`` for the first feasible pair in (k, S) order, or
    ``(0, 0, states)`` when none exists; ``states`` counts the (k, S) pairs examined.
    """
    parts = s + 1
    states = 0
    for k in range(k_lo, k_hi + 1):
        s_lo = max((b * k) // (n + 1) + 1, parts)
        s_hi = (parts * b * k) // (s * (n + 1))
        rhs = k * k + (2 * n - a) * k
        for total in range(s_lo, s_hi + 1):
            states += 1
            t, q = divmod(total, parts)
            # sum of m(m-1) over the balanced vector
            qsum = (parts - q) * t * (t - 1) + q * (t + 1) * t
            if qsum <= rhs:
                return k, total, states
    return 0, 0, states
