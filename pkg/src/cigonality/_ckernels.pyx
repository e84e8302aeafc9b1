# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ``_pykernels``; callers guard against int64 overflow."""


def sieve_segment(long long lo, long long hi, base_primes):
    cdef long long size = hi - lo
    if size <= 0:
        return bytearray()
    flags = bytearray(b"\x01") * size
    cdef unsigned char[::1] view = flags
    cdef long long i, p, start
    if lo < 2:
        for i in range(min(2, hi) - lo):
            view[i] = 0
    for obj in base_primes:
        p = obj
        if p * p >= hi:
            break
        start = p * p
        if start < lo:
            start = ((lo + p - 1) // p) * p
        i = start - lo
        while i < size:
            view[i] = 0
            i += p
    return flags


def accumulate_counts(const unsigned char[::1] flags, long long offset):
    cdef Py_ssize_t n = flags.shape[0]
    cdef Py_ssize_t i
    cdef long long c = offset
    out = [0] * n
    for i in range(n):
        c += flags[i]
        out[i] = c
    return out


def last_deficit(pi, long long n, long long limit):
    cdef long long[::1] arr
    import array
    buf = array.array("q", pi[: limit + 1])
    arr = buf
    cdef long long x = limit
    while x >= 0:
        if arr[x] - arr[x >> 1] < n:
            return x
        x -= 1
    return -1


def box_counts(degrees):
    cdef long long total = 1
    for a in degrees:
        total += a - 1
    import array
    cur = array.array("q", [0]) * total
    nxt = array.array("q", [0]) * total
    cdef long long[::1] c = cur
    cdef long long[::1] d = nxt
    cdef long long length = 1, newlen, j, window, aa
    c[0] = 1
    for a in degrees:
        aa = a
        newlen = length + aa - 1
        window = 0
        for j in range(newlen):
            if j < length:
                window += c[j]
            if j - aa >= 0 and j - aa < length:
                window -= c[j - aa]
            d[j] = window
        for j in range(newlen):
            c[j] = d[j]
        length = newlen
    return [c[j] for j in range(length)]


def codim2_scan(long long n, long long a, long long b, long long s,
                long long k_lo, long long k_hi):
    cdef long long parts = s + 1
    cdef long long states = 0
    cdef long long k, total, s_lo, s_hi, rhs, t, q, qsum
    for k in range(k_lo, k_hi + 1):
        s_lo = (b * k) // (n + 1) + 1
        if s_lo < parts:
            s_lo = parts
        s_hi = (parts * b * k) // (s * (n + 1))
        rhs = k * k + (2 * n - a) * k
        total = s_lo
        while total <= s_hi:
            states += 1
            t = total // parts
            q = total - t * parts
            qsum = (parts - q) * t * (t - 1) + q * (t + 1) * t
            if qsum <= rhs:
                return k, total, states
            total += 1
    return 0, 0, states
