import math
import random
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cigonality.errors import ArgumentError, HypothesisError, ThresholdError
from cigonality.exactnum import factorial
from cigonality.primesel import (
    PrimeTable,
    is_prime,
    min_curve_degree,
    prime_pi,
    primes_between,
    ramanujan_prime,
    select_prime_degrees,
    selection_threshold,
    sondow_bounds,
)


def _trial_division(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.mark.parametrize("x,expected", [(10, 4), (1, 0), (100, 25), (0, 0), (10**5, 9592)])
def test_prime_pi(x, expected):
    assert prime_pi(x) == expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if _trial_division(n)]


def test_fresh_table_grows_consistently():
    t = PrimeTable(initial=10)
    t.extend(5000)
    t.extend(40000)
    assert t.pi(40000) == prime_pi(40000)
    assert t.primes_between(39000, 39100) == [p for p in range(39000, 39101) if _trial_division(p)]


def test_concurrent_extension():
    t = PrimeTable(initial=10)
    limits = [1000 * k for k in range(1, 40)]
    results = {}

    def work(x):
        results[x] = t.pi(x)

    threads = [threading.Thread(target=work, args=(x,)) for x in limits]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert results == {x: prime_pi(x) for x in limits}


# R_n recomputed by a literal scan with trial-division primality
def _ramanujan_naive(n, limit):
    pi = [0] * (limit + 1)
    c = 0
    for x in range(limit + 1):
        c += _trial_division(x)
        pi[x] = c
    last = max(x for x in range(limit + 1) if pi[x] - pi[x // 2] < n)
    return last + 1


def test_ramanujan_first_twenty_against_naive():
    ours = [ramanujan_prime(n) for n in range(1, 21)]
    assert ours == [_ramanujan_naive(n, 400) for n in range(1, 21)]
    assert ours[:5] == [2, 11, 17, 29, 41]


@pytest.mark.parametrize("n", [1, 7, 20, 100])
def test_sondow_brackets(n):
    low, high = sondow_bounds(n)
    r = ramanujan_prime(n)
    assert low.compare_lt(r) is True
    assert high.compare_lt(r) is False


def test_thresholds():
    assert selection_threshold(2) == 34
    assert selection_threshold(3) == 400
    assert selection_threshold(5) == 31941
    with pytest.raises(ArgumentError):
        selection_threshold(1)


def test_threshold_is_true_ceiling():
    # (e+1)! m ln m with m = 4(e-1); compare against float with generous margin
    for e in range(2, 9):
        m = 4 * (e - 1)
        x = factorial(e + 1) * m * math.log(m)
        assert selection_threshold(e) == math.ceil(x)
        assert abs(x - round(x)) > 1e-6  # float is trustworthy here


def test_selection_examples():
    sel = select_prime_degrees(3, (400, 500))
    assert sel.primes == (13, 19) and sel.adjusted == (312, 456)
    assert not sel.fallback_used
    two = select_prime_degrees(3, (400, 400))
    assert len(set(two.primes)) == 2
    assert all(Fraction(400, 48) < q <= Fraction(400, 24) for q in two.primes)
    with pytest.raises(ThresholdError) as info:
        select_prime_degrees(3, (300, 400))
    assert info.value.hypothesis == "d_1 >= A(e)"


@pytest.mark.parametrize(
    "e,degrees",
    [(2, (400,)), (3, (400,)), (3, (500, 400))],
)
def test_selection_bad_shape(e, degrees):
    with pytest.raises(ArgumentError):
        select_prime_degrees(e, degrees)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 5), st.data())
def test_selection_invariants(e, data):
    a = selection_threshold(e)
    degrees = sorted(data.draw(st.lists(st.integers(a, 20 * a), min_size=e - 1, max_size=e - 1)))
    sel = select_prime_degrees(e, degrees)
    fact = factorial(e + 1)
    assert len(set(sel.primes)) == e - 1
    for d, q, adj in zip(degrees, sel.primes, sel.adjusted):
        assert _trial_division(q)
        assert d < 2 * adj and adj <= d and adj == fact * q


def test_greedy_takes_largest_unused():
    sel = select_prime_degrees(3, (400, 400))
    candidates = primes_between(400 // 48 + 1, 400 // 24)
    assert sel.primes[1] == max(candidates)
    assert sel.primes[0] == max(p for p in candidates if p != sel.primes[1])


def test_min_curve_degree_examples():
    assert min_curve_degree(3, 2, (17, 19)) == 323
    assert min_curve_degree(3, 1, (17,)) == 17
    with pytest.raises(HypothesisError) as info:
        min_curve_degree(2, 1, (3,))
    assert info.value.hypothesis == "q_i > 2^(n+f-1)"
    with pytest.raises(HypothesisError):
        min_curve_degree(3, 2, (17, 34))


@given(st.sampled_from([17, 19, 23, 29, 31, 37]), st.sampled_from([41, 43, 47, 53]))
def test_min_curve_degree_by_scan(p, q):
    # least d with pq | 3! d, recomputed by scanning
    expected = next(d for d in range(1, p * q + 1) if (6 * d) % (p * q) == 0)
    assert min_curve_degree(3, 2, (p, q)) == expected
