import math
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cigonality.errors import ArgumentError
from cigonality.exactnum import (
    Enclosure,
    binomial,
    factorial,
    iroot,
    log_enclosure,
    power_enclosure,
)


@pytest.mark.parametrize("top,bottom,expected", [(5, 3, 10), (2, 5, 0), (-1, 0, 0), (0, 0, 1)])
def test_binomial_values(top, bottom, expected):
    assert binomial(top, bottom) == expected


def test_binomial_negative_bottom():
    with pytest.raises(ArgumentError):
        binomial(3, -1)


@pytest.mark.parametrize("n,expected", [(0, 1), (4, 24), (6, 720)])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_negative():
    with pytest.raises(ArgumentError):
        factorial(-1)


@given(st.integers(0, 10**40), st.integers(1, 7))
def test_iroot_brackets(v, k):
    r = iroot(v, k)
    assert r**k <= v < (r + 1) ** k


def test_power_enclosure_examples():
    assert power_enclosure(4, 3, 2, 6) == Enclosure(8, 8)
    e = power_enclosure(2, 3, 2, 6)
    assert e.width <= Fraction(1, 10**6)
    assert e.contains(Fraction(2828427, 10**6) + Fraction(1, 10**7))
    assert power_enclosure(1, 7, 5, 3) == Enclosure(1, 1)


@settings(max_examples=200)
@given(st.integers(1, 10**6), st.integers(-6, 9), st.integers(1, 5), st.integers(1, 25))
def test_power_enclosure_contains_true_value(base, num, den, p):
    enc = power_enclosure(base, num, den, p)
    assert enc.width <= Fraction(1, 10**p)
    # enc.lower^den <= base^num <= enc.upper^den, checked exactly
    target = Fraction(base) ** num
    assert enc.lower**den <= target <= enc.upper**den


def _decimal_log(x: Fraction, digits: int = 60) -> Decimal:
    getcontext().prec = digits
    return (Decimal(x.numerator) / Decimal(x.denominator)).ln()


@pytest.mark.parametrize("x", [Fraction(1), Fraction(8), Fraction(1, 2), Fraction(10**9, 7), Fraction(3, 10**5)])
@pytest.mark.parametrize("p", [3, 10, 25])
def test_log_enclosure_against_decimal(x, p):
    enc = log_enclosure(x, p)
    true = Fraction(_decimal_log(x))
    assert enc.lower - Fraction(1, 10**50) <= true <= enc.upper + Fraction(1, 10**50)
    assert enc.width <= Fraction(1, 10**p)


def test_log_examples():
    assert log_enclosure(1, 10) == Enclosure(0, 0)
    assert log_enclosure(8, 6).contains(Fraction("2.0794415"))
    assert log_enclosure(Fraction(1, 2), 6).contains(Fraction("-0.6931471805"))


@pytest.mark.parametrize("x", [0, -1, Fraction(-1, 3)])
def test_log_rejects_nonpositive(x):
    with pytest.raises(ArgumentError):
        log_enclosure(x, 5)


def test_enclosure_arithmetic_is_outward():
    a = Enclosure(Fraction(1), Fraction(2))
    b = Enclosure(Fraction(-3), Fraction(1, 2))
    assert a + b == Enclosure(-2, Fraction(5, 2))
    assert a * b == Enclosure(-6, 1)
    assert a - b == Enclosure(Fraction(1, 2), 5)
    assert (a / Enclosure(2, 4)) == Enclosure(Fraction(1, 4), 1)
    with pytest.raises(ArgumentError):
        a / b
    with pytest.raises(ArgumentError):
        Enclosure(2, 1)


def test_enclosure_comparisons():
    e = Enclosure(Fraction(1), Fraction(2))
    assert e.compare_le(2) is True
    assert e.compare_lt(2) is None
    assert e.compare_le(Fraction(1, 2)) is False
    assert e.compare_le(Fraction(3, 2)) is None


@given(st.fractions(min_value=-100, max_value=100), st.fractions(min_value=0, max_value=5), st.integers(0, 8))
def test_round_outward_contains(lo, w, digits):
    e = Enclosure(lo, lo + w)
    r = e.round_outward(digits)
    assert r.contains_enclosure(e)
    assert r.width <= e.width + Fraction(2, 10**digits)
