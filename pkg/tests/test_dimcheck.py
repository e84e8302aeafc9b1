from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from cigonality.dimcheck import (
    castelnuovo_slope,
    check_first_surface,
    check_second_surface,
    vanishing_threshold,
)
from cigonality.errors import ArgumentError
from cigonality.hilbert import CompleteIntersectionSpec as CI, h0_ci_koszul


def test_first_surface_example():
    r = check_first_surface(2, (6,), 18, 3)
    assert r.estimate_lower_bound == Fraction(9, 2)
    assert r.exact_h0 == h0_ci_koszul(CI(3, (6,)), 6) == 209
    assert r.both_pass and r.required == 4
    assert not check_first_surface(2, (6,), 18, 10**6).both_pass
    with pytest.raises(ArgumentError):
        check_first_surface(1, (), 18, 3)


def test_second_surface_example():
    r = check_second_surface(2, (6,), 6, 18, 3)
    assert r.estimate_lower_bound == Fraction(9, 2)
    assert r.exact_h0 == h0_ci_koszul(CI(2, (6, 6)), 6)
    assert r.both_pass
    with pytest.raises(ArgumentError):
        check_second_surface(2, (6,), 7, 18, 3)
    assert check_second_surface(2, (6,), 6, 18, 0).both_pass


@pytest.mark.parametrize("e", [2, 3])
def test_estimate_chain_is_a_lower_bound(e):
    for degs in combinations_with_replacement(range(3 * e, 60, 7), e):
        r = check_first_surface(e, degs[:-1], degs[-1], 0)
        assert r.chain_monotone and r.exact_h0 >= r.estimate_lower_bound
        for b1 in {1, degs[-1] // 3}:
            r = check_second_surface(e, degs[:-1], b1, degs[-1], 0)
            assert r.chain_monotone and r.exact_h0 >= r.estimate_lower_bound


def test_formula_helpers():
    assert vanishing_threshold((6,), 2, 3) == 6 - 2 - 2 + 5
    assert castelnuovo_slope((6,), 9) == 12
