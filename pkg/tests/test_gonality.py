from fractions import Fraction

import pytest

from cigonality.errors import ArgumentError, HypothesisError, ThresholdError
from cigonality.gonality import (
    BoundCertificate,
    Hypothesis,
    cg_bound_codim2,
    cg_bound_surface_general,
    cg_bound_surface_special,
    constant_A,
    constant_B,
    special_coefficient,
)


def test_codim2_examples():
    c = cg_bound_codim2(2, 6, 6)
    assert c.bound_rational == Fraction(8, 3) and c.integer_guarantee == 3
    assert all(h.satisfied for h in c.hypotheses)
    c = cg_bound_codim2(3, 8, 8)
    assert c.bound_rational == Fraction(8, 3) and c.integer_guarantee == 3
    with pytest.raises(HypothesisError) as info:
        cg_bound_codim2(2, 5, 9)
    assert info.value.hypothesis == "7a >= 18n"
    with pytest.raises(HypothesisError) as info:
        cg_bound_codim2(2, 9, 5)
    assert info.value.hypothesis == "7b >= 18n"


def test_codim2_is_symmetric():
    assert cg_bound_codim2(2, 6, 11).bound_rational == cg_bound_codim2(2, 11, 6).bound_rational


def test_special_examples():
    c = cg_bound_surface_special(2, (18, 18))
    assert c.bound_rational == Fraction(1, 36) and c.integer_guarantee == 1
    assert any("2^(e+1)" in n for n in c.notes)
    c = cg_bound_surface_special(3, (120, 168, 200))
    assert c.bound_rational == Fraction(2 * 120 * 168 * 200, 3**4 * 11 * 24**3)
    with pytest.raises(HypothesisError) as info:
        cg_bound_surface_special(2, (18, 12))
    assert info.value.hypothesis == "a_1 <= ... <= a_e"


@pytest.mark.parametrize(
    "e,adjusted,name",
    [
        (2, (15, 18), "(e+1)! divides a_i for i < e"),
        (3, (48, 96, 100), "q_i pairwise coprime"),
        (3, (96, 48, 100), "a_1 <= ... <= a_e"),
    ],
)
def test_special_form_violations(e, adjusted, name):
    with pytest.raises(HypothesisError) as info:
        cg_bound_surface_special(e, adjusted)
    assert info.value.hypothesis == name


def test_general_examples():
    assert 81 * 11 * 24**3 * 4 == 49268736
    c = cg_bound_surface_general(3, (400, 450, 500))
    assert c.bound_rational == Fraction(400 * 450 * 500, 24634368)
    assert c.integer_guarantee == 4
    with pytest.raises(ThresholdError):
        cg_bound_surface_general(3, (100, 450, 500))
    with pytest.raises(ArgumentError):
        cg_bound_surface_general(2, (400, 500))


def test_general_bound_below_special_bound():
    # the general bound comes from the adjusted degrees, each at least half the original
    for degrees in [(400, 450, 500), (800, 900, 1000), (400, 400, 400)]:
        c = cg_bound_surface_general(3, degrees)
        consts = dict(c.constants_used)
        assert c.bound_rational <= consts["special_form_bound"]


def test_constants():
    assert constant_B(2) == Fraction(1, 23328)
    assert constant_B(3) == Fraction(1, 24634368)
    assert constant_B(4) == Fraction(2, 81 * 14 * 120**4 * 8)
    assert constant_A(2) == 34 and constant_A(3) == 400
    assert special_coefficient(2) == Fraction(2, 81 * 8 * 36)


def test_certificate_invariants():
    with pytest.raises(HypothesisError):
        BoundCertificate("x", Fraction(1), 2, (Hypothesis("h", False),))
    with pytest.raises(ArgumentError):
        BoundCertificate("x", Fraction(5, 2), 2, ())


def test_special_reports_every_setup_hypothesis():
    names = {h.name for h in cg_bound_surface_special(2, (18, 18)).hypotheses}
    assert {"a_1 >= 3e", "q_i pairwise coprime", "bigness (L^3) > 0"} <= names
