import logging
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singularity_app.core import generators
from singularity_app.core.boundary import (BoundaryData, CurveGerm, a1_case_lhs, boundary_excess,
                                           inequality_one, inequality_one_terms, lemma3_constant, mu,
                                           pullback_excess, quasi_log_terminal_check)
from singularity_app.core.cycles import analyse_germ
from singularity_app.core.errors import EmptyDy, InvalidBoundary, MuUndefined


def curve(coefficient, incidence, label=None):
    return CurveGerm.create(Fraction(coefficient), incidence, label)


def boundary(*curves):
    return BoundaryData(tuple(curves))


def test_pullback_excess(a1_3, a2_23, smooth):
    assert pullback_excess(smooth, curve(1, {"E": 2})).values == (2,)
    assert pullback_excess(a1_3, curve(1, {"1": 1})).values == (Fraction(1, 3),)
    # A.x = -(1, 0) on the (2,3) chain
    assert pullback_excess(a2_23, curve(1, {"1": 1})).values == (Fraction(3, 5), Fraction(1, 5))


def test_mu_at_smooth_point_is_half_multiplicity(smooth):
    assert mu(smooth, boundary(curve("1/2", {"E": 1}))) == Fraction(1, 4)
    assert mu(smooth, boundary(curve("1/2", {"E": 2}))) == Fraction(1, 2)
    assert mu(smooth, boundary(curve("1/3", {"E": 1}), curve("1/2", {"E": 1}))) == Fraction(5, 12)


def test_mu(a1_3, d4):
    assert mu(a1_3, boundary(curve("1/2", {"1": 1}))) == Fraction(1, 4)
    assert mu(a1_3, None) == 0
    assert mu(d4, BoundaryData()) == 0


def test_mu_needs_log_terminal_germ(nlt_star):
    assert mu(nlt_star, None) == 0
    with pytest.raises(MuUndefined, match="vertex c"):
        mu(nlt_star, boundary(curve("1/2", {"l1": 1})))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 31), st.integers(1, 12))
def test_mu_scales_with_the_boundary(seed, twelfths):
    g, b = generators.random_qlt_instance(generators.make_rng(seed))
    t = Fraction(twelfths, 12)
    assert mu(g, b.scaled(t)) == t * mu(g, b)
    for c in b.curves:
        assert pullback_excess(g, c).is_effective()


def test_boundary_excess_is_linear(a2_23):
    b = boundary(curve("1/2", {"1": 1}), curve("1/3", {"2": 2}))
    expected = (pullback_excess(a2_23, b.curves[0]) * Fraction(1, 2)
                + pullback_excess(a2_23, b.curves[1]) * Fraction(1, 3))
    assert boundary_excess(a2_23, b) == expected


def test_qlt_check(smooth, a1_3, nlt_star):
    report = quasi_log_terminal_check(smooth, None)
    assert report.is_qlt and report.worst_coefficient == -1

    report = quasi_log_terminal_check(a1_3, boundary(curve("1/2", {"1": 1})))
    assert report.is_qlt
    assert report.worst_coefficient == Fraction(1, 2)

    assert not quasi_log_terminal_check(a1_3, boundary(curve("9/10", {"1": 8}))).is_qlt
    assert not quasi_log_terminal_check(nlt_star, None).is_qlt

    report = quasi_log_terminal_check(smooth, boundary(curve(1, {"E": 1})))
    assert not report.integral_part_zero and not report.is_qlt


def test_invalid_curves(a1_3):
    with pytest.raises(InvalidBoundary):
        curve(-1, {"1": 1})
    with pytest.raises(InvalidBoundary):
        curve("1/2", {"1": 0})
    with pytest.raises(InvalidBoundary):
        curve("1/2", {"1": -1, "2": 2})
    with pytest.raises(InvalidBoundary):
        pullback_excess(a1_3, curve("1/2", {"7": 1}))


def test_lemma3_constant_at_smooth_point(smooth):
    b = boundary(curve("1/2", {"E": 1}, "C"))
    d = boundary(curve("5/2", {"E": 1}, "C"))
    constant = lemma3_constant(smooth, b, d, analyse_germ(smooth))
    # (1 - 1/2)/(5/2) on the curve beats (1 + 1 - 1/2)/(5/2) on the exceptional curve
    assert constant.value == Fraction(1, 5)
    assert constant.attained_at == "curve C"
    assert constant.hypothesis_holds


def test_lemma3_constant_flags_hypothesis(a1_3, caplog):
    d = boundary(curve(1, {"1": 1}))
    with caplog.at_level(logging.WARNING):
        constant = lemma3_constant(a1_3, None, d, analyse_germ(a1_3))
    assert not constant.hypothesis_holds
    assert "not an integer" in caplog.text
    assert constant.value == 1


def test_lemma3_constant_needs_dy(a1_3):
    with pytest.raises(EmptyDy):
        lemma3_constant(a1_3, None, BoundaryData(), analyse_germ(a1_3))


def test_inequality_one_at_a1(a1_3):
    b = boundary(curve("1/2", {"1": 1}))
    d = boundary(curve(2, {"1": 1}))
    c = Fraction(1, 2)
    delta = analyse_germ(a1_3)
    terms = inequality_one_terms(a1_3, b, d, delta, c, {"1": 1})
    assert terms == Fraction(5, 6)

    lhs, holds = inequality_one(c, mu(a1_3, b), delta.delta_y, terms)
    assert holds
    assert lhs == Fraction(13, 12)
    assert lhs == a1_case_lhs(Fraction(1), Fraction(1, 4), Fraction(1, 3), c)


def test_inequality_one_strict():
    lhs, holds = inequality_one(Fraction(1, 2), Fraction(0), Fraction(0), Fraction(1))
    assert lhs == 1 and not holds
