from fractions import Fraction
from math import factorial

import pytest
import sympy

from baxtab.series import (
    WALK_ARGUMENT_SCALE,
    bessel_series,
    conjecture_check,
    osc_boundary_egf,
    syt_egf_det,
    walk_egf_det,
)
from baxtab.tableaux import count_syt_bounded_height
from baxtab.walks import BOUNDARY, Chamber, Model, StepRule, count_walks, delta


def test_b0_b1_coefficients():
    assert bessel_series(0, 4).coeffs == (1, 0, 1, 0, Fraction(1, 4))
    assert bessel_series(1, 5).coeffs == (0, 1, 0, Fraction(1, 2), 0, Fraction(1, 12))


def test_negative_index_is_symmetric():
    assert bessel_series(-3, 12) == bessel_series(3, 12)


@pytest.mark.parametrize("j", [0, 1, 2, 5])
def test_against_modified_bessel(j):
    t = sympy.Symbol("t")
    expansion = sympy.series(sympy.besseli(j, 2 * t), t, 0, 13).removeO()
    expected = [sympy.Rational(expansion.coeff(t, n)) for n in range(13)]
    assert [sympy.Rational(c.numerator, c.denominator) for c in bessel_series(j, 12).coeffs] == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_syt_determinant(k):
    assert syt_egf_det(k, 16).counts() == [count_syt_bounded_height(n, 2 * k) for n in range(17)]


def test_syt_needs_k():
    with pytest.raises(ValueError):
        syt_egf_det(0, 4)


def test_single_walk_determinant():
    # W_1 ballot walks 1 -> 1 of length 2n: Catalan numbers
    counts = walk_egf_det((1,), (1,), 12).counts()
    assert counts[::2] == [1, 1, 2, 5, 14, 42, 132]
    assert not any(counts[1::2])


@pytest.mark.parametrize("k", [1, 2, 3])
def test_boundary_determinant_against_dp(k):
    rule = StepRule(Model.OSCILLATING, k)
    expected = [count_walks(rule, Chamber.W, delta(k), n, BOUNDARY) for n in range(13)]
    assert osc_boundary_egf(k, 12).counts() == expected


def test_argument_scale_two_is_wrong():
    assert WALK_ARGUMENT_SCALE == 1
    wrong = osc_boundary_egf(2, 8, scale=2)
    right = osc_boundary_egf(2, 8)
    assert wrong.first_disagreement(right) == 1
    assert [c * factorial(n) for n, c in enumerate(wrong.coeffs)] != right.counts()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_conjecture_holds(k):
    report = conjecture_check(k, 14)
    assert report.agree
    assert report.first_disagreement is None
    assert report.walk_counts == report.syt_counts


def test_conjecture_guard():
    with pytest.raises(ValueError):
        conjecture_check(9, 4)
