from fractions import Fraction

import mpmath
import pytest
from hypothesis import given

from lenstorsion.eta import eta_q, eta_sum, eta_trivial
from lenstorsion.lens import LensError, make_lens
from lenstorsion.verify import eta_float

from strategies import lens_spaces


def as_mpf(r: Fraction):
    return mpmath.mpf(r.numerator) / r.denominator


def test_eta_examples():
    assert eta_q(make_lens(5, [1, 1]), 1) == Fraction(-1, 10)
    assert eta_q(make_lens(3, [1, 1, 1]), 1) == Fraction(-1, 18)
    assert eta_trivial(make_lens(3, [1, 1, 1])) == 0
    assert eta_trivial(make_lens(5, [1, 1])) == Fraction(-2, 5)
    assert eta_trivial(make_lens(7, [1, 1])) == Fraction(-5, 7)


def test_eta_examples_against_float_sums():
    with mpmath.workdps(50):
        # n = 2: i^{-2}/(2m) sum cos(2 pi l q/m) cot^2
        s = -sum(mpmath.cos(2 * mpmath.pi * l / 5) * mpmath.cot(mpmath.pi * l / 5) ** 2 for l in range(1, 5)) / 10
        assert abs(s - as_mpf(eta_q(make_lens(5, [1, 1]), 1))) < mpmath.mpf(10) ** -40
        # n = 3: i^{1-3}/(2m) sum sin(2 pi l q/m) cot^3
        s = -sum(mpmath.sin(2 * mpmath.pi * l / 3) * mpmath.cot(mpmath.pi * l / 3) ** 3 for l in range(1, 3)) / 6
        assert abs(s - as_mpf(eta_q(make_lens(3, [1, 1, 1]), 1))) < mpmath.mpf(10) ** -40


def test_trivial_character_rejected():
    with pytest.raises(LensError):
        eta_q(make_lens(5, [1, 1]), 0)


@given(lens_spaces(max_m=30, max_n=4))
def test_parity_under_conjugation(L):
    for q in range(1, L.m):
        assert eta_q(L, L.m - q) == (-1) ** L.n * eta_q(L, q)


@given(lens_spaces(max_m=30, max_n=4))
def test_float_agreement_random(L):
    for q in range(1, L.m):
        exact = eta_q(L, q)
        with mpmath.workdps(50):
            assert abs(eta_float(L.m, L.p, q) - as_mpf(exact)) < mpmath.mpf(10) ** -30


@given(lens_spaces(max_m=40, max_n=4))
def test_trivial_vanishes_for_odd_n(L):
    if L.n % 2:
        assert eta_trivial(L) == 0
        assert eta_sum(L, 0).is_zero()


@pytest.mark.parametrize("m", range(3, 51))
def test_cot_square_closed_form(m):
    assert eta_trivial(make_lens(m, [1, 1])) == Fraction(-(m - 1) * (m - 2), 6 * m)
