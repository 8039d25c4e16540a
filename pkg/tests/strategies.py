from fractions import Fraction

import hypothesis.strategies as st

from lenstorsion.cyclotomic import CyclotomicNumber, euler_phi
from lenstorsion.lens import make_lens

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclotomics(draw, orders=(1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15)):
    order = draw(st.sampled_from(orders))
    coeffs = draw(st.lists(small_rationals, min_size=euler_phi(order), max_size=euler_phi(order)))
    return CyclotomicNumber(order, coeffs)


@st.composite
def lens_spaces(draw, max_m=25, max_n=3):
    m = draw(st.integers(3, max_m))
    units = [a for a in range(1, m) if Fraction(a, m).denominator == m]
    p = draw(st.lists(st.sampled_from(units), min_size=1, max_size=max_n))
    return make_lens(m, p)


def units_of(m):
    return [a for a in range(1, m) if Fraction(a, m).denominator == m]
