import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lenstorsion.chain import lens_cw_complex, random_acyclic_complex, torsion_of_acyclic
from lenstorsion.chainfile import ChainFormatError, format_chain, parse_chain_text, parse_polynomial
from lenstorsion.cyclotomic import CyclotomicNumber, root_of_unity
from lenstorsion.lens import make_lens

EXAMPLE = """\
# L(5;1,1) with q = 1
order 5
dims 1 1 1 1
boundary 0
z^1 - 1
boundary 1
0
boundary 2
z - 1
"""


def test_parse_polynomial():
    assert parse_polynomial("z^1 - 1", 5) == root_of_unity(5, 1) - 1
    assert parse_polynomial("3/2*z^2 + z - 4", 5) == CyclotomicNumber(5, [-4, 1, "3/2"])
    assert parse_polynomial("z^7", 5) == root_of_unity(5, 2)
    assert parse_polynomial("-z", 4) == -root_of_unity(4, 1)


@pytest.mark.parametrize("bad", ["", "3z", "z^", "+", "1++2", "x", "1/0"])
def test_parse_polynomial_errors(bad):
    with pytest.raises((ChainFormatError, ZeroDivisionError)):
        parse_polynomial(bad, 5)


def test_parse_example_matches_lens_complex():
    C = parse_chain_text(EXAMPLE)
    assert C == lens_cw_complex(make_lens(5, [1, 1]), 1)
    assert torsion_of_acyclic(C) == ((root_of_unity(5, 1) - 1) ** 2).inverse()


def test_omitted_block_is_zero():
    C = parse_chain_text(EXAMPLE.replace("boundary 1\n0\n", ""))
    assert C.boundaries[1][0][0].is_zero()


@pytest.mark.parametrize(
    "text,line",
    [
        ("dims 1 1\nboundary 0\n1\n", 2),
        ("order 5\ndims 1 1\nboundary 3\n", 3),
        ("order 5\ndims 1 2\nboundary 0\n1\n", 4),
        ("order 5\ndims 1 1\nboundary 0\n1\n1\n", 5),
        ("order five\n", 1),
        ("order 5\ndims 1 1\nstray\n", 3),
    ],
)
def test_format_errors_carry_line(text, line):
    with pytest.raises(ChainFormatError) as info:
        parse_chain_text(text)
    assert info.value.line == line


@given(st.integers(0, 5000), st.sampled_from([1, 3, 4, 5]))
def test_round_trip(seed, order):
    C = random_acyclic_complex(random.Random(seed), order)
    assert parse_chain_text(format_chain(C)) == C
