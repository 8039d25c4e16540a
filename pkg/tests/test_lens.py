from math import gcd

import pytest
from hypothesis import given

from lenstorsion.lens import LensError, dimension_class, dual_character, make_lens

from strategies import lens_spaces


def test_make_lens_examples():
    assert make_lens(5, [1, 1]).l == (1, 1)
    assert make_lens(7, [2, 3]).l == (4, 5)
    with pytest.raises(LensError):
        make_lens(4, [2])


def test_inverse_oracle_by_scan():
    L = make_lens(7, [2, 3])
    for pk, lk in zip(L.p, L.l):
        assert lk == next(x for x in range(1, 7) if (x * pk) % 7 == 1)


def test_rejects_small_m_and_empty_p():
    with pytest.raises(LensError):
        make_lens(2, [1])
    with pytest.raises(LensError):
        make_lens(5, [])


def test_p_reduced_mod_m():
    L = make_lens(5, [6, -1])
    assert L.p == (1, 4)
    assert L.l == (1, 4)


@pytest.mark.parametrize("m", range(3, 21))
def test_validity_exhaustive(m):
    for a in range(1, m):
        for b in range(1, m):
            ok = gcd(a, m) == 1 and gcd(b, m) == 1
            if ok:
                L = make_lens(m, [a, b])
                assert all((pk * lk) % m == 1 for pk, lk in zip(L.p, L.l))
            else:
                with pytest.raises(LensError):
                    make_lens(m, [a, b])


def test_dual_character():
    assert dual_character(make_lens(5, [1, 1]), 2) == 3
    assert dual_character(make_lens(3, [1]), 1) == 2
    with pytest.raises(LensError):
        dual_character(make_lens(5, [1]), 0)


@given(lens_spaces())
def test_dual_is_involution(L):
    for q in range(1, L.m):
        assert dual_character(L, dual_character(L, q)) == q
        if L.m % 2:
            assert dual_character(L, q) != q


def test_dimension_class():
    assert dimension_class(make_lens(5, [1, 1])) == "3 mod 4"
    assert dimension_class(make_lens(3, [1, 1, 1])) == "1 mod 4"
    assert dimension_class(make_lens(7, [3])) == "1 mod 4"
