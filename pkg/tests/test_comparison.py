import json
from fractions import Fraction

import pytest
from hypothesis import given

from lenstorsion.comparison import (
    UnsupportedDimensionError,
    equality_scan,
    ratio,
    ratio_table,
    render_table,
    theta_constant,
)
from lenstorsion.lens import make_lens

from strategies import lens_spaces

L511 = make_lens(5, [1, 1])
L3111 = make_lens(3, [1, 1, 1])


def test_ratio_examples():
    assert ratio(L3111, 1, 0).congruent(Fraction(5, 9))
    assert ratio(L3111, 2, 1).congruent(Fraction(-8, 9))
    assert ratio(L3111, 2, 1).r == Fraction(1, 9)
    assert ratio(L3111, 1, 2).congruent(Fraction(2, 9))


def test_theta_examples():
    assert theta_constant(L511, 1).congruent(Fraction(-3, 10))
    assert theta_constant(L511, 3).congruent(Fraction(-7, 10))
    with pytest.raises(UnsupportedDimensionError):
        theta_constant(L3111, 1)


@given(lens_spaces(max_n=4))
def test_theta_symmetric_for_even_n(L):
    if L.dim % 4 == 3:
        for q in range(1, L.m):
            assert theta_constant(L, q) == theta_constant(L, L.m - q)


def test_table_shape_and_no_equality():
    table = ratio_table(L3111)
    assert [[r.q for r in row] for row in table] == [[1, 1, 1], [2, 2, 2]]
    assert [r.s for r in table[0]] == [0, 1, 2]
    assert equality_scan(L3111) == []
    assert all(r.R_phase.r != 0 for row in table for r in row)


@given(lens_spaces(max_m=15, max_n=4))
def test_conjugation_symmetry_odd_n(L):
    if L.n % 2:
        for q in range(1, L.m):
            for s in range(L.m):
                assert ratio(L, L.m - q, s) == -ratio(L, q, s)


@given(lens_spaces(max_m=15, max_n=4))
def test_euler_shift(L):
    for q in range(1, L.m):
        for s in range(L.m - 1):
            assert (ratio(L, q, s + 1) - ratio(L, q, s)).congruent(Fraction(-2 * q, L.m))


@given(lens_spaces(max_m=15, max_n=4))
def test_unit_modulus(L):
    for row in ratio_table(L):
        for r in row:
            assert r.R_magnitude.is_one()


@given(lens_spaces(max_m=12, max_n=3))
def test_scan_is_exhaustive(L):
    hits = equality_scan(L)
    brute = [(q, s) for q in range(1, L.m) for s in range(L.m) if ratio(L, q, s).congruent(0)]
    assert hits == brute


@given(lens_spaces(max_m=12, max_n=2))
def test_theta_relation(L):
    # R - theta is exactly the negated Turaev phase
    if L.dim % 4 != 3:
        return
    for q in range(1, L.m):
        for s in range(L.m):
            diff = ratio(L, q, s) - theta_constant(L, q)
            turaev = Fraction(L.n, 2) + Fraction(q * (2 * s - sum(L.l)), L.m)
            assert diff.congruent(-turaev)


def test_scan_finds_witnesses():
    # L(5;1): n = 1, pick any lens with an equality and check it is reported
    found = None
    for m in range(3, 12):
        for p in ([1], [1, 1], [1, 2]):
            try:
                L = make_lens(m, p)
            except ValueError:
                continue
            hits = equality_scan(L)
            if hits:
                found = (L, hits)
                break
        if found:
            break
    assert found is not None
    L, hits = found
    for q, s in hits:
        assert ratio(L, q, s).r == 0


def test_render_formats():
    table = ratio_table(L3111)
    text = render_table(table, "text")
    assert "±exp(5/9 * i*pi)" in text and "none" in text
    doc = json.loads(render_table(table, "json"))
    assert doc["m"] == "3"
    assert all(isinstance(v, str) for e in doc["entries"] for v in e.values() if v is not None)
    assert doc["entries"][0]["R_phase_over_pi"] == "5/9"
    csv_text = render_table(table, "csv")
    assert csv_text.splitlines()[0].startswith("lens,q,s,R")
    assert len(csv_text.splitlines()) == 7
    with pytest.raises(ValueError):
        render_table(table, "xml")
    assert render_table(table, "json") == render_table(ratio_table(L3111), "json")
