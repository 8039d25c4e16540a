"""Exit criteria.  Each test prints one PASS/FAIL line with its runtime."""

import random
import time
from fractions import Fraction

import mpmath
import pytest

from lenstorsion.analytic import refined_analytic_torsion
from lenstorsion.chain import (
    lens_cw_complex,
    mixed_base_choice,
    random_acyclic_complex,
    torsion_of_acyclic,
    turaev_cohomological,
)
from lenstorsion.comparison import UnsupportedDimensionError, ratio, ratio_table, theta_constant
from lenstorsion.cyclotomic import CyclotomicNumber, root_of_unity
from lenstorsion.eta import cot_products, eta_q, eta_trivial
from lenstorsion.lens import make_lens

from strategies import units_of


@pytest.fixture
def report(capsys):
    def emit(name, ok, seconds, limit, detail=""):
        with capsys.disabled():
            status = "PASS" if ok and seconds < limit else "FAIL"
            print(f"\n[acceptance] {status} {name} ({seconds:.2f}s, limit {limit:g}s) {detail}")
        assert ok, detail
        assert seconds < limit, f"{name} took {seconds:.2f}s"

    return emit


def test_criterion_1_theta_l511(report):
    cot_products.cache_clear()
    start = time.perf_counter()
    L = make_lens(5, [1, 1])
    expected = {1: Fraction(-3, 10), 4: Fraction(-3, 10), 2: Fraction(-7, 10), 3: Fraction(-7, 10)}
    got = {q: theta_constant(L, q) for q in expected}
    ok = all(got[q].modulus == 1 and (got[q].r - expected[q]) % 1 == 0 for q in expected)
    report("1 theta of L(5;1,1)", ok, time.perf_counter() - start, 1.0,
           ", ".join(f"q={q}: {got[q].signed()}pi" for q in sorted(got)))


def test_criterion_2_ratio_table_l3111(report):
    cot_products.cache_clear()
    start = time.perf_counter()
    expected = {
        (1, 0): Fraction(5, 9), (1, 1): Fraction(8, 9), (1, 2): Fraction(2, 9),
        (2, 0): Fraction(-5, 9), (2, 1): Fraction(-8, 9), (2, 2): Fraction(-2, 9),
    }
    table = ratio_table(make_lens(3, [1, 1, 1]))
    cells = {(r.q, r.s): r.R_phase for row in table for r in row}
    ok = set(cells) == set(expected) and all(
        cells[k].modulus == 1 and (cells[k].r - expected[k]) % 1 == 0 for k in expected
    )
    report("2 ratio table of L(3;1,1,1)", ok, time.perf_counter() - start, 1.0,
           " ".join(f"{k}:{cells[k].r}" for k in sorted(cells)))


def test_criterion_3_chain_vs_closed_form(report):
    start = time.perf_counter()
    rng = random.Random(31337)
    configs = []
    for m in range(3, 26):
        for _ in range(5):
            p = [rng.choice(units_of(m)) for _ in range(rng.randint(1, 3))]
            configs.append((m, p, rng.randint(1, m - 1)))
    bad = []
    for m, p, q in configs:
        L = make_lens(m, p)
        t = torsion_of_acyclic(lens_cw_complex(L, q))
        # closed form prod (zeta^{q l_k} - 1)^{-1}: check t * prod = ±1
        prod = CyclotomicNumber.from_rational(1, m)
        for lk in L.l:
            prod = prod * (root_of_unity(m, q * lk) - 1)
        if not (t * prod == 1 or t * prod == -1):
            bad.append((m, p, q))
    report("3 chain torsion = closed form", len(configs) >= 100 and not bad,
           time.perf_counter() - start, 30.0, f"{len(configs)} configs, bad={bad}")


def _eta_oracle(m, n, q):
    total = mpmath.mpc(0)
    for l in range(1, m):
        total += mpmath.exp(2j * mpmath.pi * l * q / m) * mpmath.cot(mpmath.pi * l / m) ** n
    return total * (1j) ** (-n) / (2 * m)


def test_criterion_4_eta_rational_and_float(report):
    cot_products.cache_clear()
    start = time.perf_counter()
    worst = mpmath.mpf(0)
    failures = []
    count = 0
    with mpmath.workdps(50):
        for m in range(3, 51):
            for n in range(1, 5):
                L = make_lens(m, [1] * n)
                if n % 2 and eta_trivial(L) != 0:
                    failures.append(("trivial", m, n))
                for q in range(1, m):
                    exact = eta_q(L, q)  # raises unless the cyclotomic sum is rational
                    err = abs(_eta_oracle(m, n, q) - mpmath.mpf(exact.numerator) / exact.denominator)
                    worst = max(worst, err)
                    count += 1
        ok = not failures and worst < mpmath.mpf(10) ** -30
    report("4 eta rational + float", ok, time.perf_counter() - start, 60.0,
           f"{count} values, max |exact - float| = {mpmath.nstr(worst, 3)}, failures={failures}")


def test_criterion_5_cot_square_closed_form(report):
    start = time.perf_counter()
    bad = []
    with mpmath.workdps(50):
        for m in range(3, 51):
            want = Fraction(-(m - 1) * (m - 2), 6 * m)
            fl = -sum(mpmath.cot(mpmath.pi * l / m) ** 2 for l in range(1, m)) / (2 * m)
            if abs(fl - mpmath.mpf(want.numerator) / want.denominator) > mpmath.mpf(10) ** -30:
                bad.append(("float", m))
            if eta_trivial(make_lens(m, [1, 1])) != want:
                bad.append(("exact", m))
    report("5 eta_trivial(L(m;1,1)) = -(m-1)(m-2)/6m", not bad, time.perf_counter() - start, 60.0, f"bad={bad}")


def test_criterion_6_unit_ratio(report):
    start = time.perf_counter()
    rng = random.Random(6)
    bad = 0
    n_samples = 500
    for _ in range(n_samples):
        m = rng.randint(3, 40)
        L = make_lens(m, [rng.choice(units_of(m)) for _ in range(rng.randint(1, 4))])
        q, s = rng.randint(1, m - 1), rng.randint(0, m - 1)
        rho_an = refined_analytic_torsion(L, q)
        rho_eps = turaev_cohomological(L, q, s)
        if rho_an.magnitude != rho_eps.magnitude or not (rho_an / rho_eps).magnitude.is_one():
            bad += 1
        ratio(L, q, s)  # raises if the magnitudes do not cancel
    report("6 |R| = 1", bad == 0, time.perf_counter() - start, 60.0, f"{n_samples} samples, bad={bad}")


def test_criterion_7_base_choice_independence(report):
    start = time.perf_counter()
    rng = random.Random(77)
    bad = 0
    n_samples = 60
    for _ in range(n_samples):
        C = random_acyclic_complex(rng, rng.choice([1, 3, 4, 5, 6, 8]), max_length=5, max_dim=4)
        a = torsion_of_acyclic(C)
        b = torsion_of_acyclic(C, mixed_base_choice(C, rng))
        if not (a == b or a == -b):
            bad += 1
    report("7 base-choice independence", bad == 0, time.perf_counter() - start, 60.0,
           f"{n_samples} complexes, bad={bad}")


def test_criterion_8_declared_out_of_reach(report):
    # dim = 1 mod 4 theta needs the L-class term: refused rather than approximated
    start = time.perf_counter()
    with pytest.raises(UnsupportedDimensionError):
        theta_constant(make_lens(3, [1, 1, 1]), 1)
    report("8 non-reproducible results declared (covered by 3, 6, 7)", True, time.perf_counter() - start, 1.0)
