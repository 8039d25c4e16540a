"""Reproduction checks run by ``lenstorsion verify``.

Each check is exact on the algebraic side; floating oracles are independent
mpmath evaluations of the trigonometric sums.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from .chain import (
    lens_cw_complex,
    lens_torsion_closed_form,
    mixed_base_choice,
    random_acyclic_complex,
    torsion_of_acyclic,
)
from .comparison import ratio, ratio_table, theta_constant
from .cyclotomic import euler_phi
from .analytic import refined_analytic_torsion
from .chain import turaev_cohomological
from .eta import eta_q, eta_trivial
from .lens import make_lens

__all__ = ["CheckResult", "CHECKS", "run_checks", "eta_float", "THETA_L511", "RATIO_L3111"]

# theta / pi mod 1 for L(5;1,1)
THETA_L511 = {1: Fraction(-3, 10), 4: Fraction(-3, 10), 2: Fraction(-7, 10), 3: Fraction(-7, 10)}
# R phase / pi mod 1 for L(3;1,1,1), keyed by (q, s)
RATIO_L3111 = {
    (1, 0): Fraction(5, 9),
    (1, 1): Fraction(8, 9),
    (1, 2): Fraction(2, 9),
    (2, 0): Fraction(-5, 9),
    (2, 1): Fraction(-8, 9),
    (2, 2): Fraction(-2, 9),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds < self.limit


def eta_float(m: int, p, q: int, dps: int = 50) -> mpmath.mpc:
    """i^{-n}/(2m) * sum_l exp(2 pi i l q/m) prod cot(pi l p_j/m) in floating point."""
    n = len(p)
    with mpmath.workdps(dps):
        total = mpmath.mpc(0)
        for l in range(1, m):
            term = mpmath.expjpi(mpmath.mpf(2 * l * q) / m)
            for pj in p:
                term *= mpmath.cot(mpmath.pi * l * pj / m)
            total += term
        return total * mpmath.power(1j, -n) / (2 * m)


def check_theta() -> tuple[bool, str]:
    L = make_lens(5, [1, 1])
    bad = [q for q, r in THETA_L511.items() if not theta_constant(L, q).congruent(r)]
    got = ", ".join(f"q={q}: {theta_constant(L, q).signed()}*pi" for q in sorted(THETA_L511))
    return not bad, got


def check_ratio_table() -> tuple[bool, str]:
    L = make_lens(3, [1, 1, 1])
    table = ratio_table(L)
    bad = []
    for row in table:
        for rep in row:
            if not rep.R_phase.congruent(RATIO_L3111[(rep.q, rep.s)]):
                bad.append((rep.q, rep.s))
    detail = "; ".join(
        f"q={row[0].q}: " + ", ".join(rep.R_phase.exp_str() for rep in row) for row in table
    )
    return not bad, detail if not bad else f"mismatch at {bad}: {detail}"


def _random_lens_configs(rng: random.Random, count: int):
    configs = []
    for m in range(3, 26):
        units = [a for a in range(1, m) if Fraction(a, m).denominator == m]
        for _ in range(count):
            n = rng.randint(1, 3)
            p = [rng.choice(units) for _ in range(n)]
            q = rng.randint(1, m - 1)
            configs.append((m, p, q))
    return configs


def check_oracle_equivalence(seed: int = 2024) -> tuple[bool, str]:
    rng = random.Random(seed)
    configs = _random_lens_configs(rng, 5)
    bad = []
    for m, p, q in configs:
        L = make_lens(m, p)
        t = torsion_of_acyclic(lens_cw_complex(L, q))
        ref = lens_torsion_closed_form(L, q)
        if t != ref and t != -ref:
            bad.append((m, p, q))
    return not bad, f"{len(configs)} configurations, {len(bad)} mismatches"


def check_eta(max_m: int = 50, max_n: int = 4) -> tuple[bool, str]:
    worst = mpmath.mpf(0)
    count = 0
    for m in range(3, max_m + 1):
        for n in range(1, max_n + 1):
            L = make_lens(m, [1] * n)
            et = eta_trivial(L)
            if n % 2 and et != 0:
                return False, f"eta_trivial({L}) = {et} != 0"
            for q in range(1, m):
                exact = eta_q(L, q)
                with mpmath.workdps(50):
                    err = abs(eta_float(m, L.p, q) - mpmath.mpf(exact.numerator) / exact.denominator)
                worst = max(worst, err)
                count += 1
    ok = worst < mpmath.mpf(10) ** -30
    return ok, f"{count} eta values rational, max float deviation {mpmath.nstr(worst, 3)}"


def check_closed_form(max_m: int = 50) -> tuple[bool, str]:
    bad = []
    for m in range(3, max_m + 1):
        want = Fraction(-(m - 1) * (m - 2), 6 * m)
        got = eta_trivial(make_lens(m, [1, 1]))
        with mpmath.workdps(40):
            fl = -sum(mpmath.cot(mpmath.pi * l / m) ** 2 for l in range(1, m)) / (2 * m)
            float_ok = abs(fl - mpmath.mpf(want.numerator) / want.denominator) < mpmath.mpf(10) ** -30
        if got != want or not float_ok:
            bad.append(m)
    return not bad, f"m=3..{max_m}, mismatches: {bad or 'none'}"


def check_unit_ratio(samples: int = 500, seed: int = 7) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        m = rng.randint(3, 30)
        units = [a for a in range(1, m) if Fraction(a, m).denominator == m]
        L = make_lens(m, [rng.choice(units) for _ in range(rng.randint(1, 4))])
        q, s = rng.randint(1, m - 1), rng.randint(0, m - 1)
        quotient = refined_analytic_torsion(L, q) / turaev_cohomological(L, q, s)
        if not quotient.magnitude.is_one():
            bad += 1
        ratio(L, q, s)
    return bad == 0, f"{samples} samples, {bad} with |R| != 1"


def check_base_choice(samples: int = 50, seed: int = 11) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        order = rng.choice([1, 3, 4, 5, 8])
        C = random_acyclic_complex(rng, order, max_length=5, max_dim=4)
        a = torsion_of_acyclic(C)
        b = torsion_of_acyclic(C, mixed_base_choice(C, rng))
        if a != b and a != -b:
            bad += 1
    return bad == 0, f"{samples} random complexes (phi(order) <= {euler_phi(8)}), {bad} disagreements"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]], float]] = [
    ("1 theta constants of L(5;1,1)", check_theta, 1.0),
    ("2 ratio table of L(3;1,1,1)", check_ratio_table, 1.0),
    ("3 chain torsion vs closed form", check_oracle_equivalence, 30.0),
    ("4 eta rationality and float agreement", check_eta, 60.0),
    ("5 eta_trivial(L(m;1,1)) closed form", check_closed_form, 60.0),
    ("6 unit-modulus ratio", check_unit_ratio, 60.0),
    ("7 base-choice independence", check_base_choice, 60.0),
]


def run_checks(echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    results = []
    for name, fn, limit in CHECKS:
        start = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed run
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        res = CheckResult(name, passed, detail, time.perf_counter() - start, limit)
        results.append(res)
        if echo is not None:
            status = "PASS" if res.ok else "FAIL"
            echo(f"{status}  {name}  [{res.seconds:.2f}s < {limit:g}s]  {detail}")
    return results
