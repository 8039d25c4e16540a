"""Eta invariants of the odd signature operator on lens spaces.

For the character alpha_q,

    eta_q = i^{-n}/(2m) * sum_{l=1}^{m-1} exp(2*pi*i*l*q/m) * prod_j cot(pi*l*p_j/m),

and the trivial-bundle invariant is the same sum with q = 0.  Every sum is
evaluated exactly in Q(zeta_N), N = lcm(2m, 4), and then checked to be
rational.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cyclotomic import CyclotomicNumber, as_rational, cot_pi_fraction
from .lens import LensSpace, check_character

__all__ = [
    "EtaRationalityError",
    "ambient_order",
    "cot_products",
    "eta_sum",
    "eta_q",
    "eta_trivial",
]


class EtaRationalityError(ArithmeticError):
    """The exact eta sum failed to reduce to a rational number."""


def ambient_order(L: LensSpace) -> int:
    n = 2 * L.m
    return n * 4 // gcd(n, 4)


@lru_cache(maxsize=256)
def cot_products(L: LensSpace) -> tuple[CyclotomicNumber, ...]:
    """prod_j cot(pi*l*p_j/m) for l = 1..m-1, at the ambient order."""
    order = ambient_order(L)
    cots = {}
    out = []
    for l in range(1, L.m):
        prod = CyclotomicNumber.from_rational(1, order)
        for pj in L.p:
            a = (l * pj) % L.m
            if a not in cots:
                cots[a] = cot_pi_fraction(a, L.m).promote(order)
            prod = prod * cots[a]
        out.append(prod)
    return tuple(out)


def eta_sum(L: LensSpace, q: int) -> CyclotomicNumber:
    """The exact value of i^{-n}/(2m) * sum_l zeta_m^{lq} prod_j cot(pi l p_j/m).

    q = 0 gives the trivial-bundle sum.  The result is returned unreduced to Q
    so callers can inspect it.
    """
    order = ambient_order(L)
    step = order // L.m
    prods = cot_products(L)
    common = 1
    for prod in prods:
        common = common * prod.denominator // gcd(common, prod.denominator)
    # accumulate zeta powers unreduced, multiplied by i^{-n} = zeta^{-n*order/4}
    acc = [0] * order
    twist = -L.n * (order // 4)
    for l, prod in enumerate(prods, start=1):
        scale = common // prod.denominator
        shift = step * l * q + twist
        for j, c in enumerate(prod.numerators):
            if c:
                acc[(j + shift) % order] += c * scale
    return CyclotomicNumber._raw(order, acc, common * 2 * L.m)


def _rational(x: CyclotomicNumber, what: str) -> Fraction:
    value = as_rational(x)
    if value is None:
        raise EtaRationalityError(f"{what} did not reduce to a rational: {x!r}")
    return value


def eta_q(L: LensSpace, q: int) -> Fraction:
    """Eta invariant of the odd signature operator twisted by alpha_q."""
    check_character(L, q)
    return _rational(eta_sum(L, q), f"eta_{q} of {L}")


def eta_trivial(L: LensSpace) -> Fraction:
    """Eta invariant for the trivial line bundle; zero whenever n is odd."""
    return _rational(eta_sum(L, 0), f"eta_trivial of {L}")
