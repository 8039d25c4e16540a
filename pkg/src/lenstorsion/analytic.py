"""Ray-Singer and refined analytic torsion of lens spaces with U(1) characters."""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicNumber, as_rational
from .eta import EtaRationalityError, ambient_order, cot_products, eta_q, eta_trivial
from .lens import LensSpace, check_character
from .values import RationalAngle, SinProduct, TorsionValue

__all__ = [
    "ray_singer_magnitude",
    "ray_singer",
    "refined_analytic_torsion",
    "phase_refined",
    "closed_form_refined_phase",
]


def ray_singer_magnitude(L: LensSpace, q: int) -> SinProduct:
    """prod_k |exp(2 pi i q l_k / m) - 1| = prod_k 2 sin(pi <q l_k>/m)."""
    check_character(L, q)
    fracs = [Fraction((q * lk) % L.m, L.m) for lk in L.l]
    return SinProduct.from_fractions(L.n, fracs)


def ray_singer(L: LensSpace, q: int) -> TorsionValue:
    return TorsionValue(ray_singer_magnitude(L, q), RationalAngle(0))


def refined_analytic_torsion(L: LensSpace, q: int) -> TorsionValue:
    """rho_an = rho_RS * exp(-i pi eta_q) * exp(i pi eta_trivial); rank alpha_q = 1."""
    phase = RationalAngle(eta_trivial(L) - eta_q(L, q))
    return TorsionValue(ray_singer_magnitude(L, q), phase)


def phase_refined(L: LensSpace, q: int) -> RationalAngle:
    """-pi * (eta_q - rank * eta_trivial), defined modulo pi."""
    return RationalAngle(-(eta_q(L, q) - eta_trivial(L)), 1)


def closed_form_refined_phase(L: LensSpace, q: int) -> Fraction:
    """Phase of rho_an read off the two exponentials of the closed product formula.

    The exponents i^{-(n+1)} pi/(2m) sum_l zeta^{lq} P_l and
    i^{-(n-1)} pi/(2m) sum_l P_l (P_l the cotangent products) are summed in the
    cyclotomic field and divided by i*pi; the result must be rational.  This
    path shares no code with the eta functions beyond the cotangent products.
    """
    check_character(L, q)
    order = ambient_order(L)
    step = order // L.m
    quarter = order // 4
    zero = CyclotomicNumber.from_rational(0, order)
    twisted, plain = zero, zero
    for l, prod in enumerate(cot_products(L), start=1):
        twisted = twisted + prod.times_root(step * l * q)
        plain = plain + prod
    exponent = (
        twisted.times_root(-(L.n + 1) * quarter) + plain.times_root(-(L.n - 1) * quarter)
    ) * Fraction(1, 2 * L.m)
    value = as_rational(exponent.times_root(-quarter))
    if value is None:
        raise EtaRationalityError(f"exponent of rho_an for {L}, q={q} is not i*pi*rational")
    return value
