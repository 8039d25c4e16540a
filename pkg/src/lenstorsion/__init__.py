"""Exact torsion invariants and eta invariants of lens spaces."""

from .analytic import phase_refined, ray_singer, refined_analytic_torsion
from .chain import (
    ChainComplexExact,
    lens_cw_complex,
    torsion_of_acyclic,
    turaev_cohomological,
    turaev_homological,
)
from .comparison import equality_scan, ratio, ratio_table, theta_constant
from .cyclotomic import CyclotomicNumber, cot_pi_fraction, root_of_unity
from .eta import eta_q, eta_trivial
from .lens import LensSpace, dimension_class, dual_character, make_lens
from .values import RationalAngle, SinProduct, TorsionValue

__all__ = [
    "ChainComplexExact",
    "CyclotomicNumber",
    "LensSpace",
    "RationalAngle",
    "SinProduct",
    "TorsionValue",
    "cot_pi_fraction",
    "dimension_class",
    "dual_character",
    "equality_scan",
    "eta_q",
    "eta_trivial",
    "lens_cw_complex",
    "make_lens",
    "phase_refined",
    "ratio",
    "ratio_table",
    "ray_singer",
    "refined_analytic_torsion",
    "root_of_unity",
    "theta_constant",
    "torsion_of_acyclic",
    "turaev_cohomological",
    "turaev_homological",
]
