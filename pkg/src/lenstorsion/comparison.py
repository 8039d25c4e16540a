"""Comparing refined analytic torsion with cohomological Turaev torsion.

The ratio R = rho_an / rho_{eps} is formed literally from the two exact torsion
values; its magnitude must cancel to 1, leaving a phase modulo pi.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .analytic import ray_singer_magnitude, refined_analytic_torsion
from .chain import turaev_cohomological
from .eta import eta_q, eta_trivial
from .lens import LensSpace, check_character, check_euler_structure, dimension_class
from .values import RationalAngle, SinProduct, TorsionValue

__all__ = [
    "MagnitudeMismatchError",
    "UnsupportedDimensionError",
    "ComparisonReport",
    "ratio",
    "theta_constant",
    "comparison_report",
    "ratio_table",
    "equality_scan",
    "render_table",
]


class MagnitudeMismatchError(ArithmeticError):
    """|rho_an| and |rho_eps| failed to cancel exactly."""


class UnsupportedDimensionError(ValueError):
    """theta is only available when dim L = 3 mod 4."""


def _ratio_value(L: LensSpace, q: int, s: int) -> TorsionValue:
    check_euler_structure(L, s)
    value = refined_analytic_torsion(L, q) / turaev_cohomological(L, q, s)
    if not value.magnitude.is_one():
        raise MagnitudeMismatchError(f"|R| = {value.magnitude} != 1 for {L}, q={q}, s={s}")
    return value


def ratio(L: LensSpace, q: int, s: int) -> RationalAngle:
    """Phase of rho_an / rho_{eps,o} modulo pi (the magnitude is exactly 1)."""
    return _ratio_value(L, q, s).phase


def theta_constant(L: LensSpace, q: int) -> RationalAngle:
    """theta = -pi * (eta_q - eta_trivial) mod pi, for dim L = 3 mod 4 only."""
    check_character(L, q)
    if dimension_class(L) != "3 mod 4":
        raise UnsupportedDimensionError(
            f"theta for {L} (dim {L.dim} = 1 mod 4) needs the L-class term; not supported"
        )
    return RationalAngle(-(eta_q(L, q) - eta_trivial(L)), 1)


@dataclass(frozen=True)
class ComparisonReport:
    lens: LensSpace
    q: int
    s: int
    R_phase: RationalAngle
    theta: RationalAngle | None
    R_magnitude: SinProduct
    ray_singer: SinProduct
    eta_q: Fraction
    eta_trivial: Fraction
    refined: TorsionValue
    turaev: TorsionValue

    def as_dict(self, digits: int = 15) -> dict:
        """JSON-ready fields; every number is a string to keep it exact."""
        out = {
            "lens": str(self.lens),
            "q": str(self.q),
            "s": str(self.s),
            "R": self.R_phase.exp_str(),
            "R_phase_over_pi": str(self.R_phase.r),
            "R_phase_radians": mpmath.nstr(self.R_phase.radians(), digits),
            "R_magnitude": str(self.R_magnitude),
            "theta_over_pi": None if self.theta is None else str(self.theta.r),
            "eta_q": str(self.eta_q),
            "eta_trivial": str(self.eta_trivial),
            "ray_singer": str(self.ray_singer),
            "ray_singer_value": mpmath.nstr(self.ray_singer.evaluate(), digits),
            "refined_analytic_torsion": str(self.refined),
            "turaev_cohomological": str(self.turaev),
        }
        return out


def comparison_report(L: LensSpace, q: int, s: int) -> ComparisonReport:
    value = _ratio_value(L, q, s)
    theta = theta_constant(L, q) if dimension_class(L) == "3 mod 4" else None
    return ComparisonReport(
        lens=L,
        q=q,
        s=s,
        R_phase=value.phase,
        theta=theta,
        R_magnitude=value.magnitude,
        ray_singer=ray_singer_magnitude(L, q),
        eta_q=eta_q(L, q),
        eta_trivial=eta_trivial(L),
        refined=refined_analytic_torsion(L, q),
        turaev=turaev_cohomological(L, q, s),
    )


def ratio_table(L: LensSpace) -> list[list[ComparisonReport]]:
    """Reports for every character q (rows) and Euler structure s (columns)."""
    return [[comparison_report(L, q, s) for s in range(L.m)] for q in range(1, L.m)]


def equality_scan(L: LensSpace) -> list[tuple[int, int]]:
    """All (q, s) for which rho_an = ±rho_{eps}, i.e. R = 0 mod pi."""
    return [
        (q, s)
        for q in range(1, L.m)
        for s in range(L.m)
        if ratio(L, q, s).r == 0
    ]


_CSV_FIELDS = [
    "lens",
    "q",
    "s",
    "R",
    "R_phase_over_pi",
    "R_phase_radians",
    "theta_over_pi",
    "eta_q",
    "eta_trivial",
    "ray_singer_value",
]


def render_table(table: list[list[ComparisonReport]], fmt: str = "text", digits: int = 15) -> str:
    if fmt == "json":
        lens = table[0][0].lens
        doc = {
            "lens": str(lens),
            "m": str(lens.m),
            "p": [str(x) for x in lens.p],
            "dimension_class": dimension_class(lens),
            "entries": [r.as_dict(digits) for row in table for r in row],
            "equal_pairs": [[str(q), str(s)] for q, s in equality_scan(lens)],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in table:
            for r in row:
                d = r.as_dict(digits)
                d["theta_over_pi"] = d["theta_over_pi"] or ""
                writer.writerow(d)
        return buf.getvalue()
    if fmt == "text":
        return _render_text(table)
    raise ValueError(f"unknown format {fmt!r}")


def _render_text(table: list[list[ComparisonReport]]) -> str:
    lens = table[0][0].lens
    header = [""] + [f"s={s}" for s in range(lens.m)]
    rows = [header]
    for row in table:
        rows.append([f"q={row[0].q}"] + [f"R={r.R_phase.exp_str()}" for r in row])
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    lines = [f"Ratio R = rho_an / rho_eps for {lens} (phases mod pi)"]
    for r in rows:
        lines.append(" | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    if dimension_class(lens) == "3 mod 4":
        lines.append("")
        lines.append("theta (mod pi):")
        for row in table:
            lines.append(f"  q={row[0].q}: {row[0].theta.exact_str()}")
    eq = equality_scan(lens)
    lines.append("")
    lines.append(
        "rho_an = ±rho_eps for (q, s): " + (", ".join(f"({q}, {s})" for q, s in eq) if eq else "none")
    )
    return "\n".join(lines) + "\n"
