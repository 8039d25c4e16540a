"""Exact value types for torsions: sine-product magnitudes and rational angles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import mpmath

__all__ = ["RationalAngle", "SinProduct", "TorsionValue"]


@dataclass(frozen=True)
class RationalAngle:
    """The angle r*pi, normalized into [0, modulus).

    ``modulus`` is 2 for an honest phase (mod 2*pi) and 1 for a phase that is
    only defined up to sign (mod pi).
    """

    r: Fraction
    modulus: int = 2

    def __post_init__(self):
        if self.modulus not in (1, 2):
            raise ValueError(f"modulus must be 1 or 2, got {self.modulus}")
        object.__setattr__(self, "r", Fraction(self.r) % self.modulus)

    @property
    def sign_ambiguous(self) -> bool:
        return self.modulus == 1

    def mod_pi(self) -> RationalAngle:
        return RationalAngle(self.r, 1)

    def _join(self, other: RationalAngle) -> int:
        return min(self.modulus, other.modulus)

    def __add__(self, other: RationalAngle) -> RationalAngle:
        return RationalAngle(self.r + other.r, self._join(other))

    def __sub__(self, other: RationalAngle) -> RationalAngle:
        return RationalAngle(self.r - other.r, self._join(other))

    def __neg__(self) -> RationalAngle:
        return RationalAngle(-self.r, self.modulus)

    def scale(self, k: int) -> RationalAngle:
        return RationalAngle(self.r * k, self.modulus)

    def congruent(self, r, modulus: int | None = None) -> bool:
        """Whether this angle equals r*pi modulo the coarser of the two moduli."""
        mod = self.modulus if modulus is None else min(modulus, self.modulus)
        return (self.r - Fraction(r)) % mod == 0

    def signed(self) -> Fraction:
        """Representative in (-modulus/2, modulus/2]."""
        half = Fraction(self.modulus, 2)
        return self.r - self.modulus if self.r > half else self.r

    def radians(self, digits: int = 50) -> mpmath.mpf:
        with mpmath.workdps(digits + 5):
            return mpmath.pi * self.r.numerator / self.r.denominator

    def exact_str(self) -> str:
        """``a/b*pi`` with the representative in [0, modulus)."""
        if self.r == 0:
            return "0"
        a, b = self.r.numerator, self.r.denominator
        head = "pi" if a == 1 else f"{a}*pi"
        return head if b == 1 else f"{head}/{b}"

    def exp_str(self) -> str:
        """Serialized as ``exp(a/b * i*pi)``, prefixed by ``±`` when sign-ambiguous."""
        sign = "±" if self.sign_ambiguous else ""
        return f"{sign}exp({self.r.numerator}/{self.r.denominator} * i*pi)"


def _fold(x: Fraction) -> Fraction:
    # sin(pi x) = sin(pi (1 - x)) on (0, 1)
    return min(x, 1 - x)


@dataclass(frozen=True)
class SinProduct:
    """2^scale * prod sin(pi*a/b)^e as an exact symbolic positive real.

    ``factors`` holds (a/b, e) pairs with a/b in (0, 1/2] and e != 0, sorted.
    """

    scale: int = 0
    factors: tuple[tuple[Fraction, int], ...] = ()

    @classmethod
    def from_fractions(cls, scale: int, fractions, exponent: int = 1) -> SinProduct:
        counts: Counter = Counter()
        for f in fractions:
            f = Fraction(f)
            if not 0 < f < 1:
                raise ValueError(f"sine factor {f} is not strictly between 0 and 1")
            counts[_fold(f)] += exponent
        return cls._make(scale, counts)

    @classmethod
    def _make(cls, scale: int, counts: Counter) -> SinProduct:
        items = tuple(sorted((f, e) for f, e in counts.items() if e))
        return cls(scale, items)

    def __mul__(self, other: SinProduct) -> SinProduct:
        counts = Counter(dict(self.factors))
        counts.update(dict(other.factors))
        return self._make(self.scale + other.scale, counts)

    def inverse(self) -> SinProduct:
        return SinProduct(-self.scale, tuple((f, -e) for f, e in self.factors))

    def __truediv__(self, other: SinProduct) -> SinProduct:
        return self * other.inverse()

    def is_one(self) -> bool:
        return self.scale == 0 and not self.factors

    def evaluate(self, digits: int = 50) -> mpmath.mpf:
        with mpmath.workdps(digits + 10):
            total = mpmath.mpf(2) ** self.scale
            for f, e in self.factors:
                total *= mpmath.sinpi(mpmath.mpf(f.numerator) / f.denominator) ** e
        return total

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = [] if self.scale == 0 else [f"2^{self.scale}"]
        for f, e in self.factors:
            base = f"sin({f.numerator}*pi/{f.denominator})" if f.numerator != 1 else f"sin(pi/{f.denominator})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return " * ".join(parts)


@dataclass(frozen=True)
class TorsionValue:
    """magnitude * exp(i * phase), possibly only defined up to sign."""

    magnitude: SinProduct
    phase: RationalAngle

    @property
    def sign_ambiguous(self) -> bool:
        return self.phase.sign_ambiguous

    def __mul__(self, other: TorsionValue) -> TorsionValue:
        return TorsionValue(self.magnitude * other.magnitude, self.phase + other.phase)

    def inverse(self) -> TorsionValue:
        return TorsionValue(self.magnitude.inverse(), -self.phase)

    def __truediv__(self, other: TorsionValue) -> TorsionValue:
        return self * other.inverse()

    def forget_sign(self) -> TorsionValue:
        return TorsionValue(self.magnitude, self.phase.mod_pi())

    def to_complex(self, digits: int = 50) -> mpmath.mpc:
        """A representative complex value (the [0, modulus) phase branch)."""
        with mpmath.workdps(digits + 10):
            return self.magnitude.evaluate(digits) * mpmath.expjpi(
                mpmath.mpf(self.phase.r.numerator) / self.phase.r.denominator
            )

    def __str__(self) -> str:
        return f"{self.magnitude} * {self.phase.exp_str()}"
