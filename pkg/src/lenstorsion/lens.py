"""Lens spaces L(m; p_1, ..., p_n), their U(1) characters and Euler structures.

Characters are plain integers q in 1..m-1 (alpha_q sends the generator to
exp(2*pi*i*q/m)); Euler structures are the shift s in 0..m-1 relative to the
preferred structure coming from the standard equivariant cell decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "LensSpace",
    "LensError",
    "make_lens",
    "check_character",
    "check_euler_structure",
    "dual_character",
    "dimension_class",
]


class LensError(ValueError):
    """Invalid lens-space data, character or Euler structure."""


@dataclass(frozen=True)
class LensSpace:
    m: int
    p: tuple[int, ...]
    l: tuple[int, ...]

    def __post_init__(self):
        if self.m < 3:
            raise LensError(f"m={self.m} must be at least 3")
        if not self.p:
            raise LensError("at least one rotation parameter p_k is required")
        if len(self.l) != len(self.p):
            raise LensError("need one inverse l_k per p_k")
        for k, (pk, lk) in enumerate(zip(self.p, self.l), start=1):
            if (pk * lk) % self.m != 1:
                raise LensError(f"l_{k}={lk} is not an inverse of p_{k}={pk} mod {self.m}")

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def dim(self) -> int:
        return 2 * self.n - 1

    def __str__(self) -> str:
        return f"L({self.m}; {','.join(map(str, self.p))})"


def make_lens(m: int, p) -> LensSpace:
    """Validate (m, p), reduce p mod m and cache the inverses l_k.

    >>> make_lens(7, [2, 3]).l
    (4, 5)
    """
    m = int(m)
    if m < 3:
        raise LensError(f"m={m} must be at least 3")
    p = [int(x) for x in p]
    if not p:
        raise LensError("at least one rotation parameter p_k is required")
    reduced = []
    for k, pk in enumerate(p, start=1):
        if gcd(pk, m) != 1:
            raise LensError(f"p_{k}={pk} not coprime to m={m}")
        reduced.append(pk % m)
    inverses = tuple(pow(pk, -1, m) for pk in reduced)
    return LensSpace(m, tuple(reduced), inverses)


def check_character(L: LensSpace, q: int) -> int:
    if not 1 <= q <= L.m - 1:
        raise LensError(f"character q={q} must lie in 1..{L.m - 1} (nontrivial)")
    return q


def check_euler_structure(L: LensSpace, s: int) -> int:
    if not 0 <= s <= L.m - 1:
        raise LensError(f"Euler structure shift s={s} must lie in 0..{L.m - 1}")
    return s


def dual_character(L: LensSpace, q: int) -> int:
    """The dual of a unitary character is its complex conjugate, alpha_{m-q}."""
    check_character(L, q)
    return L.m - q


def dimension_class(L: LensSpace) -> str:
    """``"1 mod 4"`` or ``"3 mod 4"`` according to dim L = 2n - 1."""
    return f"{L.dim % 4} mod 4"
