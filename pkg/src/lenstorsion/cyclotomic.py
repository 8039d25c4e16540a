"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as a polynomial in zeta_N of degree < phi(N), reduced
modulo the cyclotomic polynomial Phi_N.  Coefficients are kept as integer
numerators over one positive common denominator, which keeps products cheap
(plain integer convolution) while still giving a unique normal form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

import mpmath

__all__ = [
    "CyclotomicNumber",
    "PoleError",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "promote",
    "galois_apply",
    "cot_pi_fraction",
    "as_rational",
    "to_complex",
    "I",
]

DEFAULT_DIGITS = 50


class PoleError(ZeroDivisionError):
    """Raised when a cotangent is requested at a multiple of pi."""


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed by exact division of x^n - 1 by Phi_d for every proper divisor d.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    if any(num[:dd]):
        raise ArithmeticError("division is not exact")
    return quot


@lru_cache(maxsize=None)
def _sparse_tail(n: int) -> tuple[tuple[int, int], ...]:
    # nonzero lower coefficients of Phi_n: x^phi == -sum(c_j x^j)
    phi = cyclotomic_polynomial(n)
    return tuple((j, c) for j, c in enumerate(phi[:-1]) if c)


def _reduce(coeffs: list[int], n: int) -> list[int]:
    """Reduce an integer polynomial in zeta_n to its canonical residue."""
    deg = euler_phi(n)
    if len(coeffs) > n:
        folded = [0] * n
        for j, c in enumerate(coeffs):
            if c:
                folded[j % n] += c
        coeffs = folded
    else:
        coeffs = list(coeffs)
    tail = _sparse_tail(n)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            coeffs[k] = 0
            base = k - deg
            for j, pj in tail:
                coeffs[base + j] -= c * pj
    if len(coeffs) < deg:
        coeffs.extend([0] * (deg - len(coeffs)))
    return coeffs[:deg]


class CyclotomicNumber:
    """An element of Q(zeta_N) in canonical reduced form.

    ``order`` is the N of the field the element is written in.  Elements of
    different orders compare and combine through the field of lcm order.
    """

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, coeffs=(), den: int = 1):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        fracs = [Fraction(c) for c in coeffs]
        common = 1
        for f in fracs:
            common = _lcm(common, f.denominator)
        ints = [int(f * common) for f in fracs]
        self._set(order, _reduce(ints, order), common * den)

    @classmethod
    def _raw(cls, order: int, num: list[int], den: int = 1) -> CyclotomicNumber:
        obj = cls.__new__(cls)
        obj._set(order, _reduce(num, order), den)
        return obj

    def _set(self, order: int, num: list[int], den: int) -> None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if not any(num):
            den = 1
        elif g > 1:
            num = [c // g for c in num]
            den //= g
        self.order = order
        self._num = tuple(num)
        self._den = den

    @classmethod
    def from_rational(cls, value, order: int = 1) -> CyclotomicNumber:
        value = Fraction(value)
        num = [0] * euler_phi(order)
        num[0] = value.numerator
        return cls._raw(order, num, value.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    # -- coercion ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Rational)):
            return CyclotomicNumber.from_rational(other)
        return None

    def promote(self, order: int) -> CyclotomicNumber:
        if order % self.order:
            raise ValueError(f"order {self.order} does not divide {order}")
        if order == self.order:
            return self
        step = order // self.order
        num = [0] * ((len(self._num) - 1) * step + 1)
        for j, c in enumerate(self._num):
            num[j * step] = c
        return CyclotomicNumber._raw(order, num, self._den)

    def _common(self, other: CyclotomicNumber) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if other.order == self.order:
            return self, other
        n = _lcm(self.order, other.order)
        return self.promote(n), other.promote(n)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        da, db = a._den, b._den
        num = [x * db + y * da for x, y in zip(a._num, b._num)]
        return CyclotomicNumber._raw(a.order, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        obj = CyclotomicNumber.__new__(CyclotomicNumber)
        obj.order = self.order
        obj._num = tuple(-c for c in self._num)
        obj._den = self._den
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        an = [(j, c) for j, c in enumerate(a._num) if c]
        bn = [(j, c) for j, c in enumerate(b._num) if c]
        out = [0] * (2 * len(a._num))
        for i, x in an:
            for j, y in bn:
                out[i + j] += x * y
        return CyclotomicNumber._raw(a.order, out, a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.from_rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def times_root(self, k: int) -> CyclotomicNumber:
        """Multiply by zeta_N^k, N being this element's order."""
        n = self.order
        num = [0] * n
        for j, c in enumerate(self._num):
            if c:
                num[(j + k) % n] += c
        return CyclotomicNumber._raw(n, num, self._den)

    def inverse(self) -> CyclotomicNumber:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        a = [Fraction(c) for c in self._num]
        f = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        # invariant: s * self.num == r (mod Phi_N)
        r0, s0 = f, [Fraction(0)]
        r1, s1 = _trim(a), [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant since Phi_N is irreducible
        c = r1[0]
        coeffs = [x / c * self._den for x in s1]
        return CyclotomicNumber(self.order, coeffs)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        # normalized trace: independent of the order the element is written in
        return hash(self.normalized_trace())

    def normalized_trace(self) -> Fraction:
        n = self.order
        total = Fraction(0)
        for j, c in enumerate(self._num):
            if c:
                d = n // gcd(j, n)
                total += Fraction(c * _mobius(d), euler_phi(d))
        return total / self._den

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z^{j}")
        body = " + ".join(terms) if terms else "0"
        return f"CyclotomicNumber({self.order}: {body})"

    def to_polynomial_text(self) -> str:
        """Render as ``a0 + a1*z^1 + ...`` (the chain-file entry syntax)."""
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if j == 0:
                term = str(mag)
            elif mag == 1:
                term = f"z^{j}"
            else:
                term = f"{mag}*z^{j}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts) if parts else "0"


def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        if c:
            q[k - db] = c
            for j, bj in enumerate(b):
                a[k - db + j] -= c * bj
    return _trim(q), _trim(a[:db] if db else [Fraction(0)])


# -- module-level operations ----------------------------------------------


def root_of_unity(n: int, k: int) -> CyclotomicNumber:
    """zeta_n^k written at order n."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    num = [0] * n
    num[k % n] = 1
    return CyclotomicNumber._raw(n, num)


I = root_of_unity(4, 1)


def promote(x: CyclotomicNumber, order: int) -> CyclotomicNumber:
    return x.promote(order)


def galois_apply(x: CyclotomicNumber, k: int) -> CyclotomicNumber:
    """Apply the automorphism zeta_N -> zeta_N^k; k = -1 is complex conjugation."""
    n = x.order
    if gcd(k, n) != 1:
        raise ValueError(f"gcd({k}, {n}) != 1: not an automorphism")
    num = [0] * n
    for j, c in enumerate(x.numerators):
        if c:
            num[(j * k) % n] += c
    return CyclotomicNumber._raw(n, num, x.denominator)


def cot_pi_fraction(a: int, b: int) -> CyclotomicNumber:
    """cot(pi*a/b) as an element of Q(zeta_lcm(2b, 4)).

    With w = zeta_b^a of exact order d > 1, cot = i*(w + 1)/(w - 1) and
    1/(w - 1) = (1/d) * sum_{j<d} j*w^j, so no field inversion is needed.
    """
    if b < 1:
        raise ValueError(f"denominator must be positive, got {b}")
    target = _lcm(2 * b, 4)
    a %= b
    if a == 0:
        raise PoleError(f"cot(pi*{a}/{b}) has a pole")
    g = gcd(a, b)
    a, b = a // g, b // g
    d = b  # exact order of w = zeta_b^a
    order = _lcm(b, 4)
    step = order // b
    shift = order // 4  # i = zeta_order^shift
    num = [0] * order
    # i * (d + 2*sum j w^j) / d
    num[shift] += d
    for j in range(1, d):
        num[(shift + j * a * step) % order] += 2 * j
    return CyclotomicNumber._raw(order, num, d).promote(target)


def as_rational(x: CyclotomicNumber) -> Fraction | None:
    """The rational value of x, or None when x is not in Q."""
    if any(x.numerators[1:]):
        return None
    return Fraction(x.numerators[0], x.denominator)


def to_complex(x: CyclotomicNumber, digits: int = DEFAULT_DIGITS) -> mpmath.mpc:
    """Evaluate x at zeta_N = exp(2*pi*i/N) with at least ``digits`` correct digits."""
    if digits < 1:
        raise ValueError("digits must be positive")
    biggest = max((abs(c) for c in x.numerators), default=0)
    guard = len(str(biggest)) + len(str(len(x.numerators))) + 10
    with mpmath.workdps(digits + guard):
        n = x.order
        total = mpmath.mpc(0)
        for j, c in enumerate(x.numerators):
            if c:
                total += c * mpmath.expjpi(mpmath.mpf(2 * j) / n)
        total /= x.denominator
    return total
