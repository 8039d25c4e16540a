"""Torsion of acyclic chain complexes over cyclotomic fields, and Turaev torsion
of lens spaces.

A complex ``0 -> C_d -> ... -> C_0 -> 0`` is stored by its dimensions and the
matrices of the boundary maps ``bd_i : C_{i+1} -> C_i`` (``dims[i]`` rows,
``dims[i+1]`` columns) written in the fixed bases c_i.  Its torsion is

    prod_i [bd_i(b_{i+1}) b_i / c_i] ^ ((-1)^(i+1)),

where b_i are chains whose boundaries form a basis of im bd_{i-1}.  Without a
homology orientation the result is only meaningful up to sign.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclotomic import CyclotomicNumber, euler_phi, root_of_unity
from .lens import LensSpace, check_character, check_euler_structure
from .analytic import ray_singer_magnitude
from .values import RationalAngle, TorsionValue

__all__ = [
    "ChainComplexError",
    "NotAcyclicError",
    "DegenerateBaseError",
    "ChainComplexExact",
    "BaseChoice",
    "rank",
    "determinant",
    "default_base_choice",
    "mixed_base_choice",
    "torsion_of_acyclic",
    "lens_cw_complex",
    "lens_torsion_closed_form",
    "random_acyclic_complex",
    "turaev_homological",
    "turaev_cohomological",
]

Matrix = tuple[tuple[CyclotomicNumber, ...], ...]
Vector = tuple[CyclotomicNumber, ...]


class ChainComplexError(ValueError):
    pass


class NotAcyclicError(ChainComplexError):
    pass


class DegenerateBaseError(ChainComplexError):
    pass


def _zero(order: int) -> CyclotomicNumber:
    return CyclotomicNumber.from_rational(0, order)


def _one(order: int) -> CyclotomicNumber:
    return CyclotomicNumber.from_rational(1, order)


# -- exact linear algebra ---------------------------------------------------


def _eliminate(rows: list[list[CyclotomicNumber]]):
    """Row-reduce in place; return (pivot columns, determinant factor from swaps and pivots)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    det = CyclotomicNumber.from_rational(1)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if k is None:
            continue
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
            det = -det
        pivot = rows[r][c]
        det = det * pivot
        inv = pivot.inverse()
        for i in range(r + 1, nrows):
            entry = rows[i][c]
            if entry.is_zero():
                continue
            f = entry * inv
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots, det


def rank(matrix) -> int:
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    pivots, _ = _eliminate(rows)
    return len(pivots)


def determinant(matrix) -> CyclotomicNumber:
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return CyclotomicNumber.from_rational(1)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    pivots, det = _eliminate(rows)
    if len(pivots) < n:
        return CyclotomicNumber.from_rational(0)
    return det


def _apply(matrix: Matrix, vec: Vector, order: int) -> Vector:
    return tuple(
        sum((a * v for a, v in zip(row, vec)), _zero(order)) for row in matrix
    )


def _matmul(a: Matrix, b: Matrix, order: int) -> Matrix:
    cols = list(zip(*b)) if b else []
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), _zero(order)) for col in cols) for row in a
    )


# -- chain complexes --------------------------------------------------------


@dataclass(frozen=True)
class ChainComplexExact:
    """Finite chain complex with one fixed basis per degree.

    ``boundaries[i]`` is the matrix of bd_i : C_{i+1} -> C_i.
    """

    dims: tuple[int, ...]
    boundaries: tuple[Matrix, ...]
    order: int = 1

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if any(d < 0 for d in dims):
            raise ChainComplexError("negative dimension")
        if len(self.boundaries) != max(len(dims) - 1, 0):
            raise ChainComplexError(
                f"{len(dims)} degrees need {max(len(dims) - 1, 0)} boundary maps, got {len(self.boundaries)}"
            )
        order = self.order
        for mat in self.boundaries:
            for row in mat:
                for x in row:
                    order = order * x.order // gcd(order, x.order)
        bds = []
        for i, mat in enumerate(self.boundaries):
            if len(mat) != dims[i] or any(len(row) != dims[i + 1] for row in mat):
                raise ChainComplexError(
                    f"boundary {i} must be {dims[i]}x{dims[i + 1]}"
                )
            bds.append(tuple(tuple(x.promote(order) for x in row) for row in mat))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "boundaries", tuple(bds))
        object.__setattr__(self, "order", order)
        for i in range(len(bds) - 1):
            if dims[i] and dims[i + 2]:
                prod = _matmul(bds[i], bds[i + 1], order)
                if any(not x.is_zero() for row in prod for x in row):
                    raise ChainComplexError(f"boundary {i} composed with boundary {i + 1} is not zero")

    @property
    def length(self) -> int:
        return len(self.dims)

    def boundary_rank(self, i: int) -> int:
        """Rank of bd_i : C_{i+1} -> C_i, zero outside the complex."""
        if i < 0 or i >= len(self.boundaries) or not self.dims[i] or not self.dims[i + 1]:
            return 0
        return rank(self.boundaries[i])

    def betti(self) -> tuple[int, ...]:
        ranks = [self.boundary_rank(i) for i in range(-1, self.length)]
        return tuple(self.dims[i] - ranks[i] - ranks[i + 1] for i in range(self.length))

    def is_acyclic(self) -> bool:
        return not any(self.betti())

    def image(self, i: int, vec: Vector) -> Vector:
        """bd_{i-1}(vec) for vec in C_i."""
        return _apply(self.boundaries[i - 1], vec, self.order)


BaseChoice = tuple[tuple[Vector, ...], ...]


def _unit(dim: int, j: int, order: int) -> Vector:
    return tuple(_one(order) if k == j else _zero(order) for k in range(dim))


def default_base_choice(C: ChainComplexExact, reverse: bool = False) -> BaseChoice:
    """Greedy choice: unit vectors of C_i at the pivot columns of bd_{i-1}.

    ``reverse=True`` scans columns from the right, giving a second, generally
    different, valid choice.
    """
    if not C.length:
        return ()
    out = [()]
    for i in range(1, C.length):
        dim = C.dims[i]
        if not dim or not C.dims[i - 1]:
            out.append(())
            continue
        cols = list(range(dim))
        if reverse:
            cols.reverse()
        rows = [[row[j] for j in cols] for row in C.boundaries[i - 1]]
        pivots, _ = _eliminate(rows)
        out.append(tuple(_unit(dim, cols[j], C.order) for j in pivots))
    return tuple(out)


def _small(rng: random.Random, order: int, spread: int = 3) -> CyclotomicNumber:
    coeffs = [Fraction(rng.randint(-spread, spread), rng.randint(1, 2)) for _ in range(euler_phi(order))]
    return CyclotomicNumber(order, coeffs)


def mixed_base_choice(C: ChainComplexExact, rng: random.Random) -> BaseChoice:
    """A random valid BaseChoice independent of the default one.

    Starts from the right-to-left greedy choice, applies a random invertible
    transformation within each b_i and adds random cycles (boundaries of
    random chains one degree up), which keeps the images a basis.
    """
    base = default_base_choice(C, reverse=True)
    out = [()]
    for i in range(1, C.length):
        vecs = base[i]
        k = len(vecs)
        if not k:
            out.append(())
            continue
        while True:
            mix = [[_small(rng, C.order) for _ in range(k)] for _ in range(k)]
            if not determinant(mix).is_zero():
                break
        new = []
        for a in range(k):
            v = [sum((mix[a][b] * vecs[b][j] for b in range(k)), _zero(C.order)) for j in range(C.dims[i])]
            if i < C.length - 1 and C.dims[i + 1]:
                w = tuple(_small(rng, C.order) for _ in range(C.dims[i + 1]))
                cycle = _apply(C.boundaries[i], w, C.order)
                v = [x + y for x, y in zip(v, cycle)]
            new.append(tuple(v))
        out.append(tuple(new))
    return tuple(out)


def torsion_of_acyclic(C: ChainComplexExact, b: BaseChoice | None = None) -> CyclotomicNumber:
    """Torsion of an acyclic complex, well defined up to sign.

    Raises NotAcyclicError if some homology group is nonzero and
    DegenerateBaseError if a base-change matrix is singular.
    """
    betti = C.betti()
    if any(betti):
        raise NotAcyclicError(f"complex has nonzero homology, Betti numbers {betti}")
    if b is None:
        b = default_base_choice(C)
    if len(b) != C.length:
        raise DegenerateBaseError(f"base choice has {len(b)} degrees, complex has {C.length}")
    result = _one(C.order)
    for i in range(C.length):
        if not C.dims[i]:
            continue
        cols = []
        if i + 1 < C.length:
            cols.extend(_apply(C.boundaries[i], v, C.order) for v in b[i + 1])
        cols.extend(b[i])
        if len(cols) != C.dims[i]:
            raise DegenerateBaseError(
                f"degree {i}: {len(cols)} vectors chosen for a space of dimension {C.dims[i]}"
            )
        matrix = [[col[r] for col in cols] for r in range(C.dims[i])]
        det = determinant(matrix)
        if det.is_zero():
            raise DegenerateBaseError(f"degree {i}: chosen vectors are not a basis")
        result = result * det if i % 2 else result / det
    return result


def random_acyclic_complex(
    rng: random.Random, order: int, max_length: int = 5, max_dim: int = 4
) -> ChainComplexExact:
    """A random acyclic complex: elementary pieces F -> F conjugated by random bases."""
    while True:
        length = rng.randint(2, max_length)
        ranks = [rng.randint(0, max_dim) for _ in range(length - 1)]
        dims = [
            (ranks[i - 1] if i > 0 else 0) + (ranks[i] if i < length - 1 else 0)
            for i in range(length)
        ]
        if all(d <= max_dim for d in dims) and any(dims):
            break
    # standard form: C_i = [x (r_{i-1} vectors), y (r_i vectors)], bd x_k = y_k
    std = []
    for i in range(length - 1):
        rows = []
        for r in range(dims[i]):
            row = []
            for c in range(dims[i + 1]):
                is_y = r >= (ranks[i - 1] if i > 0 else 0)
                y_index = r - (ranks[i - 1] if i > 0 else 0)
                row.append(_one(order) if is_y and c == y_index and c < ranks[i] else _zero(order))
            rows.append(tuple(row))
        std.append(tuple(rows))
    bases = []
    for d in dims:
        while True:
            p = tuple(tuple(_small(rng, order, 2) for _ in range(d)) for _ in range(d))
            if d == 0 or not determinant(p).is_zero():
                break
        bases.append(p)
    bds = []
    for i in range(length - 1):
        if not dims[i] or not dims[i + 1]:
            bds.append(tuple(tuple(_zero(order) for _ in range(dims[i + 1])) for _ in range(dims[i])))
            continue
        inv_next = _inverse_matrix(bases[i + 1], order)
        bds.append(_matmul(_matmul(bases[i], std[i], order), inv_next, order))
    return ChainComplexExact(tuple(dims), tuple(bds), order)


def _inverse_matrix(matrix: Matrix, order: int) -> Matrix:
    n = len(matrix)
    rows = [list(row) + [_one(order) if j == i else _zero(order) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        k = next(i for i in range(c, n) if not rows[i][c].is_zero())
        rows[c], rows[k] = rows[k], rows[c]
        inv = rows[c][c].inverse()
        rows[c] = [x * inv for x in rows[c]]
        for i in range(n):
            if i != c and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return tuple(tuple(row[n:]) for row in rows)


# -- lens spaces ------------------------------------------------------------


def lens_cw_complex(L: LensSpace, q: int) -> ChainComplexExact:
    """Twisted cellular complex of the equivariant decomposition of S^{2n-1}.

    One cell per degree.  The boundary of the (2i-1)-cell is
    (g^{l_i} - 1) times the (2i-2)-cell; the boundary of the (2i-2)-cell is the
    norm element sum_j g^j, which alpha_q sends to 0.
    """
    check_character(L, q)
    m = L.m
    bds = []
    for j in range(L.dim):
        if j % 2 == 0:
            entry = root_of_unity(m, q * L.l[j // 2]) - 1
        else:
            entry = _zero(m)
            for k in range(m):
                entry = entry + root_of_unity(m, q * k)
        bds.append(((entry,),))
    return ChainComplexExact((1,) * (L.dim + 1), tuple(bds), m)


def lens_torsion_closed_form(L: LensSpace, q: int) -> CyclotomicNumber:
    """prod_k (zeta_m^{q l_k} - 1)^{-1}, built without any chain complex."""
    check_character(L, q)
    prod = _one(L.m)
    for lk in L.l:
        prod = prod * (root_of_unity(L.m, q * lk) - 1)
    return prod.inverse()


def turaev_homological(L: LensSpace, q: int) -> TorsionValue:
    """tau = prod_k |zeta^{q l_k} - 1|^{-1} * i^n * exp(-pi i q sum(l)/m), up to sign."""
    magnitude = ray_singer_magnitude(L, q).inverse()
    phase = RationalAngle(Fraction(L.n, 2) - Fraction(q * sum(L.l), L.m), 1)
    return TorsionValue(magnitude, phase)


def turaev_cohomological(L: LensSpace, q: int, s: int = 0) -> TorsionValue:
    """Cohomological Turaev torsion for the Euler structure shifted by g^s, up to sign."""
    check_euler_structure(L, s)
    magnitude = ray_singer_magnitude(L, q)
    phase = RationalAngle(Fraction(L.n, 2) + Fraction(q * (2 * s - sum(L.l)), L.m), 1)
    return TorsionValue(magnitude, phase)
