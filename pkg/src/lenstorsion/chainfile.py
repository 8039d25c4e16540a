"""Text format for chain complexes over Q(zeta_N).

::

    # comment lines and blank lines are ignored
    order 5                 # N; entries are polynomials in z = zeta_N
    dims 1 1                # dim C_0, dim C_1, ..., dim C_d
    boundary 0              # matrix of bd_0 : C_1 -> C_0
    z^1 - 1                 # dim C_0 rows; entries in a row separated by '|'

Each ``boundary i`` header is followed by exactly ``dims[i]`` rows of
``dims[i+1]`` entries.  Boundary blocks that are omitted are zero.  An entry
is a sum of terms ``c``, ``c*z^k``, ``c*z``, ``z^k`` or ``z`` where ``c`` is an
integer or a fraction ``a/b``; terms are joined by ``+`` or ``-``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .chain import ChainComplexExact
from .cyclotomic import CyclotomicNumber

__all__ = ["ChainFormatError", "parse_polynomial", "parse_chain_text", "read_chain_file", "format_chain"]


class ChainFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_TERM = re.compile(
    r"""
    (?P<coef>\d+(?:/\d+)?)?      # rational coefficient
    (?:(?(coef)\*)(?P<z>z)(?:\^(?P<exp>\d+))?)?
    """,
    re.VERBOSE,
)


def parse_polynomial(text: str, order: int) -> CyclotomicNumber:
    """Parse ``a0 + a1*z^1 + ...`` into an element of Q(zeta_order)."""
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ChainFormatError("empty entry")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ChainFormatError(f"expected '+' or '-' at column {pos + 1} of {text!r}")
        match = _TERM.match(s, pos)
        if match is None or match.end() == pos:
            raise ChainFormatError(f"bad term at column {pos + 1} of {text!r}")
        coef = Fraction(match["coef"]) if match["coef"] else Fraction(1)
        if match["z"]:
            exp = int(match["exp"]) if match["exp"] is not None else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
        pos = match.end()
        first = False
    top = max(coeffs)
    dense = [coeffs.get(k, Fraction(0)) for k in range(top + 1)]
    # fold z^k with k >= order before reduction
    folded = [Fraction(0)] * min(len(dense), order)
    for k, c in enumerate(dense):
        folded[k % order] += c
    return CyclotomicNumber(order, folded)


def parse_chain_text(text: str) -> ChainComplexExact:
    order = None
    dims = None
    blocks: dict[int, list] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "order":
            order = _int(rest, lineno, "order")
            if order < 1:
                raise ChainFormatError("order must be positive", lineno)
        elif head == "dims":
            dims = [_int(x, lineno, "dimension") for x in rest.split()]
            if not dims:
                raise ChainFormatError("dims needs at least one entry", lineno)
        elif head == "boundary":
            if order is None or dims is None:
                raise ChainFormatError("'order' and 'dims' must precede boundary blocks", lineno)
            i = _int(rest, lineno, "boundary index")
            if not 0 <= i < len(dims) - 1:
                raise ChainFormatError(f"boundary index {i} outside 0..{len(dims) - 2}", lineno)
            if i in blocks:
                raise ChainFormatError(f"boundary {i} given twice", lineno)
            blocks[i] = []
            current = i
        else:
            if current is None:
                raise ChainFormatError(f"unexpected line {raw.strip()!r}", lineno)
            rows = blocks[current]
            if len(rows) == dims[current]:
                raise ChainFormatError(f"boundary {current} has more than {dims[current]} rows", lineno)
            try:
                entries = [parse_polynomial(cell, order) for cell in line.split("|")]
            except ChainFormatError as exc:
                raise ChainFormatError(str(exc), lineno) from None
            if len(entries) != dims[current + 1]:
                raise ChainFormatError(
                    f"boundary {current} rows need {dims[current + 1]} entries, got {len(entries)}", lineno
                )
            rows.append(tuple(entries))
    if order is None or dims is None:
        raise ChainFormatError("missing 'order' or 'dims'")
    zero = CyclotomicNumber.from_rational(0, order)
    bds = []
    for i in range(len(dims) - 1):
        rows = blocks.get(i)
        if rows is None:
            rows = [tuple(zero for _ in range(dims[i + 1])) for _ in range(dims[i])]
        elif len(rows) != dims[i]:
            raise ChainFormatError(f"boundary {i} needs {dims[i]} rows, got {len(rows)}")
        bds.append(tuple(rows))
    return ChainComplexExact(tuple(dims), tuple(bds), order)


def _int(text: str, lineno: int, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ChainFormatError(f"{what} must be an integer, got {text.strip()!r}", lineno) from None


def read_chain_file(path) -> ChainComplexExact:
    with open(path, encoding="utf-8") as fh:
        return parse_chain_text(fh.read())


def format_chain(C: ChainComplexExact) -> str:
    lines = [f"order {C.order}", "dims " + " ".join(map(str, C.dims))]
    for i, mat in enumerate(C.boundaries):
        if not mat or not mat[0]:
            continue
        lines.append(f"boundary {i}")
        for row in mat:
            lines.append(" | ".join(x.to_polynomial_text() for x in row))
    return "\n".join(lines) + "\n"
