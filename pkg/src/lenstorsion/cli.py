"""Command-line front end.

Usage:
    lenstorsion compute --lens "L(5;1,1)" --q 1 --s 0
    lenstorsion table --lens "L(3;1,1,1)" --format text
    lenstorsion chain --file complex.txt
    lenstorsion verify

Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
"""

from __future__ import annotations

import json
import os
import sys

import click
import mpmath

from .analytic import phase_refined, ray_singer, refined_analytic_torsion
from .chain import ChainComplexError, torsion_of_acyclic
from .chainfile import ChainFormatError, read_chain_file
from .comparison import comparison_report, ratio_table, render_table
from .cyclotomic import to_complex
from .eta import EtaRationalityError
from .lens import LensError, LensSpace, dimension_class, make_lens

__all__ = ["main", "parse_lens_notation", "LensSyntaxError"]

PRECISION_ENV = "LENSTORSION_DIGITS"


class LensSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


def parse_lens_notation(text: str) -> LensSpace:
    """Parse ``L(m; p1,p2,...,pn)``; whitespace between tokens is allowed.

    >>> parse_lens_notation("L(3; 1, 1, 1)")
    LensSpace(m=3, p=(1, 1, 1), l=(1, 1, 1))
    """
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch: str):
        nonlocal pos
        skip()
        if pos >= len(text) or text[pos] != ch:
            found = repr(text[pos]) if pos < len(text) else "end of input"
            raise LensSyntaxError(f"expected {ch!r}, found {found}", pos + 1)
        pos += 1

    def integer() -> int:
        nonlocal pos
        skip()
        start = pos
        if pos < len(text) and text[pos] in "+-":
            pos += 1
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start or not text[start:pos].lstrip("+-"):
            found = repr(text[start]) if start < len(text) else "end of input"
            raise LensSyntaxError(f"expected an integer, found {found}", start + 1)
        return int(text[start:pos])

    expect("L")
    expect("(")
    m = integer()
    expect(";")
    p = [integer()]
    skip()
    while pos < len(text) and text[pos] == ",":
        pos += 1
        p.append(integer())
        skip()
    expect(")")
    skip()
    if pos != len(text):
        raise LensSyntaxError(f"unexpected trailing {text[pos]!r}", pos + 1)
    return make_lens(m, p)


def _lens_option(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_lens_notation(value)
    except (LensSyntaxError, LensError) as exc:
        raise click.BadParameter(str(exc), ctx=ctx, param=param) from None


def _default_digits() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return 50
    try:
        value = int(raw)
    except ValueError:
        raise click.UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise click.UsageError(f"{PRECISION_ENV} must be positive")
    return value


def _nstr(x, display: int) -> str:
    return mpmath.nstr(x, display)


@click.group()
@click.option("--display", default=15, show_default=True, type=click.IntRange(1, 1000),
              help="Significant digits shown for floating approximations.")
@click.pass_context
def main(ctx, display):
    """Exact torsion and eta invariants of lens spaces."""
    ctx.ensure_object(dict)
    ctx.obj["display"] = display
    ctx.obj["digits"] = max(_default_digits(), display)


@main.command()
@click.option("--lens", "lens", required=True, callback=_lens_option, help='Lens space, e.g. "L(5;1,1)".')
@click.option("--q", "q", required=True, type=int, help="Character index, 1 <= q <= m-1.")
@click.option("--s", "s", default=0, show_default=True, type=int, help="Euler structure shift, 0 <= s <= m-1.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.pass_context
def compute(ctx, lens, q, s, fmt):
    """Eta invariants, torsions and the ratio R for one (L, q, s)."""
    display, digits = ctx.obj["display"], ctx.obj["digits"]
    if not 1 <= q <= lens.m - 1:
        raise click.BadParameter(f"q={q} must lie in 1..{lens.m - 1}", param_hint="--q")
    if not 0 <= s <= lens.m - 1:
        raise click.BadParameter(f"s={s} must lie in 0..{lens.m - 1}", param_hint="--s")
    try:
        rep = comparison_report(lens, q, s)
        rho = refined_analytic_torsion(lens, q)
        rs = ray_singer(lens, q)
        ph = phase_refined(lens, q)
    except (EtaRationalityError, ArithmeticError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if fmt == "json":
        doc = rep.as_dict(display)
        doc["dimension_class"] = dimension_class(lens)
        doc["phase_refined_over_pi"] = str(ph.r)
        doc["refined_analytic_torsion_value"] = _nstr(rho.to_complex(digits), display)
        click.echo(json.dumps(doc, indent=2))
        return
    lines = [
        f"lens                      {lens}  (dim {lens.dim}, {dimension_class(lens)})",
        f"character q               {q}",
        f"Euler structure s         {s}",
        f"eta_q                     {rep.eta_q}",
        f"eta_trivial               {rep.eta_trivial}",
        f"Ray-Singer torsion        {rs.magnitude}  ~ {_nstr(rs.magnitude.evaluate(digits), display)}",
        f"refined analytic torsion  {rho}",
        f"                          ~ {_nstr(rho.to_complex(digits), display)}",
        f"phase of rho_an (mod pi)  {ph.exact_str()}",
        f"cohomological Turaev      {rep.turaev}",
        f"ratio R                   {rep.R_phase.exp_str()}  (phase {rep.R_phase.exact_str()}"
        f" ~ {_nstr(rep.R_phase.radians(digits), display)} rad, |R| = {rep.R_magnitude})",
    ]
    if rep.theta is not None:
        lines.append(f"theta (mod pi)            {rep.theta.exact_str()}  (signed {rep.theta.signed()}*pi)")
    else:
        lines.append("theta                     not available for dim = 1 mod 4")
    click.echo("\n".join(lines))


@main.command()
@click.option("--lens", "lens", required=True, callback=_lens_option, help='Lens space, e.g. "L(3;1,1,1)".')
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="text", show_default=True)
@click.pass_context
def table(ctx, lens, fmt):
    """Ratio R for every character q and Euler structure s."""
    try:
        out = render_table(ratio_table(lens), fmt, ctx.obj["display"])
    except ArithmeticError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(out, nl=False)


@main.command()
@click.option("--file", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def chain(ctx, path):
    """Torsion (up to sign) of an acyclic complex read from a chain file."""
    display, digits = ctx.obj["display"], ctx.obj["digits"]
    try:
        C = read_chain_file(path)
    except (ChainFormatError, ChainComplexError) as exc:
        raise click.UsageError(f"{path}: {exc}") from None
    try:
        tau = torsion_of_acyclic(C)
    except ChainComplexError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"order      {C.order}")
    click.echo(f"dims       {' '.join(map(str, C.dims))}")
    click.echo(f"torsion    ±({tau.to_polynomial_text()})")
    click.echo(f"           ~ ±{_nstr(to_complex(tau, digits), display)}")


@main.command()
def verify():
    """Run the reproduction suite; exit status 1 on any failure."""
    from .verify import run_checks

    results = run_checks(click.echo)
    failed = [r for r in results if not r.ok]
    click.echo(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
