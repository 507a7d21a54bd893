"""Command-line front end: scalar function tables, identity suites, and
operator exports.

Exit codes: 0 all checks pass, 1 identity failure, 2 usage error.  The
default truncation dimension is 2520 and can be overridden with the
IDEMARITH_DIM environment variable or --dim.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction

import click

from . import analytic, arith
from .algebra import element_to_json
from .idempotents import IdempotentSystem
from .ramanujan_ops import OperatorFamily
from .suites import SUITES, run_suite

DEFAULT_DIM = 2520


def _default_dim() -> int:
    return int(os.environ.get("IDEMARITH_DIM", DEFAULT_DIM))


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise click.UsageError(f"range must look like A..B, got {text!r}")
    if lo < 1 or hi < lo:
        raise click.UsageError(f"range {text!r} is empty or starts below 1")
    return lo, hi


def _format_value(v) -> str:
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)


_TABLE_FUNCTIONS = {
    "mobius": arith.mobius,
    "totient": arith.totient,
    "tau": arith.tau,
    "omega": arith.omega,
}


def _table_function(name: str):
    if name in _TABLE_FUNCTIONS:
        return _TABLE_FUNCTIONS[name]
    head, _, arg = name.partition(":")
    if not arg:
        raise click.UsageError(f"unknown function {name!r}")
    try:
        k = int(arg)
    except ValueError:
        raise click.UsageError(f"bad parameter in {name!r}")
    if head == "jordan":
        return lambda n: arith.jordan_totient(k, n)
    if head == "ramanujan":
        return lambda n: arith.ramanujan_sum(k, n)
    if head == "nu":
        return lambda n: arith.nu(k, n)
    if head == "lcm-count":
        return lambda n: arith.lcm_tuple_count(k, n)
    raise click.UsageError(f"unknown function {name!r}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@click.group()
def main():
    """Arithmetic-function tables, identity suites, and operator exports."""


@main.command("table")
@click.argument("function")
@click.option("--range", "range_", default="1..60", show_default=True,
              help="Index range A..B.")
@click.option("--format", "format_", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--out", type=click.Path(), default=None, help="Output path (default stdout).")
def cmd_table(function, range_, format_, out):
    """Tabulate a scalar arithmetic function.

    FUNCTION is one of mobius, totient, tau, omega, jordan:R, ramanujan:N,
    nu:K, lcm-count:S.
    """
    fn = _table_function(function)
    lo, hi = _parse_range(range_)
    rows = [(n, fn(n)) for n in range(lo, hi + 1)]
    if format_ == "csv":
        text = "n,value\n" + "".join(f"{n},{_format_value(v)}\n" for n, v in rows)
    else:
        text = json.dumps(
            {"function": function, "range": [lo, hi],
             "values": {str(n): _format_value(v) for n, v in rows}},
            indent=2, sort_keys=True) + "\n"
    _emit(text, out)


@main.command("check")
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--n-max", type=int, default=60, show_default=True)
@click.option("--dim", type=int, default=None,
              help=f"Truncation dimension (default IDEMARITH_DIM or {DEFAULT_DIM}).")
@click.option("--tolerance", type=float, default=1e-9, show_default=True)
@click.option("--out", type=click.Path(), default=None, help="Report path (default stdout).")
def cmd_check(suite, n_max, dim, tolerance, out):
    """Run an identity suite and emit its JSON report.

    Exits 0 iff every check passes; documented errata are reported in a
    separate section and never fail the run.
    """
    if tolerance < 0:
        raise click.UsageError("tolerance must be >= 0")
    dim = dim if dim is not None else _default_dim()
    if dim < 1:
        raise click.UsageError("dim must be positive")
    report = run_suite(suite, n_max=n_max, dim=dim, tol=tolerance)
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", out)
    sys.exit(0 if report["pass"] else 1)


@main.command("export")
@click.argument("spec")
@click.option("--dim", type=int, default=None,
              help=f"Truncation dimension (default IDEMARITH_DIM or {DEFAULT_DIM}).")
@click.option("--offset", type=click.IntRange(0, 1), default=0, show_default=True)
@click.option("--out", type=click.Path(), default=None, help="Output path (default stdout).")
def cmd_export(spec, dim, offset, out):
    """Export one operator as JSON.

    SPEC is one of P:j:n, C:j:n, T:r:j:n, S:n, theta, IU*.
    """
    dim = dim if dim is not None else _default_dim()
    if dim < 1:
        raise click.UsageError("dim must be positive")
    parts = spec.split(":")
    kind = parts[0].upper()

    def _ints(expected: int) -> list[int]:
        if len(parts) - 1 != expected:
            raise click.UsageError(f"{kind} export expects {expected} indices")
        try:
            return [int(p) for p in parts[1:]]
        except ValueError:
            raise click.UsageError(f"non-integer index in {spec!r}")

    if kind == "THETA":
        element = analytic.shift_operators(analytic.TruncatedSpace(dim, 1))["theta"]
    elif kind == "IU*":
        space = analytic.TruncatedSpace(dim, 1)
        ops = analytic.shift_operators(space)
        element = ops["integration"] * ops["U_star"]
    elif kind == "P":
        j, n = _ints(2)
        if dim < n:
            raise click.UsageError(f"dim {dim} is smaller than level {n}")
        element = IdempotentSystem(dim, offset).projection(j, n)
    elif kind in ("C", "S", "T"):
        family_for = lambda n: OperatorFamily(IdempotentSystem(dim, offset))
        if kind == "S":
            (n,) = _ints(1)
            if dim < n:
                raise click.UsageError(f"dim {dim} is smaller than level {n}")
            element = family_for(n).s_operator(n)
        elif kind == "C":
            j, n = _ints(2)
            if dim < n:
                raise click.UsageError(f"dim {dim} is smaller than level {n}")
            element = family_for(n).c_operator(j, n)
        else:
            r, j, n = _ints(3)
            if dim < n:
                raise click.UsageError(f"dim {dim} is smaller than level {n}")
            if n % r != 0:
                raise click.UsageError(f"r={r} does not divide n={n}")
            element = family_for(n).t_operator(r, j, n)
    else:
        raise click.UsageError(f"unknown operator spec {spec!r}")
    _emit(json.dumps(element_to_json(element), sort_keys=True) + "\n", out)


if __name__ == "__main__":
    main()
