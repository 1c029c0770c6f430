"""Command-line surface.

Subcommands:

    count-e    box-scan the family up to a height bound
    count-cm   fast per-j CM census at a height bound
    count-j    fast count of one j-invariant's subfamily
    et         twist-family counts for the thirteen fixed curves
    table      emit one of the published-style tables as CSV/TSV
    asym       leading-term prediction for a family
    verify     run the built-in consistency suite

Configuration precedence is flags > environment (CMCENSUS_ prefix) >
defaults; the scan ceiling honors CMCENSUS_SCAN_CEILING and the worker
count CMCENSUS_WORKERS.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 resource ceiling exceeded.
"""

from __future__ import annotations

import math
import random
import sys

import click

from . import __version__
from .asymptotics import prediction, round_sig
from .curves import CM_TABLE, Curve, naive_height
from .cuspidal import CuspidalCurve, integral_points, integral_points_brute
from .family import (
    DEFAULT_SCAN_CEILING,
    count_cm_fast,
    count_with_j,
    mobius_inversion_check,
    scan_family,
)
from .intmath import CeilingExceeded, count_k_free, count_k_free_sieve
from .reports import (
    density_report,
    emit_table,
    family_table,
    j0_share_table,
    per_j_table,
    prediction_table,
    twist_table,
    write_table,
)
from .twists import (
    count_twist_family,
    default_fixed_curves,
    enumerate_twist_family,
    load_fixed_curves,
    twist_curve,
    twist_height,
)

_EXIT_MISMATCH = 1
_EXIT_CEILING = 3


def _ceiling_exit(exc: CeilingExceeded):
    click.echo(f"error: {exc}", err=True)
    sys.exit(_EXIT_CEILING)


workers_option = click.option(
    "--workers",
    type=int,
    default=1,
    envvar="CMCENSUS_WORKERS",
    show_default=True,
    help="parallel workers for the box scan",
)
ceiling_option = click.option(
    "--scan-ceiling",
    type=int,
    default=DEFAULT_SCAN_CEILING,
    envvar="CMCENSUS_SCAN_CEILING",
    show_default=True,
    help="largest height bound the box scan will accept",
)


@click.group()
@click.version_option(version=__version__)
def cli():
    """Exact census of CM elliptic curves ordered by naive height."""


@cli.command("count-e")
@click.option("--xmax", type=int, required=True, help="height bound")
@workers_option
@ceiling_option
def count_e(xmax: int, workers: int, scan_ceiling: int):
    """Box-scan the family up to --xmax and print every census field."""
    bar_state = {"bar": None}

    def show(done, _part):
        if bar_state["bar"] is not None:
            bar_state["bar"].update(1)

    try:
        chunks = max(1, workers) * 4
        with click.progressbar(length=chunks, label="scanning") as bar:
            bar_state["bar"] = bar
            fc = scan_family(xmax, workers=workers, progress=show, ceiling=scan_ceiling)
    except CeilingExceeded as exc:
        _ceiling_exit(exc)
    click.echo(f"X                 {fc.x}")
    click.echo(f"box pairs         {fc.box_pairs}")
    click.echo(f"minimal pairs     {fc.minimal_count}")
    click.echo(f"singular          {fc.singular_count}")
    click.echo(f"curves            {fc.curve_count}")
    click.echo(f"cm curves         {fc.cm_count}")
    for j, n in fc.tally.counts.items():
        if n:
            click.echo(f"  j = {j}: {n}")
    click.echo(f"  non-cm: {fc.tally.non_cm}")


@cli.command("count-cm")
@click.option("--xmax", type=int, required=True, help="height bound")
def count_cm(xmax: int):
    """Fast per-j CM census at --xmax (no box scan)."""
    tally = count_cm_fast(xmax)
    for j, n in tally.counts.items():
        click.echo(f"j = {j}: {n}")
    click.echo(f"total: {tally.cm_total}")


@cli.command("count-j")
@click.option("--j", "j_value", type=int, required=True, help="j-invariant")
@click.option("--xmax", type=int, required=True, help="height bound")
def count_j(j_value: int, xmax: int):
    """Fast count of the subfamily with one j-invariant."""
    click.echo(count_with_j(j_value, xmax))


@cli.command("et")
@click.option("--xmax", type=int, required=True, help="height bound")
@click.option(
    "--fixed-curves",
    "fixed_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="CSV override (columns j, A, B) for the fixed curves",
)
def et(xmax: int, fixed_path: str | None):
    """Twist-family counts per CM j-invariant at --xmax."""
    fixed_set = load_fixed_curves(fixed_path) if fixed_path else default_fixed_curves()
    total = 0
    for fixed in fixed_set:
        n = count_twist_family(fixed, xmax)
        total += n
        click.echo(f"j = {fixed.j}: {n}")
    click.echo(f"total: {total}")


_TABLE_IDS = ("1", "2", "4", "5", "6", "density")


@cli.command("table")
@click.option("--id", "table_id", type=click.Choice(_TABLE_IDS), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--format", "fmt", type=click.Choice(("csv", "tsv")), default="csv",
              show_default=True)
@click.option(
    "--fixed-curves",
    "fixed_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="CSV override for table 6's fixed curves",
)
@workers_option
def table(table_id: str, out: str, fmt: str, fixed_path: str | None, workers: int):
    """Emit one of the published-style tables to --out."""
    grid_e = tuple(10**k for k in range(1, 8))
    grid_cm = tuple(10**k for k in range(2, 13))
    try:
        if table_id == "1":
            report = family_table(grid_e, workers=workers)
        elif table_id == "2":
            report = prediction_table(grid_e, workers=workers)
        elif table_id == "4":
            report = per_j_table(10**10)
        elif table_id == "5":
            report = j0_share_table(grid_cm)
        elif table_id == "6":
            fixed_set = (
                load_fixed_curves(fixed_path) if fixed_path else default_fixed_curves()
            )
            report = twist_table(10**10, fixed_set)
        else:
            report = density_report(grid_cm, workers=workers)
        write_table(report, out, fmt)
    except CeilingExceeded as exc:
        _ceiling_exit(exc)
    click.echo(f"wrote {out}")


@cli.command("asym")
@click.option(
    "--family",
    type=click.Choice(("e", "cm", "j0", "j1728", "et")),
    required=True,
)
@click.option("--xmax", type=int, required=True, help="height bound")
def asym(family: str, xmax: int):
    """Leading-term prediction for a family at --xmax."""
    fixed_set = default_fixed_curves() if family == "et" else None
    pred = prediction(family, xmax, fixed_set)
    click.echo(round_sig(pred.main_terms, 10))
    click.echo(f"error exponent: {pred.error_exponent}")


@cli.command("verify")
@workers_option
def verify(workers: int):
    """Run the built-in consistency suite; nonzero exit on any mismatch."""
    failures = 0

    def check(name: str, ok: bool):
        nonlocal failures
        click.echo(f"{'ok  ' if ok else 'FAIL'} {name}")
        if not ok:
            failures += 1

    ok = all(
        count_k_free(x, k) == count_k_free_sieve(x, k)
        for k in (2, 3, 4, 6)
        for x in range(0, 20001, 37)
    )
    check("k-free counts: Mobius sum == sieve", ok)

    ok = True
    for x in (10**3, 10**4, 10**5):
        lhs, rhs = mobius_inversion_check(x, workers=workers)
        ok = ok and lhs == rhs
    check("Mobius inversion identity on the box counts", ok)

    rng = random.Random(7)
    ok = True
    for _ in range(60):
        p = rng.choice([-1, 1]) * rng.randint(1, 40)
        q = rng.randint(1, 40)
        if math.gcd(abs(p), q) != 1:
            continue
        curve = CuspidalCurve(p, q)
        ok = ok and integral_points(curve, 500) == integral_points_brute(curve, 500)
    check("cuspidal points: parametrization == brute scan", ok)

    ok = True
    for fixed in default_fixed_curves():
        for d in (-9, -2, -1, 1, 2, 9):
            ok = ok and twist_height(fixed, d) == naive_height(twist_curve(fixed, d))
    check("twist height law", ok)

    tally = count_cm_fast(10**6)
    scanned = scan_family(10**6, workers=workers).tally
    check(
        "fast CM tally == box-scan tally at 10^6",
        tally.counts == scanned.counts,
    )

    if failures:
        click.echo(f"{failures} check(s) failed", err=True)
        sys.exit(_EXIT_MISMATCH)
    click.echo("all checks passed")


def main():
    cli(prog_name="cmcensus")


if __name__ == "__main__":
    main()
