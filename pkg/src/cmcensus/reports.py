"""Report assembly: exact counts next to their predictions, rendered with
the fixed rounding conventions, and serialized as CSV/TSV.

Counts are printed exactly; prediction columns use 6 significant digits;
density ratios use 5 decimal places.  Report values are deterministic given
the grid and the fixed curves (worker count never affects them); generation
metadata rides along in the report object but stays out of the emitted rows.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO

from . import __version__
from .asymptotics import (
    cm_count_main_terms,
    curve_count_main_term,
    j0_main_term,
    round_places,
    round_sig,
)
from .curves import CM_TABLE
from .family import count_cm_fast, count_with_j, scan_family
from .twists import FixedCurve, count_twist_family, default_fixed_curves

__all__ = [
    "CountReport",
    "density_report",
    "family_table",
    "prediction_table",
    "per_j_table",
    "j0_share_table",
    "twist_table",
    "emit_table",
    "write_table",
]


@dataclass(frozen=True)
class CountReport:
    """A finished table: column names, stringifiable rows, and metadata."""

    family: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    comments: tuple[str, ...] = ()
    generated: str = field(
        default_factory=lambda: datetime.datetime.now(datetime.timezone.utc).isoformat()
    )
    version: str = __version__
    workers: int = 1


def family_table(x_grid: tuple[int, ...], workers: int = 1) -> CountReport:
    """Exact census counts with the CM share of the family (box scans)."""
    rows = []
    for x in x_grid:
        fc = scan_family(x, workers=workers)
        share = Fraction(fc.cm_count, fc.curve_count) if fc.curve_count else None
        rows.append(
            (
                x,
                fc.curve_count,
                fc.cm_count,
                round_sig(share, 6) if share is not None else "",
            )
        )
    return CountReport(
        family="E",
        columns=("X", "curves", "cm_curves", "cm_share"),
        rows=tuple(rows),
        workers=workers,
    )


def prediction_table(x_grid: tuple[int, ...], workers: int = 1) -> CountReport:
    """Exact counts next to their leading-term predictions."""
    rows = []
    for x in x_grid:
        fc = scan_family(x, workers=workers)
        rows.append(
            (
                x,
                fc.curve_count,
                round_sig(curve_count_main_term(x), 6),
                fc.cm_count,
                round_sig(cm_count_main_terms(x), 6),
            )
        )
    return CountReport(
        family="E",
        columns=("X", "curves", "curves_prediction", "cm_curves", "cm_prediction"),
        rows=tuple(rows),
        workers=workers,
    )


def per_j_table(x: int = 10**10) -> CountReport:
    """Counts per CM order at one height bound, with each order's share."""
    tally = count_cm_fast(x)
    total = tally.cm_total
    rows = []
    for order in CM_TABLE:
        n = tally.counts[order.j]
        rows.append(
            (
                order.d_k,
                order.conductor,
                order.j,
                n,
                round_sig(Fraction(n, total), 6) if n else "0",
            )
        )
    return CountReport(
        family="E_j",
        columns=("d_K", "f", "j", f"curves_at_{x}", "share_of_cm"),
        rows=tuple(rows),
    )


def j0_share_table(x_grid: tuple[int, ...]) -> CountReport:
    """CM totals, the j = 0 subfamily, its prediction, and its share."""
    rows = []
    for x in x_grid:
        cm = count_cm_fast(x).cm_total
        j0 = count_with_j(0, x)
        rows.append(
            (
                x,
                cm,
                j0,
                round_sig(j0_main_term(x), 8),
                round_places(Fraction(j0, cm), 5),
            )
        )
    return CountReport(
        family="E_0",
        columns=("X", "cm_curves", "j0_curves", "j0_prediction", "j0_share"),
        rows=tuple(rows),
    )


def twist_table(
    x: int = 10**10, fixed_set: tuple[FixedCurve, ...] | None = None
) -> CountReport:
    """Twist-family sizes per CM order at one height bound.

    The numbers depend on the chosen fixed curves through their heights;
    with other fixed curves the per-j values shift accordingly.
    """
    if fixed_set is None:
        fixed_set = default_fixed_curves()
    counts = {f.j: count_twist_family(f, x) for f in fixed_set}
    total = sum(counts.values())
    rows = []
    for order in CM_TABLE:
        n = counts.get(order.j, 0)
        rows.append(
            (
                order.d_k,
                order.conductor,
                order.j,
                n,
                round_sig(Fraction(n, total), 6) if n else "0",
            )
        )
    return CountReport(
        family="ET_j",
        columns=("d_K", "f", "j", f"twists_at_{x}", "share_of_cm"),
        rows=tuple(rows),
        comments=(
            "twist-family sizes depend on the chosen fixed curves; these use "
            "the compiled-in representatives (override with --fixed-curves)",
        ),
    )


def density_report(
    x_grid: tuple[int, ...],
    workers: int = 1,
    scan_limit: int = 10**10,
) -> CountReport:
    """Density trajectories: the CM share of the family and the j = 0 share
    of the CM curves.

    The family count comes from the box scan and is omitted (empty cell)
    above ``scan_limit``; no extrapolation is ever substituted.
    """
    rows = []
    for x in x_grid:
        cm = count_cm_fast(x).cm_total
        j0 = count_with_j(0, x)
        if x <= scan_limit:
            curves = scan_family(x, workers=workers).curve_count
            cm_share = round_sig(Fraction(cm, curves), 6)
        else:
            curves = ""
            cm_share = ""
        rows.append((x, curves, cm, j0, cm_share, round_places(Fraction(j0, cm), 5)))
    return CountReport(
        family="density",
        columns=("X", "curves", "cm_curves", "j0_curves", "cm_share", "j0_share"),
        rows=tuple(rows),
        workers=workers,
    )


def emit_table(report: CountReport, fmt: str = "csv") -> str:
    """Serialize: optional comment lines, header row, then data rows.

    UTF-8 text with LF line endings; csv and tsv differ only in delimiter.
    """
    if fmt not in ("csv", "tsv"):
        raise ValueError(f"unknown format {fmt!r}")
    sep = "," if fmt == "csv" else "\t"
    lines = [f"# {c}" for c in report.comments]
    lines.append(sep.join(report.columns))
    for row in report.rows:
        lines.append(sep.join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def write_table(report: CountReport, path: str, fmt: str = "csv") -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(emit_table(report, fmt))
    except OSError as exc:
        raise OSError(f"cannot write table to {path}: {exc}") from exc
