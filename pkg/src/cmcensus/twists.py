"""Twist families of fixed curves.

Fix a curve with j-invariant j.  Its quadratic / quartic / sextic twists
(n = 2, 4, 6 according to j outside {0, 1728}, j = 1728, j = 0) give one
representative per rational isomorphism class with that j, indexed by the
unique n-th-power-free integer in each coset of the n-th powers.  Twisting
by D multiplies the naive height by |D|^m with m = 12 / n, which turns
bounded-height twist counts into k-free counts below an exact integer bound.

Default fixed curves are the thirteen compiled-in CM representatives; any
choice can be supplied instead (the counts depend on it through the fixed
curve's height), including from a CSV override file.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .curves import CM_TABLE, CmTable, Curve, cm_order_of, j_invariant, naive_height
from .intmath import (
    count_k_free,
    factorize,
    integer_kth_root,
    power_free_list,
    zeta_even,
)

__all__ = [
    "FixedCurve",
    "TwistClass",
    "EtCounts",
    "twist_exponents",
    "twist_curve",
    "twist_height",
    "nth_power_free_rep",
    "count_twist_family",
    "enumerate_twist_family",
    "count_cm_twists",
    "twist_leading_constant",
    "default_fixed_curves",
    "load_fixed_curves",
]


def twist_exponents(j: int | Fraction) -> tuple[int, int]:
    """(n, m) for a given j: the twist index n and the height exponent m.

    n = 6, m = 2 for j = 0; n = 4, m = 3 for j = 1728; n = 2, m = 6
    otherwise.  Always n * m = 12.
    """
    if j == 0:
        return 6, 2
    if j == 1728:
        return 4, 3
    return 2, 6


@dataclass(frozen=True)
class FixedCurve:
    """A fixed short-Weierstrass curve with integer j, plus its derived
    twist data (n, m, cached height)."""

    j: int
    a: int
    b: int
    n: int
    m: int
    height: int

    @classmethod
    def from_coefficients(cls, j: int, a: int, b: int) -> "FixedCurve":
        curve = Curve(a, b)
        jv = j_invariant(curve)
        if jv != j:
            raise ValueError(f"curve ({a}, {b}) has j-invariant {jv}, not {j}")
        n, m = twist_exponents(j)
        return cls(j=j, a=a, b=b, n=n, m=m, height=naive_height(curve))


@dataclass(frozen=True)
class TwistClass:
    """One rational isomorphism class: a fixed curve twisted by an
    n-th-power-free integer D."""

    fixed: FixedCurve
    d: int


@dataclass(frozen=True)
class EtCounts:
    """Bounded-height twist-family sizes, per CM j-invariant."""

    x: int
    per_j: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.per_j.values())


def twist_curve(fixed: FixedCurve, d: int) -> Curve:
    """The twist of the fixed curve by D = d.

    (d^2 a, d^3 b) generically; (d a, 0) when j = 1728; (0, d b) when j = 0.
    """
    if d == 0:
        raise ValueError("twist parameter must be nonzero")
    if fixed.j == 0:
        return Curve(0, d * fixed.b)
    if fixed.j == 1728:
        return Curve(d * fixed.a, 0)
    return Curve(d * d * fixed.a, d**3 * fixed.b)


def twist_height(fixed: FixedCurve, d: int) -> int:
    """naive height of the twist by d: |d|^m times the fixed height."""
    if d == 0:
        raise ValueError("twist parameter must be nonzero")
    return abs(d) ** fixed.m * fixed.height


def _strip_nth_power(value: int, n: int) -> int:
    """Divide out the largest n-th-power divisor of value (sign preserved)."""
    out = 1 if value > 0 else -1
    for p, e in factorize(value).factors:
        out *= p ** (e % n)
    return out


def nth_power_free_rep(r: int | Fraction, n: int) -> int:
    """The unique n-th-power-free integer representing r modulo n-th powers
    of nonzero rationals, for even n.

    Write r = a/b in lowest terms with a, b n-th-power-free (strip n-th
    powers first); then a * b^(n-1) lies in the same coset, and stripping
    its largest n-th-power divisor yields the representative.  Even n keeps
    the sign, since all rational n-th powers are positive.
    """
    if n < 2 or n % 2:
        raise ValueError("n must be an even integer >= 2")
    r = Fraction(r)
    if r == 0:
        raise ValueError("r must be nonzero")
    a = _strip_nth_power(r.numerator, n)
    b = _strip_nth_power(r.denominator, n)
    return _strip_nth_power(a * b ** (n - 1), n)


def _d_bound(fixed: FixedCurve, x: int) -> int:
    """Largest N >= 0 with N^m * height <= x (exact integer certificate)."""
    return integer_kth_root(x // fixed.height, fixed.m)


def count_twist_family(fixed: FixedCurve, x: int) -> int:
    """Number of twists of the fixed curve with naive height <= x:
    twice the count of positive n-free integers up to the D-bound."""
    if x < 1:
        raise ValueError("x must be >= 1")
    return 2 * count_k_free(_d_bound(fixed, x), fixed.n)


def enumerate_twist_family(
    fixed: FixedCurve, x: int, table: CmTable = CM_TABLE
) -> list[TwistClass]:
    """Materialize every twist class of height <= x, in ascending D order.

    Each emitted twist's equation is checked to still have the fixed j
    (redundant by construction; kept as a self-test of the twist formulas).
    Requires the D-bound to be inside the materialized-list regime.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    classes = []
    for d in power_free_list(_d_bound(fixed, x), fixed.n):
        order = cm_order_of(twist_curve(fixed, d), table)
        if order is None or order.j != fixed.j:
            raise AssertionError(
                f"twist D={d} of fixed curve j={fixed.j} lost its j-invariant"
            )
        classes.append(TwistClass(fixed, d))
    return classes


def count_cm_twists(fixed_set: tuple[FixedCurve, ...], x: int) -> EtCounts:
    """Per-j twist-family counts over a full set of thirteen fixed curves."""
    per_j = {fixed.j: count_twist_family(fixed, x) for fixed in fixed_set}
    return EtCounts(x, per_j)


def twist_leading_constant(fixed: FixedCurve):
    """The constant 2 / (zeta(n) * height^(1/m)) in front of x^(1/m) in the
    twist-family count, as a high-precision mpmath value."""
    with mp.workdps(30):
        return 2 / (zeta_even(fixed.n).value * mp.mpf(fixed.height) ** (mp.mpf(1) / fixed.m))


def default_fixed_curves(table: CmTable = CM_TABLE) -> tuple[FixedCurve, ...]:
    """The thirteen compiled-in CM representatives as fixed curves."""
    return tuple(
        FixedCurve.from_coefficients(o.j, o.rep_a, o.rep_b) for o in table
    )


def load_fixed_curves(path: str) -> tuple[FixedCurve, ...]:
    """Fixed-curve overrides from a CSV file with columns j, A, B.

    Every row is validated: the j-invariant of (A, B) must equal j.
    """
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            out.append(
                FixedCurve.from_coefficients(int(row["j"]), int(row["A"]), int(row["B"]))
            )
    return tuple(out)
