"""Counting machinery over the minimal-model curve family.

The ambient objects are integer pairs (a, b) in the height box
4|a|^3 <= x, 27 b^2 <= x.  This module provides:

  * the closed-form count of nonzero box pairs,
  * the full box scan that classifies every pair as singular / elliptic /
    non-minimal and tallies curves per CM j-invariant (the slow, trusted
    route; parallelizable over contiguous a-chunks),
  * the singular-locus count via its integer parametrization,
  * a Mobius-inversion consistency identity relating the scan to the box
    closed form under the (d^4 a, d^6 b) scaling action,
  * fast per-j counters: k-free counts for j in {0, 1728}, cuspidal-cubic
    point enumeration for every other j.

The scan and the fast counters share no counting code path (sieve-marked
k-free flags vs. Mobius sums, per-pair classification vs. rational
parametrization), so their exact agreement is a meaningful cross-check.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .curves import CM_J_VALUES, CM_TABLE, CmTable, Curve, is_minimal
from .cuspidal import cuspidal_for_j, integral_points
from .intmath import (
    CeilingExceeded,
    _mobius_table,
    count_k_free,
    count_k_free_sieve,
    integer_kth_root,
    primes_up_to,
)

__all__ = [
    "JTally",
    "FamilyCounts",
    "DEFAULT_SCAN_CEILING",
    "count_box_pairs",
    "scale_curve",
    "scan_family",
    "count_singular",
    "mobius_inversion_check",
    "count_with_j",
    "count_cm_fast",
]

# ~10**9 lattice pairs; keeps a full scan tolerable on a desktop.
DEFAULT_SCAN_CEILING = 10**10


@dataclass(frozen=True)
class JTally:
    """Per-j curve counts over the thirteen CM values, plus the rest.

    Merging is componentwise addition: associative, commutative, with the
    all-zeros tally as identity.
    """

    counts: dict[int, int] = field(default_factory=lambda: dict.fromkeys(CM_J_VALUES, 0))
    non_cm: int = 0

    @property
    def cm_total(self) -> int:
        return sum(self.counts.values())

    @property
    def total(self) -> int:
        return self.non_cm + self.cm_total

    def __add__(self, other: "JTally") -> "JTally":
        merged = {j: self.counts[j] + other.counts[j] for j in self.counts}
        return JTally(merged, self.non_cm + other.non_cm)


@dataclass(frozen=True)
class FamilyCounts:
    """Exact tallies of one box scan up to height x.

    box_pairs counts all nonzero lattice pairs in the box; minimal_count the
    minimal ones among them; singular_count / curve_count split the minimal
    pairs by vanishing discriminant, so
    minimal_count = curve_count + singular_count always holds.
    """

    x: int
    box_pairs: int
    minimal_count: int
    singular_count: int
    curve_count: int
    cm_count: int
    tally: JTally


def _a_bound(x: int) -> int:
    """max a >= 0 with 4 a^3 <= x."""
    return integer_kth_root(x // 4, 3)


def _b_bound(x: int) -> int:
    """max b >= 0 with 27 b^2 <= x."""
    return math.isqrt(x // 27)


def count_box_pairs(x: int) -> int:
    """Number of nonzero integer pairs in the height box:
    (2 floor((x/4)^(1/3)) + 1)(2 floor((x/27)^(1/2)) + 1) - 1,
    with both floors taken as exact integer counts."""
    if x < 1:
        raise ValueError("x must be >= 1")
    return (2 * _a_bound(x) + 1) * (2 * _b_bound(x) + 1) - 1


def scale_curve(d: int, curve: Curve) -> Curve:
    """The scaling action (a, b) -> (d^4 a, d^6 b); multiplies height by d^12."""
    if d == 0:
        raise ValueError("d must be nonzero")
    return Curve(d**4 * curve.a, d**6 * curve.b)


# Reduced cuspidal coefficients for the eleven CM j-invariants off {0, 1728}.
_GENERIC_CM_CUBICS = tuple(
    (j, cubic.p, cubic.q)
    for j in CM_J_VALUES
    if j not in (0, 1728)
    for cubic in (cuspidal_for_j(j),)
)


def _scan_columns(x: int, a_lo: int, a_hi: int) -> tuple[int, int, int, dict[int, int]]:
    """Classify every pair with a in [a_lo, a_hi), a != 0, 0 < b <= b_bound.

    Returns (elliptic, singular, non_cm, per-j counts), each already doubled
    for the b -> -b symmetry.  Pure function of its arguments; chunks merge
    by addition in any order.
    """
    b_max = _b_bound(x)
    elliptic = singular = non_cm = 0
    counts = dict.fromkeys(CM_J_VALUES, 0)
    # Largest prime that can ever violate minimality satisfies p^4 <= |a|.
    small_primes = primes_up_to(integer_kth_root(max(abs(a_lo), abs(a_hi)) + 1, 4))
    for a in range(a_lo, a_hi):
        if a == 0:
            continue
        a3 = a * a * a
        bad = [p**6 for p in small_primes if a % p**4 == 0]
        # The one positive b on the singular locus 27 b^2 = -4 a^3, if any.
        b_sing = 0
        if a < 0:
            target, rem = divmod(-4 * a3, 27)
            if rem == 0:
                r = math.isqrt(target)
                if r * r == target:
                    b_sing = r
        # Positive b hitting a CM j-invariant: 27 j b^2 = (6912 - 4j) a^3.
        cm_hits: dict[int, int] = {}
        for j, p_j, q_j in _GENERIC_CM_CUBICS:
            num = p_j * a3
            if num <= 0:
                continue
            y2, rem = divmod(num, q_j)
            if rem:
                continue
            r = math.isqrt(y2)
            if r * r == y2 and 0 < r <= b_max:
                cm_hits[r] = j
        if bad:
            for b in range(1, b_max + 1):
                if any(b % p6 == 0 for p6 in bad):
                    continue
                if b == b_sing:
                    singular += 2
                elif b in cm_hits:
                    elliptic += 2
                    counts[cm_hits[b]] += 2
                else:
                    elliptic += 2
                    non_cm += 2
        else:
            get = cm_hits.get
            for b in range(1, b_max + 1):
                j = get(b)
                if j is not None:
                    elliptic += 2
                    counts[j] += 2
                elif b == b_sing:
                    singular += 2
                else:
                    elliptic += 2
                    non_cm += 2
    return elliptic, singular, non_cm, counts


def _scan_chunk(args: tuple[int, int, int]) -> tuple[int, int, int, dict[int, int]]:
    return _scan_columns(*args)


def scan_family(
    x: int,
    workers: int = 1,
    progress: Callable[[int, tuple[int, int, int, dict[int, int]]], None] | None = None,
    ceiling: int = DEFAULT_SCAN_CEILING,
) -> FamilyCounts:
    """Scan the whole height box and fill every census field exactly.

    The a-interval is partitioned into contiguous chunks processed by
    independent workers; partial tallies merge by addition, so the result is
    identical for any worker count.  ``progress`` is invoked in the parent
    once per finished chunk with (chunk id, partial totals).

    The a = 0 column and b = 0 row contribute sieve-counted k-free totals
    (6th- and 4th-power-free respectively) instead of per-pair factoring.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if x > ceiling:
        raise CeilingExceeded(f"box scan is limited to x <= {ceiling}")
    a_max = _a_bound(x)
    b_max = _b_bound(x)

    elliptic = singular = non_cm = 0
    counts = dict.fromkeys(CM_J_VALUES, 0)

    # Column a = 0: nonsingular, minimal iff b is 6th-power-free, j = 0.
    j0 = 2 * count_k_free_sieve(b_max, 6) if b_max else 0
    counts[0] += j0
    elliptic += j0
    # Row b = 0: nonsingular, minimal iff a is 4th-power-free, j = 1728.
    j1728 = 2 * count_k_free_sieve(a_max, 4) if a_max else 0
    counts[1728] += j1728
    elliptic += j1728

    chunks = _partition(-a_max, a_max + 1, max(1, workers) * 4)
    jobs = [(x, lo, hi) for lo, hi in chunks]
    if workers <= 1 or len(jobs) <= 1:
        results: Iterable = map(_scan_chunk, jobs)
        for done, part in enumerate(results):
            e, s, n, c = part
            elliptic += e
            singular += s
            non_cm += n
            for j, v in c.items():
                counts[j] += v
            if progress is not None:
                progress(done, part)
    else:
        with multiprocessing.Pool(workers) as pool:
            for done, part in enumerate(pool.imap_unordered(_scan_chunk, jobs)):
                e, s, n, c = part
                elliptic += e
                singular += s
                non_cm += n
                for j, v in c.items():
                    counts[j] += v
                if progress is not None:
                    progress(done, part)

    tally = JTally(counts, non_cm)
    return FamilyCounts(
        x=x,
        box_pairs=count_box_pairs(x),
        minimal_count=elliptic + singular,
        singular_count=singular,
        curve_count=elliptic,
        cm_count=tally.cm_total,
        tally=tally,
    )


def _partition(lo: int, hi: int, pieces: int) -> list[tuple[int, int]]:
    """Split [lo, hi) into at most ``pieces`` contiguous nonempty ranges."""
    span = hi - lo
    pieces = max(1, min(pieces, span))
    step = span // pieces
    bounds = [lo + i * step for i in range(pieces)] + [hi]
    return [(bounds[i], bounds[i + 1]) for i in range(pieces)]


def count_singular(x: int) -> int:
    """Number of minimal singular pairs with height <= x.

    Singular pairs with (a, b) != (0, 0) are exactly (-3 w^2, 2 w^3) for
    integer w != 0, of height 108 w^6; each is tested with the standard
    minimality predicate.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    w_max = integer_kth_root(x // 108, 6)
    total = 0
    for w in range(1, w_max + 1):
        if is_minimal(Curve(-3 * w * w, 2 * w**3)):
            total += 2  # w and -w
    return total


def mobius_inversion_check(x: int, workers: int = 1) -> tuple[int, int]:
    """Both sides of the exact identity

        minimal_count(x) = sum over d with d^12 <= x of
                           mu(d) * box_pairs(floor(x / d^12)).

    The left side comes from the box scan, the right from the closed form;
    floors nest exactly because 4 a^3 and 27 b^2 are integers.
    """
    lhs = scan_family(x, workers=workers).minimal_count
    d_max = integer_kth_root(x, 12)
    mu = _mobius_table(d_max)
    rhs = 0
    for d in range(1, d_max + 1):
        if mu[d]:
            rhs += mu[d] * count_box_pairs(x // d**12)
    return lhs, rhs


def count_with_j(j: int | Fraction, x: int) -> int:
    """Exact number of minimal nonsingular pairs with j-invariant j and
    height <= x, without scanning the box.

    j = 0 and j = 1728 reduce to k-free counts of the free coefficient; any
    other rational j reduces to integral points on its cuspidal cubic,
    filtered by the height box and minimality.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if j == 0:
        return 2 * count_k_free(_b_bound(x), 6)
    if j == 1728:
        return 2 * count_k_free(_a_bound(x), 4)
    cubic = cuspidal_for_j(j)
    a_max = _a_bound(x)
    if a_max < 1:
        return 0
    b2_max = x // 27
    total = 0
    for pt in integral_points(cubic, a_max):
        if pt.x == 0 or pt.y * pt.y > b2_max:
            continue
        if is_minimal(Curve(pt.x, pt.y)):
            total += 1
    return total


def count_cm_fast(x: int, table: CmTable = CM_TABLE) -> JTally:
    """Per-j counts over all thirteen CM values via the fast counters."""
    counts = {order.j: count_with_j(order.j, x) for order in table}
    return JTally(counts, 0)
