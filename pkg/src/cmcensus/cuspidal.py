"""Integral points on cuspidal cubics y^2 = (p/q) x^3.

Curves of a fixed j-invariant j outside {0, 1728} correspond to integral
points on one such cubic, so a complete enumerator here gives exact per-j
counts without scanning the whole coefficient box.

Two routes are provided: a parametrization-based enumerator (production) and
a brute scan over x (oracle).  The parametrized route walks rational slopes
t = r/s through the double point at the origin: s^2 must divide q, the slope
bound |t| <= sqrt(|p/q| T) becomes the exact predicate q r^2 <= |p| T s^2,
and every candidate is kept only when both coordinate divisions come out
exact, so correctness does not lean on the tightness of the divisor argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .intmath import CeilingExceeded, divisors, sigma0

__all__ = [
    "CuspidalCurve",
    "IntegralPoint",
    "cuspidal_for_j",
    "integral_points",
    "integral_points_brute",
    "point_count_bound",
    "BRUTE_CEILING",
]

BRUTE_CEILING = 10**7


@dataclass(frozen=True)
class CuspidalCurve:
    """Reduced coefficient p/q (q > 0, gcd(|p|, q) = 1) of y^2 = (p/q) x^3."""

    p: int
    q: int

    def __post_init__(self):
        if self.p == 0:
            raise ValueError("coefficient must be nonzero")
        if self.q <= 0:
            raise ValueError("denominator must be positive")
        if math.gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")


@dataclass(frozen=True, order=True)
class IntegralPoint:
    """Integer solution of q y^2 = p x^3."""

    x: int
    y: int


def cuspidal_for_j(j: int | Fraction) -> CuspidalCurve:
    """The cubic whose integral points carry the curves of j-invariant j.

    A pair (a, b) has j-invariant j exactly when 27 j b^2 = (6912 - 4j) a^3,
    i.e. when (a, b) lies on y^2 = c x^3 with c = 4(1728 - j) / (27 j).
    Rejects j in {0, 1728}, where the cubic degenerates.
    """
    j = Fraction(j)
    if j == 0 or j == 1728:
        raise ValueError(f"j = {j} has no cuspidal model")
    c = Fraction(4 * (1728 - j), 27 * j)
    return CuspidalCurve(c.numerator, c.denominator)


def integral_points(curve: CuspidalCurve, t_bound: int) -> list[IntegralPoint]:
    """All integral points with |x| <= t_bound, sorted by (x, y).

    Always includes the cusp (0, 0).
    """
    if t_bound < 1:
        raise ValueError("t_bound must be >= 1")
    p, q = curve.p, curve.q
    found = {IntegralPoint(0, 0)}
    for s in divisors(q):
        if q % (s * s):
            continue
        # q r^2 <= |p| t_bound s^2  <=>  |t| <= sqrt(|p/q| t_bound)
        r_max = math.isqrt(abs(p) * t_bound * s * s // q)
        ps2 = p * s * s
        ps3 = ps2 * s
        for r in range(1, r_max + 1):
            if math.gcd(r, s) != 1:
                continue
            x, rem = divmod(q * r * r, ps2)
            if rem:
                continue
            y, rem = divmod(q * r * r * r, ps3)
            if rem:
                continue
            found.add(IntegralPoint(x, y))
            found.add(IntegralPoint(x, -y))
    return sorted(found)


def integral_points_brute(curve: CuspidalCurve, t_bound: int) -> list[IntegralPoint]:
    """Oracle: scan x in [-t_bound, t_bound] and test q | p x^3 with a
    square quotient.  Same ordering contract as :func:`integral_points`."""
    if t_bound < 1:
        raise ValueError("t_bound must be >= 1")
    if t_bound > BRUTE_CEILING:
        raise CeilingExceeded(f"brute oracle is limited to t_bound <= {BRUTE_CEILING}")
    p, q = curve.p, curve.q
    points = [IntegralPoint(0, 0)]
    for x in range(-t_bound, t_bound + 1):
        if x == 0:
            continue
        num = p * x * x * x
        y2, rem = divmod(num, q)
        if rem or y2 < 0:
            continue
        y = math.isqrt(y2)
        if y * y == y2:
            points.append(IntegralPoint(x, y))
            points.append(IntegralPoint(x, -y))
    return sorted(points)


def point_count_bound(curve: CuspidalCurve, t_bound: int) -> float:
    """Upper bound 2 sigma0(q) sqrt(|p| q) sqrt(t_bound) on the number of
    integral points with x != 0 and |x| <= t_bound."""
    if t_bound < 1:
        raise ValueError("t_bound must be >= 1")
    return 2.0 * sigma0(curve.q) * math.sqrt(abs(curve.p) * curve.q) * math.sqrt(t_bound)
