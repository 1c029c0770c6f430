"""Leading-term evaluators for every displayed count, plus the fixed
rounding conventions used when rendering them next to exact counts.

All constants are evaluated with mpmath at 30 decimal digits; rendering
rounds half-even, either to a number of significant digits (predictions)
or to a number of decimal places (density ratios).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction

from mpmath import mp, mpf

from .intmath import zeta_even
from .twists import FixedCurve, twist_leading_constant

__all__ = [
    "AsymptoticPrediction",
    "curve_count_main_term",
    "cm_count_main_terms",
    "j0_main_term",
    "j1728_main_term",
    "twist_cm_main_terms",
    "prediction",
    "round_sig",
    "round_places",
]

_DPS = 30


@dataclass(frozen=True)
class AsymptoticPrediction:
    """A main-term evaluation for one family at one height bound.

    error_exponent is the exponent of the trailing error term, always
    strictly below the family's leading exponent.
    """

    x: int
    family: str
    main_terms: object  # mpmath.mpf
    error_exponent: Fraction


def curve_count_main_term(x: int):
    """2^(4/3) / (3^(3/2) zeta(10)) * x^(5/6)."""
    with mp.workdps(_DPS):
        c = mpf(2) ** Fraction(4, 3) / (mpf(3) ** Fraction(3, 2) * zeta_even(10).value)
        return c * mpf(x) ** Fraction(5, 6)


def j0_main_term(x: int):
    """2 / (3^(3/2) zeta(6)) * x^(1/2)."""
    with mp.workdps(_DPS):
        c = 2 / (mpf(3) ** Fraction(3, 2) * zeta_even(6).value)
        return c * mpf(x) ** Fraction(1, 2)


def j1728_main_term(x: int):
    """2^(1/3) / zeta(4) * x^(1/3)."""
    with mp.workdps(_DPS):
        c = mpf(2) ** Fraction(1, 3) / zeta_even(4).value
        return c * mpf(x) ** Fraction(1, 3)


def cm_count_main_terms(x: int):
    """Two-term main part of the CM census: the j = 0 and j = 1728 terms."""
    with mp.workdps(_DPS):
        return j0_main_term(x) + j1728_main_term(x)


def twist_cm_main_terms(fixed_set: tuple[FixedCurve, ...], x: int):
    """C(0) x^(1/2) + C(1728) x^(1/3) + (sum of the other C(j)) x^(1/6),
    with each C(j) taken from the active fixed curves."""
    with mp.workdps(_DPS):
        total = mpf(0)
        for fixed in fixed_set:
            total += twist_leading_constant(fixed) * mpf(x) ** Fraction(1, fixed.m)
        return total


_FAMILIES = {
    "e": (curve_count_main_term, Fraction(7, 12)),
    "cm": (cm_count_main_terms, Fraction(1, 6)),
    "j0": (j0_main_term, Fraction(1, 12)),
    "j1728": (j1728_main_term, Fraction(1, 12)),
}


def prediction(
    family: str, x: int, fixed_set: tuple[FixedCurve, ...] | None = None
) -> AsymptoticPrediction:
    """Main-term prediction for a named family at height bound x.

    Families: 'e', 'cm', 'j0', 'j1728', and 'et' (needs the fixed curves).
    """
    if family == "et":
        if fixed_set is None:
            raise ValueError("family 'et' needs a fixed-curve set")
        return AsymptoticPrediction(
            x, "et", twist_cm_main_terms(fixed_set, x), Fraction(1, 12)
        )
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    fn, err = _FAMILIES[family]
    return AsymptoticPrediction(x, family, fn(x), err)


def round_sig(value, digits: int = 6) -> str:
    """Render to ``digits`` significant digits, round-half-even, as a plain
    decimal string (trailing zeros kept, no exponent notation).

    Fractions are rendered through exact decimal division; everything else
    goes through mpmath at working precision.
    """
    if isinstance(value, Fraction):
        dec = Decimal(value.numerator) / Decimal(value.denominator)
    else:
        with mp.workdps(_DPS):
            dec = Decimal(mp.nstr(mpf(value), _DPS - 5, strip_zeros=False))
    quantum = Decimal(1).scaleb(dec.adjusted() - digits + 1)
    return format(dec.quantize(quantum, rounding=ROUND_HALF_EVEN), "f")


def round_places(value, places: int = 5) -> str:
    """Render to a fixed number of decimal places, round-half-even."""
    if isinstance(value, Fraction):
        dec = Decimal(value.numerator) / Decimal(value.denominator)
    else:
        with mp.workdps(_DPS):
            dec = Decimal(mp.nstr(mpf(value), _DPS - 5, strip_zeros=False))
    return format(
        dec.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN), "f"
    )
