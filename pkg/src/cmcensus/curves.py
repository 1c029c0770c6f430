"""Short Weierstrass curve records and their pointwise predicates.

A curve is an integer pair (a, b) standing for y^2 = x^3 + a*x + b.  This
module provides the discriminant, the naive height max(4|a|^3, 27 b^2), the
minimal-model test (no prime p with p^4 | a and p^6 | b), the exact rational
j-invariant, and recognition of complex multiplication by membership of the
j-invariant in the thirteen class-number-one values.

The thirteen CM orders are compiled-in data: discriminant of the imaginary
quadratic field, conductor of the order, the integer j-invariant, and a fixed
short-Weierstrass representative.  The table self-checks on load: the stored
j of every row must equal the j-invariant computed from its representative.

All arithmetic is exact (Python integers / fractions); the documented
operating envelope is naive height <= 10**18, comfortably inside what the
scan and twist machinery ever request.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction

from .intmath import integer_kth_root, primes_up_to

__all__ = [
    "Curve",
    "JValue",
    "CmOrder",
    "CmTable",
    "CM_TABLE",
    "CM_J_VALUES",
    "discriminant",
    "naive_height",
    "is_minimal",
    "j_invariant",
    "cm_order_of",
    "in_family",
    "cm_table_csv",
]


@dataclass(frozen=True)
class Curve:
    """Coefficient pair of y^2 = x^3 + a*x + b.

    No validity constraint is imposed here: singular and non-minimal pairs
    are representable and filtered by the predicates below.
    """

    a: int
    b: int


# Reduced rational j-invariant.  fractions.Fraction already guarantees
# gcd(|numerator|, denominator) = 1 and denominator >= 1.
JValue = Fraction


@dataclass(frozen=True)
class CmOrder:
    """One class-number-one order: field discriminant, conductor, integer
    j-invariant, and its fixed short-Weierstrass representative."""

    d_k: int
    conductor: int
    j: int
    rep_a: int
    rep_b: int

    @property
    def representative(self) -> Curve:
        return Curve(self.rep_a, self.rep_b)


# (d_K, f, j, a, b) for the thirteen orders with trivial class group.
_CM_ROWS = (
    (-3, 1, 0, 0, 1),
    (-3, 2, 54000, -15, 22),
    (-3, 3, -12288000, -120, 506),
    (-4, 1, 1728, 1, 0),
    (-4, 2, 287496, -11, 14),
    (-7, 1, -3375, -35, 98),
    (-7, 2, 16581375, -595, 5586),
    (-8, 1, 8000, -30, 56),
    (-11, 1, -32768, -1056, 13552),
    (-19, 1, -884736, -152, 722),
    (-43, 1, -884736000, -3440, 77658),
    (-67, 1, -147197952000, -29480, 1948226),
    (-163, 1, -262537412640768000, -34790720, -78984748304),
)


def discriminant(curve: Curve) -> int:
    """Exact discriminant -16 (4 a^3 + 27 b^2)."""
    a, b = curve.a, curve.b
    return -16 * (4 * a * a * a + 27 * b * b)


def naive_height(curve: Curve) -> int:
    """Exact naive height max(4|a|^3, 27 b^2); zero only for (0, 0)."""
    a, b = curve.a, curve.b
    return max(4 * abs(a) ** 3, 27 * b * b)


def is_minimal(curve: Curve) -> bool:
    """True iff no prime p satisfies p^4 | a and p^6 | b.

    Every prime divides 0, so a zero coefficient reduces the test to a
    power-free condition on the other one.  Rejects (0, 0).
    """
    a, b = curve.a, curve.b
    if a == 0 and b == 0:
        raise ValueError("(0, 0) is not a curve")
    if a == 0:
        return all(b % p**6 for p in primes_up_to(integer_kth_root(abs(b), 6)))
    if b == 0:
        return all(a % p**4 for p in primes_up_to(integer_kth_root(abs(a), 4)))
    # Only primes with p^4 <= |a| can violate the condition.
    for p in primes_up_to(integer_kth_root(abs(a), 4)):
        if a % p**4 == 0 and b % p**6 == 0:
            return False
    return True


def j_invariant(curve: Curve) -> JValue:
    """The reduced rational 6912 a^3 / (4 a^3 + 27 b^2).

    Rejects singular curves (zero discriminant).
    """
    a, b = curve.a, curve.b
    denom = 4 * a * a * a + 27 * b * b
    if denom == 0:
        raise ValueError(f"curve ({a}, {b}) is singular")
    return Fraction(6912 * a * a * a, denom)


class CmTable:
    """The thirteen CM orders, indexed by integer j-invariant."""

    def __init__(self, orders: tuple[CmOrder, ...]):
        if len(orders) != 13:
            raise ValueError("expected exactly 13 orders")
        self.orders = orders
        self.index = {o.j: o for o in orders}
        if len(self.index) != 13:
            raise ValueError("CM j-invariants are not pairwise distinct")

    @classmethod
    def load(cls) -> "CmTable":
        table = cls(tuple(CmOrder(*row) for row in _CM_ROWS))
        table.self_check()
        return table

    def self_check(self) -> None:
        """Data integrity: each row's stored j equals the j-invariant of its
        representative curve."""
        for order in self.orders:
            j = j_invariant(order.representative)
            if j.denominator != 1 or j.numerator != order.j:
                raise AssertionError(
                    f"CM table row d_K={order.d_k}, f={order.conductor}: "
                    f"representative has j = {j}, table says {order.j}"
                )

    def lookup(self, j: int) -> CmOrder:
        return self.index[j]

    def __iter__(self):
        return iter(self.orders)

    def __len__(self) -> int:
        return 13


CM_TABLE = CmTable.load()

#: The thirteen integer j-invariants with complex multiplication, in table order.
CM_J_VALUES = tuple(order.j for order in CM_TABLE)


def cm_order_of(curve: Curve, table: CmTable = CM_TABLE) -> CmOrder | None:
    """The CM order whose j equals j_invariant(curve), or None.

    Runs in pure integer arithmetic: j is integral iff the denominator
    4 a^3 + 27 b^2 divides 6912 a^3 exactly, and then a dictionary lookup
    settles membership.  Cross-multiplied form, no rationals in the hot loop.
    """
    a, b = curve.a, curve.b
    denom = 4 * a * a * a + 27 * b * b
    if denom == 0:
        raise ValueError(f"curve ({a}, {b}) is singular")
    q, r = divmod(6912 * a * a * a, denom)
    if r:
        return None
    return table.index.get(q)


def in_family(curve: Curve, x: int) -> bool:
    """True iff the curve is nonsingular, minimal, and has height <= x."""
    if curve.a == 0 and curve.b == 0:
        return False
    return (
        discriminant(curve) != 0 and is_minimal(curve) and naive_height(curve) <= x
    )


def cm_table_csv(table: CmTable = CM_TABLE) -> str:
    """The CM table as CSV (columns d_K, f, A, B, j), for documentation."""
    buf = io.StringIO()
    buf.write("d_K,f,A,B,j\n")
    for o in table:
        buf.write(f"{o.d_k},{o.conductor},{o.rep_a},{o.rep_b},{o.j}\n")
    return buf.getvalue()
