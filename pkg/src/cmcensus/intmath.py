"""Exact integer arithmetic kernel.

Everything downstream (curve predicates, census scans, twist counts) reduces
to a handful of multiplicative-number-theory primitives: factorization by
trial division, the Mobius function, divisor counts, k-th-power-free tests
and counts, exact integer k-th roots, and high-precision values of the even
zeta constants that appear in the leading terms.

All bound comparisons are integer predicates (``r**k <= n``), never floored
floating-point roots: the census tables are exact counts and float rounding
at box boundaries would corrupt them.  k-free counting is provided by two
independent methods (a Mobius sum and a direct sieve) so each can serve as
an oracle for the other.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from dataclasses import dataclass

from mpmath import mp

__all__ = [
    "CeilingExceeded",
    "Factorization",
    "ZetaConstant",
    "factorize",
    "mobius",
    "sigma0",
    "divisors",
    "is_k_power_free",
    "integer_kth_root",
    "count_k_free",
    "count_k_free_sieve",
    "power_free_list",
    "primes_up_to",
    "zeta_even",
]

# Direct-marking sieves stay in memory below these; the Mobius sum is the
# production path for anything larger.
SIEVE_CEILING = 10**8
LIST_CEILING = 10**7


class CeilingExceeded(RuntimeError):
    """An operation would exceed its documented resource ceiling."""


# --------------------------------------------------------------------------
# prime cache
# --------------------------------------------------------------------------

_cache_lock = threading.RLock()
_prime_limit = 0
_primes: list[int] = []
_mobius_limit = 0
_mobius: list[int] = []


def _sieve(limit: int) -> list[int]:
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * len(range(start, limit + 1, p))
    return [i for i, v in enumerate(flags) if v]


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, from a cached sieve that regrows geometrically."""
    global _prime_limit, _primes
    if n > _prime_limit:
        with _cache_lock:
            if n > _prime_limit:
                limit = max(n, 2 * _prime_limit, 1 << 10)
                _primes = _sieve(limit)
                _prime_limit = limit
    if n >= _prime_limit:
        return list(_primes)
    return _primes[: bisect_right(_primes, n)]


def _mobius_table(n: int) -> list[int]:
    """mu(0..n) as a list (mu(0) is a placeholder 0)."""
    global _mobius_limit, _mobius
    if n > _mobius_limit:
        limit = max(n, 2 * _mobius_limit, 1 << 10)
        primes = primes_up_to(limit)
        with _cache_lock:
            if n > _mobius_limit:
                mu = [1] * (limit + 1)
                mu[0] = 0
                for p in primes:
                    for m in range(p, limit + 1, p):
                        mu[m] = -mu[m]
                    pp = p * p
                    for m in range(pp, limit + 1, pp):
                        mu[m] = 0
                _mobius = mu
                _mobius_limit = limit
    return _mobius


# --------------------------------------------------------------------------
# factorization and multiplicative functions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes and exponents >= 1; the factorization of 1 is empty.
    """

    value: int
    factors: tuple[tuple[int, int], ...]


def factorize(n: int) -> Factorization:
    """Factor |n| by trial division over the cached prime sieve.

    Rejects n = 0.  Intended operating range |n| <= 2**63, where trial
    division by primes <= sqrt(|n|) is entirely adequate for this artifact.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    m = abs(n)
    factors: list[tuple[int, int]] = []
    for p in primes_up_to(math.isqrt(m)):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        factors.append((m, 1))
    return Factorization(abs(n), tuple(factors))


def mobius(n: int) -> int:
    """Mobius function: 0 if n has a squared prime factor, else (-1)^omega(n)."""
    if n <= 0:
        raise ValueError("mobius is defined for positive integers")
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def sigma0(n: int) -> int:
    """Number of positive divisors of n."""
    if n <= 0:
        raise ValueError("sigma0 is defined for positive integers")
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    if n <= 0:
        raise ValueError("divisors is defined for positive integers")
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def is_k_power_free(n: int, k: int) -> bool:
    """True iff no prime power p**k divides n.  +-1 are k-free for every k."""
    if n == 0:
        raise ValueError("0 is divisible by every power")
    if k < 2:
        raise ValueError("k must be >= 2")
    return all(e < k for _, e in factorize(n).factors)


def integer_kth_root(n: int, k: int) -> int:
    """Exact floor(n**(1/k)) for n >= 0, k >= 1.

    A float seed is refined until the integer certificate
    r**k <= n < (r+1)**k holds, so the result is exact for any n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1 or n == 0:
        return n if k == 1 else 0
    if k == 2:
        return math.isqrt(n)
    try:
        r = int(round(n ** (1.0 / k)))
    except OverflowError:
        r = 1 << (n.bit_length() // k + 1)
    while r > 0 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


# --------------------------------------------------------------------------
# k-free counting: Mobius sum (production) and sieve (oracle)
# --------------------------------------------------------------------------


def count_k_free(x: int, k: int) -> int:
    """Exact number of positive k-free integers <= x, by the Mobius identity

        sum over d <= floor(x**(1/k)) of mu(d) * floor(x / d**k).
    """
    if x < 0:
        raise ValueError("x must be nonnegative")
    if k < 2:
        raise ValueError("k must be >= 2")
    dmax = integer_kth_root(x, k)
    mu = _mobius_table(dmax)
    total = 0
    for d in range(1, dmax + 1):
        m = mu[d]
        if m:
            total += m * (x // d**k)
    return total


def _k_free_flags(x: int, k: int) -> bytearray:
    """flags[n] = 1 iff n is k-free, for 0 <= n <= x (flags[0] unused)."""
    flags = bytearray(b"\x01") * (x + 1)
    if x >= 0:
        flags[0] = 0
    for p in primes_up_to(integer_kth_root(x, k)):
        step = p**k
        flags[step :: step] = b"\x00" * len(range(step, x + 1, step))
    return flags


def count_k_free_sieve(x: int, k: int) -> int:
    """Same contract as :func:`count_k_free`, by direct marking of p**k
    multiples.  Memory-bounded oracle: rejects x above the sieve ceiling."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if k < 2:
        raise ValueError("k must be >= 2")
    if x > SIEVE_CEILING:
        raise CeilingExceeded(f"sieve oracle is limited to x <= {SIEVE_CEILING}")
    if x == 0:
        return 0
    return sum(_k_free_flags(x, k))


def power_free_list(x: int, k: int) -> list[int]:
    """All nonzero d with |d| <= x and d k-free, sorted ascending."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if k < 2:
        raise ValueError("k must be >= 2")
    if x > LIST_CEILING:
        raise CeilingExceeded(f"materialized lists are limited to x <= {LIST_CEILING}")
    if x == 0:
        return []
    flags = _k_free_flags(x, k)
    positive = [n for n in range(1, x + 1) if flags[n]]
    return [-n for n in reversed(positive)] + positive


# --------------------------------------------------------------------------
# even zeta constants
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ZetaConstant:
    """A closed-form even zeta value at >= 30 significant digits."""

    argument: int
    value: object  # mpmath.mpf


_ZETA_DENOMINATOR = {2: 6, 4: 90, 6: 945, 10: 93555}


def zeta_even(k: int) -> ZetaConstant:
    """zeta(k) for k in {2, 4, 6, 10} from the closed forms pi**k / c_k."""
    if k not in _ZETA_DENOMINATOR:
        raise ValueError(f"no closed form wired in for zeta({k})")
    with mp.workdps(40):
        value = mp.pi**k / _ZETA_DENOMINATOR[k]
    return ZetaConstant(k, value)
