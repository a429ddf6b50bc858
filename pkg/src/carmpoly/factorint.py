"""Exact integer factorization and derived quantities.

Single inputs go through deterministic Miller-Rabin plus Brent's cycle
variant of Pollard rho (no randomness, so results are reproducible), which
comfortably covers the full supported range below 2**63.  Bulk work over a
contiguous range uses a smallest-prime-factor sieve instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .errors import DomainError, RangeError

INT64_LIMIT = 2**63

# Base set proven sufficient for deterministic Miller-Rabin below 2**64.
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """A positive integer with its prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes; the empty tuple represents 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def radical(self) -> int:
        out = 1
        for p, _ in self.factors:
            out *= p
        return out


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of composite n (n odd, not a prime power of 2)."""
    if n % 2 == 0:
        return 2
    # Deterministic parameter sweep; each (x0, c) pair is tried in order.
    for c in range(1, 100):
        y, m_blk, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m_blk, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m_blk
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard rho failed on {n}")  # pragma: no cover


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(m: int) -> Factorization:
    """Complete prime factorization of m, 1 <= m < 2**63.

    factorize(1) carries an empty factor list.
    """
    if not 1 <= m < INT64_LIMIT:
        raise RangeError(f"factorize requires 1 <= m < 2**63, got {m}")
    fs: dict[int, int] = {}
    n = m
    for p in _SMALL_PRIMES:
        while n % p == 0:
            fs[p] = fs.get(p, 0) + 1
            n //= p
    _factor_into(n, fs)
    return Factorization(m, tuple(sorted(fs.items())))


def radical(m: int) -> int:
    """Product of the distinct primes dividing m; radical(1) = 1."""
    return factorize(m).radical()


def is_squarefree(m: int) -> bool:
    """True iff no prime square divides m (vacuously true for 1)."""
    return factorize(m).is_squarefree()


def greatest_prime_factor(m: int) -> int:
    """Largest prime dividing m, with the convention that 1 maps to 1."""
    if m == 1:
        return 1
    return factorize(m).factors[-1][0]


def shifted_index(m: int) -> int:
    """floor(m / q**2) for q the greatest prime factor of m; requires m >= 2."""
    if m < 2:
        raise DomainError(f"shifted index requires m >= 2, got {m}")
    q = greatest_prime_factor(m)
    return m // (q * q)


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (empty for limit < 2)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (spf[0] = 0, spf[1] = 1).

    Backs bulk factorization in tests and range helpers; the enumeration
    kernels stream per-prime instead of materializing tables like this.
    """
    spf = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            sl = spf[p * p :: p]
            sl[sl == np.arange(p * p, limit + 1, p)] = p
    return spf


def factorize_with_spf(m: int, spf: np.ndarray) -> Factorization:
    """Factorization of m by walking a smallest-prime-factor table."""
    if not 1 <= m < spf.shape[0]:
        raise RangeError(f"m={m} outside sieve range {spf.shape[0]}")
    fs = []
    n = m
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        fs.append((p, e))
    return Factorization(m, tuple(fs))
