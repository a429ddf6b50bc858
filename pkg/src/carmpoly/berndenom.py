"""Denominators of Bernoulli numbers and polynomials.

Three denominators are tracked for each index n: the Bernoulli number
denominator (von Staudt-Clausen product), the denominator of the polynomial
with its constant term removed (a product over primes with large base-p
digit sum), and the full polynomial denominator, which factors as a triple
product over the primes of n+1 split by divisibility and digit-sum size.

An exact-rational construction of the polynomials doubles as an independent
oracle for all of the closed formulas; it is deliberately capped because
Bernoulli numerators grow super-exponentially.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt, lcm

import numpy as np

from .errors import DomainError, ResourceError
from .factorint import factorize, primes_upto

DEFAULT_ORACLE_BOUND = 60


@dataclass(frozen=True)
class DenominatorParts:
    """The three coprime parts attached to an index n.

    ``dividing``       product of primes p | n with s_p(n) >= p
    ``non_dividing``   product of primes p with p not | n, p <= n, s_p(n) >= p
    ``complementary``  product of primes p | n with s_p(n) < p

    dividing * non_dividing is the no-constant-term polynomial denominator of
    index n, and dividing * complementary is the radical of n.
    """

    n: int
    dividing: int
    non_dividing: int
    complementary: int

    @property
    def poly_no_const(self) -> int:
        return self.dividing * self.non_dividing

    @property
    def radical(self) -> int:
        return self.dividing * self.complementary

    def triple_product(self) -> int:
        return self.dividing * self.non_dividing * self.complementary


def _sp(n: int, p: int) -> int:
    # digit sum for a base already known to be prime
    s = 0
    while n:
        s += n % p
        n //= p
    return s


_primes_lock = threading.Lock()
_primes_arr = primes_upto(1 << 10)


def _primes_leq(n: int) -> np.ndarray:
    """Shared ascending prime table, grown on demand."""
    global _primes_arr
    if _primes_arr.size == 0 or _primes_arr[-1] < n:
        with _primes_lock:
            if _primes_arr.size == 0 or _primes_arr[-1] < n:
                _primes_arr = primes_upto(max(2 * n, 1 << 10))
    return _primes_arr[: int(np.searchsorted(_primes_arr, n, side="right"))]


def _check_index(n: int) -> None:
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")


def denom_bernoulli_number(n: int) -> int:
    """Denominator of the nth Bernoulli number (von Staudt-Clausen)."""
    _check_index(n)
    if n == 1:
        return 2
    if n % 2 == 1:
        return 1
    out = 1
    for p in _primes_leq(n + 1):
        if n % (int(p) - 1) == 0:
            out *= int(p)
    return out


def denom_poly_no_const(n: int) -> int:
    """Denominator of the nth Bernoulli polynomial minus its constant term.

    Equals the product of all primes p with s_p(n) >= p; primes above n
    never qualify since s_p(n) = n there.
    """
    _check_index(n)
    out = 1
    for p in _primes_leq(n):
        p = int(p)
        if _sp(n, p) >= p:
            out *= p
    return out


def denominator_parts(n: int) -> DenominatorParts:
    """Split the primes up to n into the three denominator parts of index n."""
    _check_index(n)
    dividing = complementary = 1
    for p, _ in factorize(n).factors:
        if _sp(n, p) >= p:
            dividing *= p
        else:
            complementary *= p
    non_dividing = 1
    for p in _primes_leq(n):
        p = int(p)
        if n % p != 0 and _sp(n, p) >= p:
            non_dividing *= p
    return DenominatorParts(n, dividing, non_dividing, complementary)


def denom_poly(n: int) -> int:
    """Denominator of the nth Bernoulli polynomial, via the triple product
    over the parts of n+1 (the cheapest route: one factorization, one prime scan)."""
    _check_index(n)
    return denominator_parts(n + 1).triple_product()


# --- exact-rational oracle ---------------------------------------------------

_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli_number_exact(k: int) -> Fraction:
    """kth Bernoulli number (B_1 = -1/2 convention) from the binomial recurrence."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if k >= len(_bern):
        with _bern_lock:
            while len(_bern) <= k:
                j = len(_bern)
                acc = sum(comb(j + 1, i) * _bern[i] for i in range(j))
                _bern.append(Fraction(-acc, j + 1))
    return _bern[k]


def bernoulli_polynomial_exact(
    n: int, oracle_bound: int = DEFAULT_ORACLE_BOUND
) -> list[Fraction]:
    """Exact coefficients of the nth Bernoulli polynomial, ascending powers.

    Independent oracle for the denominator formulas; capped at
    ``oracle_bound`` to keep numerators desk-sized.
    """
    _check_index(n)
    if n > oracle_bound:
        raise ResourceError(f"oracle index {n} above bound {oracle_bound}")
    return [comb(n, j) * bernoulli_number_exact(n - j) for j in range(n + 1)]


def oracle_denominators(n: int, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> tuple[int, int, int]:
    """(number, no-constant-term, full polynomial) denominators of index n,
    all extracted from the exact-rational polynomial."""
    coeffs = bernoulli_polynomial_exact(n, oracle_bound)
    d_number = coeffs[0].denominator
    d_no_const = lcm(*(c.denominator for c in coeffs[1:]))
    d_poly = lcm(d_no_const, d_number)
    return d_number, d_no_const, d_poly


# --- bulk range helpers -------------------------------------------------------


def _digit_sum_vector(limit: int, p: int) -> np.ndarray:
    """s_p(n) for n in [0, limit] as one vectorized pass."""
    x = np.arange(limit + 1, dtype=np.int64)
    s = np.zeros(limit + 1, dtype=np.int64)
    while x.any():
        s += x % p
        x //= p
    return s


def parts_range(limit: int) -> list[DenominatorParts]:
    """DenominatorParts for every n in [1, limit], one per-prime pass over the range.

    Primes up to sqrt(limit) go through vectorized digit sums.  A prime p
    above sqrt(limit) sees only two-digit expansions n = a1*p + a0, so its
    multiples (a0 = 0, digit sum a1 < p) are all complementary and the
    qualifying non-multiples (a0 + a1 >= p) form explicit runs
    [(a1+1)*p - a1, (a1+1)*p - 1] that are enumerated directly.

    Products are carried as Python ints; the non-dividing part in particular
    outgrows 64 bits well below limit = 5000.
    """
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    dividing = [1] * (limit + 1)
    non_dividing = [1] * (limit + 1)
    complementary = [1] * (limit + 1)
    sq = isqrt(limit)
    for p in _primes_leq(limit):
        p = int(p)
        if p <= sq:
            s = _digit_sum_vector(limit, p)
            qual = s >= p
            multiple = np.arange(limit + 1) % p == 0
            for i in np.flatnonzero(qual & multiple):
                dividing[i] *= p
            for i in np.flatnonzero(qual & ~multiple):
                non_dividing[i] *= p
            comp_idx = np.flatnonzero(~qual & multiple)
            for i in comp_idx[comp_idx >= 1]:
                complementary[i] *= p
        else:
            for n in range(p, limit + 1, p):
                complementary[n] *= p
            for a1 in range(1, limit // p + 1):
                hi = min((a1 + 1) * p - 1, limit)
                for n in range((a1 + 1) * p - a1, hi + 1):
                    non_dividing[n] *= p
    return [
        DenominatorParts(i, dividing[i], non_dividing[i], complementary[i])
        for i in range(1, limit + 1)
    ]


def denom_bernoulli_number_range(limit: int) -> list[int]:
    """Von Staudt-Clausen denominators for n in [1, limit]."""
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    out = [1] * (limit + 1)
    out[1] = 2
    for p in _primes_leq(limit + 1):
        p = int(p)
        step = p - 1 if p > 2 else 2  # p = 2 divides every even index
        for n in range(step, limit + 1, step):
            if n % 2 == 0:
                out[n] *= p
    return out[1:]
