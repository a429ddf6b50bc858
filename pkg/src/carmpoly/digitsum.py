"""Base-p digit expansions, digit sums, and the factorial valuation they induce."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .factorint import is_prime


@dataclass(frozen=True)
class DigitExpansion:
    """Canonical base-p expansion of n, digits stored least-significant-first.

    The empty digit list represents n = 0.
    """

    n: int
    p: int
    digits: tuple[int, ...]
    digit_sum: int


def _check_base(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"base must be prime, got {p}")


def expand(n: int, p: int) -> DigitExpansion:
    """Base-p expansion of n >= 0 for prime p."""
    _check_base(p)
    if n < 0:
        raise DomainError(f"expand requires n >= 0, got {n}")
    digits = []
    x = n
    while x:
        digits.append(x % p)
        x //= p
    return DigitExpansion(n, p, tuple(digits), sum(digits))


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n.

    Accumulates remainders directly; this is the innermost scalar operation
    of most predicates, so no digit list is materialized.
    """
    _check_base(p)
    if n < 0:
        raise DomainError(f"digit_sum requires n >= 0, got {n}")
    s = 0
    while n:
        s += n % p
        n //= p
    return s


def factorial_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n!, computed as (n - digit_sum(n, p)) / (p - 1)."""
    return (n - digit_sum(n, p)) // (p - 1)
