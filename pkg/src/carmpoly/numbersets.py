"""Membership predicates for the digit-sum set families.

Two independent Carmichael routes are kept deliberately separate: the
classical squarefree/divisibility criterion, and the digit-sum criterion
that never tests compositeness.  Their agreement over ranges is one of the
main cross-checks of the test suite, so neither may call the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import DomainError
from .factorint import Factorization, factorize
from .digitsum import digit_sum


@dataclass(frozen=True)
class MembershipReport:
    """Everything the predicates know about one number.

    ``per_prime`` holds (p, s_p(m), s_p(m) mod (p-1)) for each prime factor;
    ``least_d`` is the least index d with m in the d-th modular subset,
    defined exactly when m is a member of the base digit-sum set.
    """

    m: int
    in_SF: bool
    in_S: bool
    in_C: bool
    in_Cprime: bool
    per_prime: tuple[tuple[int, int, int], ...]
    lambda_: int
    rho: int
    least_d: int | None

    def to_json_dict(self) -> dict:
        d = {
            "m": self.m,
            "in_SF": self.in_SF,
            "in_S": self.in_S,
            "in_C": self.in_C,
            "in_Cprime": self.in_Cprime,
            "per_prime": [list(t) for t in self.per_prime],
            "lambda": self.lambda_,
            "rho": self.rho,
            "least_d": self.least_d,
        }
        return d


@dataclass(frozen=True)
class KnodelQuery:
    m: int
    d: int
    in_K: bool
    in_K_superset: bool


def _digit_profile(fact: Factorization) -> tuple[tuple[int, int, int], ...]:
    m = fact.value
    out = []
    for p in fact.primes:
        s = digit_sum(m, p)
        out.append((p, s, s % (p - 1)))
    return tuple(out)


def in_S(m: int, fact: Factorization | None = None) -> bool:
    """Squarefree m > 1 whose every prime factor p has s_p(m) >= p."""
    fact = fact or factorize(m)
    if m <= 1 or not fact.is_squarefree():
        return False
    return all(digit_sum(m, p) >= p for p in fact.primes)


def is_carmichael_korselt(m: int, fact: Factorization | None = None) -> bool:
    """Composite squarefree m with p - 1 | m - 1 for every prime factor p."""
    fact = fact or factorize(m)
    if m <= 1 or not fact.is_squarefree() or len(fact.factors) < 2:
        return False
    return all((m - 1) % (p - 1) == 0 for p in fact.primes)


def is_carmichael_digit(m: int, fact: Factorization | None = None) -> bool:
    """Digit-sum route: squarefree m > 1 with s_p(m) >= p and
    s_p(m) = 1 mod p - 1 for every prime factor p.

    No compositeness test; the digit conditions alone exclude primes
    (a prime p has s_p(p) = 1 < p).
    """
    fact = fact or factorize(m)
    if m <= 1 or not fact.is_squarefree():
        return False
    for p in fact.primes:
        s = digit_sum(m, p)
        if s < p or (s - 1) % (p - 1) != 0:
            return False
    return True


def is_primary_carmichael(m: int, fact: Factorization | None = None) -> bool:
    """Squarefree m > 1 with s_p(m) exactly p for every prime factor p."""
    fact = fact or factorize(m)
    if m <= 1 or not fact.is_squarefree():
        return False
    return all(digit_sum(m, p) == p for p in fact.primes)


def in_S_d(m: int, d: int, fact: Factorization | None = None) -> bool:
    """Member of the base set whose digit sums are all = d mod p - 1."""
    if d < 1:
        raise DomainError(f"index d must be >= 1, got {d}")
    fact = fact or factorize(m)
    if not in_S(m, fact):
        return False
    return all((digit_sum(m, p) - d) % (p - 1) == 0 for p in fact.primes)


def carmichael_lambda(m: int, fact: Factorization | None = None) -> int:
    """Exponent of the multiplicative group mod m."""
    fact = fact or factorize(m)
    out = 1
    for p, e in fact.factors:
        if p == 2 and e >= 3:
            lam = 1 << (e - 2)
        else:
            lam = (p - 1) * p ** (e - 1)
        out = lcm(out, lam)
    return out


def rho(m: int, fact: Factorization | None = None) -> int:
    """Least positive residue of m mod lambda(m), with rho(1) = 0 and rho(2) = 1."""
    if m == 1:
        return 0
    if m == 2:
        return 1
    lam = carmichael_lambda(m, fact)
    r = m % lam
    return r if r else lam


def least_modular_index(m: int) -> int:
    """Least d >= 1 placing m in the d-th modular subset, by direct upward scan.

    Verification-only counterpart of rho(); the scan is bounded by
    lambda(m) < m but is far slower than the congruence route.
    """
    fact = factorize(m)
    if not in_S(m, fact):
        raise DomainError(f"{m} is not in the base digit-sum set")
    profile = [(p, digit_sum(m, p)) for p in fact.primes]
    d = 1
    while True:
        if all((s - d) % (p - 1) == 0 for p, s in profile):
            return d
        d += 1


def is_knodel(m: int, d: int) -> KnodelQuery:
    """Membership of m in the d-Knodel set and its superset.

    Fast path: a^(m-d) = 1 mod m for all a coprime to m iff lambda(m)
    divides m - d.  The superset drops the m > d restriction; the strict
    set additionally requires m > d.
    """
    if m <= 1:
        raise DomainError(f"Knodel membership needs m > 1, got {m}")
    if d < 1:
        raise DomainError(f"index d must be >= 1, got {d}")
    fact = factorize(m)
    composite = len(fact.factors) > 1 or fact.factors[0][1] > 1
    in_superset = composite and (m - d) % carmichael_lambda(m, fact) == 0
    return KnodelQuery(m, d, in_superset and m > d, in_superset)


def is_knodel_bruteforce(m: int, d: int) -> bool:
    """Literal d-Knodel test: every a coprime to m has a^(m-d) = 1 mod m.

    O(m) modular powers per query with early exit; oracle use only,
    sensible up to m around 1e5.
    """
    fact = factorize(m)
    composite = m > 1 and (len(fact.factors) > 1 or fact.factors[0][1] > 1)
    if not composite or m <= d:
        return False
    return all(pow(a, m - d, m) == 1 for a in range(2, m) if gcd(a, m) == 1)


def membership_report(m: int, fact: Factorization | None = None) -> MembershipReport:
    """Assemble the full per-number record used by streams and the CLI."""
    if m < 1:
        raise DomainError(f"report requires m >= 1, got {m}")
    fact = fact or factorize(m)
    member_S = in_S(m, fact)
    rho_m = rho(m, fact)
    return MembershipReport(
        m=m,
        in_SF=m > 1 and fact.is_squarefree(),
        in_S=member_S,
        in_C=is_carmichael_digit(m, fact),
        in_Cprime=is_primary_carmichael(m, fact),
        per_prime=_digit_profile(fact),
        lambda_=carmichael_lambda(m, fact),
        rho=rho_m,
        least_d=rho_m if member_S else None,
    )
