"""Polygonal numbers and the digit-sum driven decompositions.

A member m of the base set factors through its greatest prime p: writing
the digit sum as eta*(p-1) + mu, the residue mu (1, 2, or 1 + (p-1)/2)
decides whether m is a rank-r polygonal number with index p, twice one, or
neither, and the rank itself comes from the shifted index and a factorial
valuation.  The rank-3 witnesses behind the sharp prime-size constants are
found by the same machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from .digitsum import digit_sum, factorial_valuation
from .errors import DomainError, RangeError
from .factorint import INT64_LIMIT, Factorization, factorize
from .numbersets import in_S, is_carmichael_digit
from .scan import DEFAULT_MAX_LIMIT, DEFAULT_SEGMENT_SIZE, stream_S

HEXAGONAL = "hexagonal"
OCTAGONAL = "octagonal"
TWICE_PENTAGONAL = "twice_pentagonal"

ALPHA_SET_TAGS = ("S", "C", "Cprime", "S_even")


@dataclass(frozen=True)
class PolygonalForm:
    """m written as d times the p-th polygonal number of rank r.

    ``eta`` and ``mu`` split the digit sum as s_p(m) = eta*(p-1) + mu;
    ``e`` is the rank parity adjustment tied to mu = 1 + (p-1)/2.
    """

    m: int
    d: int
    r: int
    p: int
    ell: int
    eta: int
    mu: int
    e: int

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "d": self.d,
            "r": self.r,
            "p": self.p,
            "ell": self.ell,
            "eta": self.eta,
            "mu": self.mu,
            "e": self.e,
        }


@dataclass(frozen=True)
class AlphaReport:
    """Result of a sharp-constant search over one set family.

    ``alpha`` is 1/sqrt(2 - 1/q) for the hexagonal families and
    1/sqrt(3 - 1/q) for the even (twice-pentagonal) family, exact in the
    pair (family, q); the float is presentation only.  ``empirical_sup``
    is max P(m)/sqrt(m) over all scanned members.
    """

    set_tag: str
    bound: int
    family: str
    found: bool
    q: int | None
    witness: int | None
    alpha: float | None
    empirical_sup: float
    sup_witness: int | None

    def to_json_dict(self) -> dict:
        return {
            "set": self.set_tag,
            "bound": self.bound,
            "family": self.family,
            "found": self.found,
            "q": self.q,
            "witness": self.witness,
            "alpha": self.alpha,
            "empirical_sup": self.empirical_sup,
            "sup_witness": self.sup_witness,
        }


def polygonal(r: int, n: int) -> int:
    """The n-th polygonal number of rank r: (n^2 (r-2) - n (r-4)) / 2."""
    if r < 3:
        raise DomainError(f"rank must be >= 3, got {r}")
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    value = (n * n * (r - 2) - n * (r - 4)) // 2
    if value >= INT64_LIMIT:
        raise RangeError(f"polygonal({r}, {n}) exceeds 64-bit range")
    return value


def _require_member(m: int, fact: Factorization) -> None:
    if not in_S(m, fact):
        raise DomainError(f"{m} is not in the base digit-sum set")


def classify_low_ell(m: int, fact: Factorization | None = None) -> str | None:
    """Shape of a base-set member with shifted index 1 or 2, if any.

    Index 1 forces the hexagonal form, index 2 the octagonal or
    twice-pentagonal form depending on whether the digit sum is exactly p;
    each returned identity is re-verified numerically.
    """
    fact = fact or factorize(m)
    _require_member(m, fact)
    p = fact.factors[-1][0]
    ell = m // (p * p)
    if ell == 1:
        shape, expected = HEXAGONAL, p * (2 * p - 1)
    elif ell == 2:
        if digit_sum(m, p) == p:
            shape, expected = OCTAGONAL, p * (3 * p - 2)
        else:
            shape, expected = TWICE_PENTAGONAL, p * (3 * p - 1)
    else:
        return None
    if m != expected:
        raise ArithmeticError(f"shape identity failed for {m}: expected {expected}")
    return shape


def polygonal_decomposition(m: int, fact: Factorization | None = None) -> PolygonalForm | None:
    """Write a base-set member as d * (rank-r polygonal with index P(m)), if possible.

    The digit-sum residue mu admits exactly three shapes: mu = 1 (d=1, even
    rank), mu = 2 (d=2), and mu = 1 + (p-1)/2 (d=1, odd rank).  Any other
    residue means no such form exists.
    """
    fact = fact or factorize(m)
    _require_member(m, fact)
    p = fact.factors[-1][0]
    ell = m // (p * p)
    s = digit_sum(m, p)
    eta, mu = divmod(s, p - 1)
    if mu == 1:
        d, e = 1, 0
    elif mu == 2:
        d, e = 2, 0
    elif mu == 1 + (p - 1) // 2:
        d, e = 1, 1
    else:
        return None
    r = (2 * (ell + factorial_valuation(ell, p) + eta + d)) // d + e
    if d * polygonal(r, p) != m:
        raise ArithmeticError(f"decomposition identity failed for {m}")
    return PolygonalForm(m=m, d=d, r=r, p=p, ell=ell, eta=eta, mu=mu, e=e)


def carmichael_polygonal(m: int, fact: Factorization | None = None) -> PolygonalForm:
    """Polygonal form of a Carmichael number: every one is polygonal with
    index its greatest prime factor and rank 2*(ell + v_p(ell!) + eta + 1)."""
    fact = fact or factorize(m)
    if not is_carmichael_digit(m, fact):
        raise DomainError(f"{m} is not a Carmichael number")
    p = fact.factors[-1][0]
    ell = m // (p * p)
    eta = (digit_sum(m, p) - 1) // (p - 1)
    r = 2 * (ell + factorial_valuation(ell, p) + eta + 1)
    if polygonal(r, p) != m:
        raise ArithmeticError(f"polygonal identity failed for {m}")
    return PolygonalForm(m=m, d=1, r=r, p=p, ell=ell, eta=eta, mu=1, e=0)


def sharp_alpha(
    set_tag: str,
    search_bound: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
    max_limit: int = DEFAULT_MAX_LIMIT,
) -> AlphaReport:
    """Search the tagged set up to search_bound for its extremal-shape witness.

    For the odd families the witness is the least hexagonal member (shifted
    index 1); for the even family the least twice-pentagonal member.  The
    witness prime q fixes alpha; the report also carries the empirical
    supremum of P(m)/sqrt(m), tracked with exact integer comparisons.
    """
    if set_tag not in ALPHA_SET_TAGS:
        raise DomainError(f"unknown set tag {set_tag!r}")
    if search_bound < 231:
        raise DomainError(f"search bound must be >= 231, got {search_bound}")
    family = TWICE_PENTAGONAL if set_tag == "S_even" else HEXAGONAL
    witness = witness_q = None
    # sup of P(m)/sqrt(m) as the exact pair (P^2, m): a/sqrt(b) < c/sqrt(d)
    # iff a^2 d < c^2 b.
    sup_p2 = 0
    sup_m = 1
    sup_at = None
    for report in stream_S(
        search_bound, segment_size=segment_size, threads=threads, max_limit=max_limit
    ):
        m = report.m
        if set_tag == "C" and not report.in_C:
            continue
        if set_tag == "Cprime" and not report.in_Cprime:
            continue
        if set_tag == "S_even" and m % 2 != 0:
            continue
        p, s, _ = report.per_prime[-1]
        if p * p * sup_m > sup_p2 * m:
            sup_p2, sup_m, sup_at = p * p, m, m
        if witness is None:
            ell = m // (p * p)
            if family == HEXAGONAL and ell == 1 and m == p * (2 * p - 1):
                witness, witness_q = m, p
            elif family == TWICE_PENTAGONAL and ell == 2 and s > p and m == p * (3 * p - 1):
                witness, witness_q = m, p
    emp = sqrt(sup_p2 / sup_m) if sup_at is not None else 0.0
    if witness is None:
        return AlphaReport(set_tag, search_bound, family, False, None, None, None, emp, sup_at)
    denom = 2 * witness_q - 1 if family == HEXAGONAL else 3 * witness_q - 1
    alpha = sqrt(witness_q / denom)
    return AlphaReport(
        set_tag, search_bound, family, True, witness_q, witness, alpha, emp, sup_at
    )
