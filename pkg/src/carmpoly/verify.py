"""End-to-end reproduction checks behind ``carmpoly verify``.

Each check regenerates a published-style value (count tables, denominator
sequences, witness rows, sharp constants) from scratch and compares against
the frozen expectation.  Profiles escalate bounds only: ``quick`` runs in
seconds, ``full`` in minutes, ``extended`` adds the opt-in 1e8+ scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable

from . import berndenom, numbersets, polygon, scan
from .config import RunConfig
from .digitsum import digit_sum, factorial_valuation
from .factorint import factorize, factorize_with_spf, primes_upto, spf_sieve

PROFILES = ("quick", "full", "extended")

# frozen reproduction targets ---------------------------------------------------

SEQ_NUMBER_DENOMS = (2, 6, 1, 30, 1, 42, 1, 30, 1, 66)
SEQ_NO_CONST_DENOMS = (1, 1, 2, 1, 6, 2, 6, 3, 10, 2)
SEQ_POLY_DENOMS = (2, 6, 2, 30, 6, 42, 6, 30, 10, 66)

COUNT_ROWS = {
    10**3: (0, 1, 2),
    10**4: (2, 7, 57),
    10**5: (4, 16, 636),
    10**6: (9, 43, 7048),
    10**7: (19, 105, 75150),
}
COUNT_ROWS_EXTENDED = {
    10**8: (51, 255, 801931),
    10**9: (107, 646, 8350039),
}

RHO_LAMBDA_WITNESSES = {
    231: (21, 30),
    561: (1, 80),
    1001: (41, 60),
    1045: (145, 180),
    1105: (1, 48),
    1122: (2, 80),
    1155: (15, 60),
    1729: (1, 36),
    2002: (22, 60),
}

# (m, tag, p, s_p(m), ell, shape); the first ten low-shifted-index members
LOW_ELL_ROWS = (
    (231, "S", 11, 11, 1, polygon.HEXAGONAL),
    (561, "C", 17, 17, 1, polygon.HEXAGONAL),
    (1045, "S", 19, 19, 2, polygon.OCTAGONAL),
    (2465, "C", 29, 29, 2, polygon.OCTAGONAL),
    (2821, "Cprime", 31, 31, 2, polygon.OCTAGONAL),
    (3655, "S", 43, 43, 1, polygon.HEXAGONAL),
    (5565, "S", 53, 53, 1, polygon.HEXAGONAL),
    (8911, "C", 67, 67, 1, polygon.HEXAGONAL),
    (10585, "C", 73, 73, 1, polygon.HEXAGONAL),
    (11102, "S", 61, 62, 2, polygon.TWICE_PENTAGONAL),
)

# (m, tag, p, s_p(m), ell, d, r); decomposable members below 7000 with ell >= 3
DECOMPOSITION_ROWS = (
    (1105, "C", 17, 17, 3, 1, 10),
    (1122, "S", 17, 18, 3, 2, 6),
    (1729, "Cprime", 19, 19, 4, 1, 12),
    (3458, "S", 19, 20, 9, 2, 12),
    (3570, "S", 17, 18, 12, 2, 15),
    (5005, "S", 13, 13, 29, 1, 66),
    (5642, "S", 31, 32, 5, 2, 8),
    (6118, "S", 23, 24, 11, 2, 14),
    (6545, "S", 17, 17, 22, 1, 50),
    (6601, "C", 41, 41, 3, 1, 10),
    (6734, "S", 37, 38, 4, 2, 7),
)

FIRST_OCCURRENCES = (
    (polygon.HEXAGONAL, "S", 10**4, 231),
    (polygon.HEXAGONAL, "C", 10**3, 561),
    (polygon.HEXAGONAL, "Cprime", 10**6, None),
    (polygon.OCTAGONAL, "S", 10**4, 1045),
    (polygon.OCTAGONAL, "C", 10**4, 2465),
    (polygon.OCTAGONAL, "Cprime", 10**4, 2821),
    (polygon.TWICE_PENTAGONAL, "S", 10**5, 11102),
)

ALPHA_TARGETS = (
    ("S", 10**4, 11, 231, 0.7237),
    ("C", 10**4, 17, 561, 0.7177),
    ("S_even", 10**5, 61, 11102, 0.5789),
)

BIG_HEXAGONAL_WITNESS = 8801128801  # 181 * 733 * 66337
ETA_TWO_WITNESS = 1050985  # 5 * 13 * 19 * 23 * 37


def _tag_of(report) -> str:
    if report.in_Cprime:
        return "Cprime"
    if report.in_C:
        return "C"
    return "S"


def low_ell_table(max_rows: int, bound: int, cfg: RunConfig) -> list[tuple]:
    """First members with shifted index 1 or 2, as (m, tag, p, s_p, ell, shape)."""
    rows = []
    for report in scan.stream_S(
        bound, segment_size=cfg.segment_size, threads=cfg.threads, max_limit=cfg.max_limit
    ):
        p, s, _ = report.per_prime[-1]
        ell = report.m // (p * p)
        if ell > 2:
            continue
        shape = polygon.classify_low_ell(report.m)
        rows.append((report.m, _tag_of(report), p, s, ell, shape))
        if len(rows) == max_rows:
            break
    return rows


def decomposition_table(bound: int, cfg: RunConfig) -> list[tuple]:
    """Decomposable members below bound with shifted index >= 3,
    as (m, tag, p, s_p, ell, d, r)."""
    rows = []
    for report in scan.stream_S(
        bound, segment_size=cfg.segment_size, threads=cfg.threads, max_limit=cfg.max_limit
    ):
        p, s, _ = report.per_prime[-1]
        if report.m // (p * p) < 3:
            continue
        form = polygon.polygonal_decomposition(report.m)
        if form is None:
            continue
        rows.append((report.m, _tag_of(report), p, s, form.ell, form.d, form.r))
    return rows


# --- checks --------------------------------------------------------------------


def _check_counts(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        limit = levels[profile]
        rows = {
            r.x: (r.c_prime_count, r.carmichael_count, r.s_count)
            for r in scan.count_sets(
                limit,
                segment_size=cfg.segment_size,
                threads=cfg.threads,
                max_limit=max(cfg.max_limit, limit),
            )
        }
        expected = {**COUNT_ROWS, **COUNT_ROWS_EXTENDED}
        for x, want in expected.items():
            if x > limit:
                continue
            if rows.get(x) != want:
                return False, f"counts at {x}: {rows.get(x)} != {want}"
        return True, f"rows at powers of 10 up to {limit} all match"

    return run


def _check_route_equivalence(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        limit = levels[profile]
        bad = scan.carmichael_route_mismatches(
            limit, segment_size=cfg.segment_size, threads=cfg.threads, max_limit=cfg.max_limit
        )
        if bad:
            return False, f"routes disagree at {bad[:5]}"
        return True, f"digit route == divisibility route on [2, {limit}]"

    return run


def _check_denominator_sequences(profile: str, cfg: RunConfig):
    got_d = tuple(berndenom.denom_bernoulli_number(n) for n in range(1, 11))
    got_dd = tuple(berndenom.denom_poly_no_const(n) for n in range(1, 11))
    got_db = tuple(berndenom.denom_poly(n) for n in range(1, 11))
    ok = (
        got_d == SEQ_NUMBER_DENOMS
        and got_dd == SEQ_NO_CONST_DENOMS
        and got_db == SEQ_POLY_DENOMS
    )
    return ok, f"first ten terms of the three denominator sequences: {got_d}, {got_dd}, {got_db}"


def _check_denominator_oracle(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        top = min(levels[profile], cfg.oracle_bound)
        for n in range(1, top + 1):
            want = (
                berndenom.denom_bernoulli_number(n),
                berndenom.denom_poly_no_const(n),
                berndenom.denom_poly(n),
            )
            got = berndenom.oracle_denominators(n, cfg.oracle_bound)
            if got != want:
                return False, f"n={n}: formulas {want} != exact-rational {got}"
        return True, f"formulas agree with exact-rational polynomials for n in [1, {top}]"

    return run


def _check_triple_product(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        top = levels[profile]
        parts = berndenom.parts_range(top + 1)
        dd = [p.poly_no_const for p in parts]  # dd[i] = value at index i+1
        d = berndenom.denom_bernoulli_number_range(top)
        for n in range(1, top + 1):
            triple = parts[n].triple_product()  # parts[n] has index n+1
            via_number = lcm(dd[n - 1], d[n - 1])
            via_radical = lcm(dd[n], parts[n].radical)
            if not triple == via_number == via_radical:
                return False, f"n={n}: {triple}, {via_number}, {via_radical} differ"
        return True, f"three routes for the polynomial denominator agree on [1, {top}]"

    return run


def _check_squarefree_divisibility(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        top = levels[profile]
        parts = berndenom.parts_range(top)
        spf = spf_sieve(top)
        for m in range(2, top + 1):
            literal = parts[m - 1].triple_product() % m == 0  # index m, i.e. denom of m-1
            squarefree = factorize_with_spf(m, spf).is_squarefree()
            if literal != squarefree:
                return False, f"m={m}: divisibility {literal} vs squarefree {squarefree}"
        return True, f"m squarefree iff m divides the polynomial denominator of m-1, m <= {top}"

    return run


def _check_dividing_fixed_points(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        limit = levels[profile]
        bad = scan.dividing_fixed_point_mismatches(
            limit, segment_size=cfg.segment_size, threads=cfg.threads, max_limit=cfg.max_limit
        )
        if bad:
            return False, f"equivalence fails at {bad[:5]}"
        spot = berndenom.denominator_parts(198).non_dividing
        if spot != 2465:
            return False, f"non-dividing part of 198 is {spot}, expected 2465"
        return True, f"membership == dividing-part fixed point on [2, {limit}]; part(198) spot ok"

    return run


def _check_rho_lambda(profile: str, cfg: RunConfig):
    for m, (want_rho, want_lam) in RHO_LAMBDA_WITNESSES.items():
        got = (numbersets.rho(m), numbersets.carmichael_lambda(m))
        if got != (want_rho, want_lam):
            return False, f"m={m}: (rho, lambda) = {got}, expected {(want_rho, want_lam)}"
    return True, f"all {len(RHO_LAMBDA_WITNESSES)} witness columns match"


def _check_low_ell_rows(profile: str, cfg: RunConfig):
    rows = tuple(low_ell_table(len(LOW_ELL_ROWS), 12000, cfg))
    if rows != LOW_ELL_ROWS:
        return False, f"regenerated rows differ: {rows}"
    return True, f"first {len(LOW_ELL_ROWS)} low-shifted-index rows regenerate exactly"


def _check_decomposition_rows(profile: str, cfg: RunConfig):
    rows = tuple(decomposition_table(6999, cfg))
    if rows != DECOMPOSITION_ROWS:
        return False, f"regenerated rows differ: {rows}"
    return True, f"all {len(DECOMPOSITION_ROWS)} decomposition rows below 7000 regenerate exactly"


def _check_first_occurrences(profile: str, cfg: RunConfig):
    for shape, tag, bound, want in FIRST_OCCURRENCES:
        got = scan.first_occurrence(shape, tag, bound)
        if got != want:
            return False, f"first {shape} in {tag} below {bound}: {got} != {want}"
    return True, f"all {len(FIRST_OCCURRENCES)} first-occurrence searches match"


def _check_alpha(levels: dict[str, int | None]):
    def run(profile: str, cfg: RunConfig):
        sup_bound = levels[profile]
        for tag, bound, want_q, want_witness, want_alpha in ALPHA_TARGETS:
            rep = polygon.sharp_alpha(
                tag, bound, segment_size=cfg.segment_size, threads=cfg.threads,
                max_limit=cfg.max_limit,
            )
            if not rep.found or rep.q != want_q or rep.witness != want_witness:
                return False, f"{tag}: witness (q={rep.q}, m={rep.witness})"
            if abs(rep.alpha - want_alpha) >= 1e-4:
                return False, f"{tag}: alpha {rep.alpha:.6f} vs {want_alpha}"
            if rep.empirical_sup > rep.alpha + 1e-12:
                return False, f"{tag}: empirical sup {rep.empirical_sup} exceeds alpha"
        if sup_bound:
            # exact whole-range bound: p^2 * (2q-1) <= q * m (3q-1 for the even family)
            for tag, _bound, q, _w, _a in ALPHA_TARGETS:
                denom = 3 * q - 1 if tag == "S_even" else 2 * q - 1
                for report in scan.stream_S(
                    sup_bound,
                    segment_size=cfg.segment_size,
                    threads=cfg.threads,
                    max_limit=cfg.max_limit,
                ):
                    m = report.m
                    if tag == "C" and not report.in_C:
                        continue
                    if tag == "S_even" and m % 2 != 0:
                        continue
                    p = report.per_prime[-1][0]
                    if p * p * denom > q * m:
                        return False, f"{tag}: bound violated at m={m}"
        return True, "sharp constants, witnesses, and supremum bounds all match"

    return run


def _check_carmichael_polygonal(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        limit = levels[profile]
        n = 0
        for report in scan.stream_S(
            limit, segment_size=cfg.segment_size, threads=cfg.threads, max_limit=cfg.max_limit
        ):
            if not report.in_C:
                continue
            form = polygon.carmichael_polygonal(report.m)
            if polygon.polygonal(form.r, form.p) != report.m:
                return False, f"reconstruction failed for {report.m}"
            n += 1
        form = polygon.carmichael_polygonal(ETA_TWO_WITNESS)
        if (form.r, form.p, form.eta) != (1580, 37, 2):
            return False, f"spot value: got (r={form.r}, p={form.p}, eta={form.eta})"
        return True, f"every Carmichael number up to {limit} is polygonal ({n} of them); spot ok"

    return run


def _check_digit_identities(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        top = levels[profile]
        small_primes = [int(p) for p in primes_upto(97)]
        for n in range(1, top + 1):
            for p in small_primes:
                if (n - digit_sum(n, p)) % (p - 1) != 0:
                    return False, f"congruence fails at n={n}, p={p}"
        for p in small_primes:
            for m in range(p, top + 1, p):
                if digit_sum(m, p) != digit_sum(m // p, p):
                    return False, f"shift identity fails at m={m}, p={p}"
        return True, f"digit congruence and shift identity hold up to {top}"

    return run


def _check_legendre(profile: str, cfg: RunConfig):
    for p in (int(q) for q in primes_upto(97)):
        for n in range(0, 10**4 + 1, 7):
            s, q, total = digit_sum(n, p), p, 0
            while q <= n:
                total += n // q
                q *= p
            if (n - s) % (p - 1) != 0 or factorial_valuation(n, p) != total:
                return False, f"valuation mismatch at n={n}, p={p}"
    return True, "factorial valuation equals the floor-sum form on the sampled grid"


def _check_knodel(levels: dict[str, tuple[int, int]]):
    def run(profile: str, cfg: RunConfig):
        top, dmax = levels[profile]
        checked = 0
        for m in range(4, top + 1):
            fact = factorize(m)
            if len(fact.factors) == 1 and fact.factors[0][1] == 1:
                continue
            for d in range(1, dmax + 1):
                fast = numbersets.is_knodel(m, d).in_K
                slow = numbersets.is_knodel_bruteforce(m, d)
                if fast != slow:
                    return False, f"fast path disagrees with oracle at (m={m}, d={d})"
                checked += 1
        return True, f"fast path == brute-force oracle on {checked} composite queries"

    return run


def _check_modular_cover(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        limit = levels[profile]
        n = 0
        for report in scan.stream_S(
            limit, segment_size=cfg.segment_size, threads=cfg.threads, max_limit=cfg.max_limit
        ):
            m, lam, r = report.m, report.lambda_, report.rho
            if r % 2 != m % 2:
                return False, f"parity fails at m={m}"
            if not (1 <= r < lam):
                return False, f"rho out of range at m={m}"
            for j in (0, 1, 2):
                if not numbersets.in_S_d(m, r + j * lam):
                    return False, f"cover fails at m={m}, j={j}"
            if not numbersets.is_knodel(m, r).in_K_superset:
                return False, f"superset containment fails at m={m}"
            n += 1
        return True, f"parity, cover, and superset containment hold for all {n} members <= {limit}"

    return run


def _check_factor_bounds(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        limit = levels[profile]
        for report in scan.stream_S(
            limit, segment_size=cfg.segment_size, threads=cfg.threads, max_limit=cfg.max_limit
        ):
            m = report.m
            k = len(report.per_prime)
            p = report.per_prime[-1][0]
            if p * p >= m:
                return False, f"prime bound fails at m={m}"
            if k < (4 if m % 2 == 0 else 3):
                return False, f"factor count fails at m={m} (k={k})"
        return True, f"prime-size and factor-count bounds hold for all members <= {limit}"

    return run


def _check_factorization_roundtrip(levels: dict[str, int]):
    def run(profile: str, cfg: RunConfig):
        top = levels[profile]
        spf = spf_sieve(top)
        for m in range(2, top + 1):
            fact = factorize(m)
            value = 1
            for p, e in fact.factors:
                value *= p**e
            if value != m or fact != factorize_with_spf(m, spf):
                return False, f"factorization mismatch at m={m}"
        return True, f"factorize reconstructs and matches the sieve route on [2, {top}]"

    return run


def _check_extended_witness(profile: str, cfg: RunConfig):
    m = BIG_HEXAGONAL_WITNESS
    fact = factorize(m)
    if fact.primes != (181, 733, 66337):
        return False, f"factorization of {m} came out as {fact.primes}"
    if not numbersets.is_primary_carmichael(m, fact):
        return False, f"{m} not recognized as primary"
    if polygon.polygonal(6, 66337) != m:
        return False, "hexagonal identity failed"
    found = scan.first_occurrence(polygon.HEXAGONAL, "Cprime", 10**10)
    if found != m:
        return False, f"shape-first search returned {found}"
    alpha = (66337 / (2 * 66337 - 1)) ** 0.5
    if abs(alpha - 0.7071) >= 1e-4:
        return False, f"alpha for the primary family came out as {alpha:.6f}"
    return True, f"{m} = 181*733*66337 is the least hexagonal primary witness; alpha ~ 0.7071"


CHECKS: list[tuple[str, tuple[str, ...], Callable]] = [
    ("set-counts", PROFILES, _check_counts({"quick": 10**4, "full": 10**7, "extended": 10**9})),
    (
        "carmichael-route-equivalence",
        PROFILES,
        _check_route_equivalence({"quick": 10**5, "full": 10**6, "extended": 10**6}),
    ),
    ("denominator-sequences", PROFILES, _check_denominator_sequences),
    (
        "denominator-oracle",
        PROFILES,
        _check_denominator_oracle({"quick": 30, "full": 60, "extended": 60}),
    ),
    (
        "triple-product-routes",
        PROFILES,
        _check_triple_product({"quick": 500, "full": 5000, "extended": 5000}),
    ),
    (
        "squarefree-divisibility",
        PROFILES,
        _check_squarefree_divisibility({"quick": 2000, "full": 10**4, "extended": 10**4}),
    ),
    (
        "dividing-part-fixed-points",
        PROFILES,
        _check_dividing_fixed_points({"quick": 10**4, "full": 10**6, "extended": 10**6}),
    ),
    ("rho-lambda-witnesses", PROFILES, _check_rho_lambda),
    ("low-shifted-index-rows", PROFILES, _check_low_ell_rows),
    ("decomposition-rows", PROFILES, _check_decomposition_rows),
    ("first-occurrence-shapes", PROFILES, _check_first_occurrences),
    (
        "sharp-constants",
        PROFILES,
        _check_alpha({"quick": None, "full": 10**6, "extended": 10**6}),
    ),
    (
        "carmichael-polygonal-totality",
        PROFILES,
        _check_carmichael_polygonal({"quick": 10**5, "full": 10**6, "extended": 10**6}),
    ),
    (
        "digit-identities",
        PROFILES,
        _check_digit_identities({"quick": 2 * 10**4, "full": 10**5, "extended": 10**5}),
    ),
    ("legendre-valuation", PROFILES, _check_legendre),
    (
        "knodel-fast-path",
        PROFILES,
        _check_knodel({"quick": (600, 6), "full": (5000, 10), "extended": (5000, 10)}),
    ),
    (
        "modular-parity-cover",
        PROFILES,
        _check_modular_cover({"quick": 10**5, "full": 10**6, "extended": 10**6}),
    ),
    (
        "factor-bounds",
        PROFILES,
        _check_factor_bounds({"quick": 10**5, "full": 10**6, "extended": 10**6}),
    ),
    (
        "factorization-roundtrip",
        PROFILES,
        _check_factorization_roundtrip({"quick": 2 * 10**4, "full": 10**6, "extended": 10**6}),
    ),
    ("large-hexagonal-witness", ("extended",), _check_extended_witness),
]


@dataclass
class VerifyResult:
    profile: str
    passed: int
    failed: list[str]

    @property
    def ok(self) -> bool:
        return not self.failed


def run_profile(profile: str, cfg: RunConfig, emit=print) -> VerifyResult:
    """Run all checks of a profile, emitting one pass/fail line per check."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    passed, failed = 0, []
    for name, profiles, fn in CHECKS:
        if profile not in profiles:
            continue
        ok, detail = fn(profile, cfg)
        emit(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        if ok:
            passed += 1
        else:
            failed.append(name)
    emit(f"{passed} passed, {len(failed)} failed ({profile} profile)")
    return VerifyResult(profile, passed, failed)
