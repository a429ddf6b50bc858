"""Segmented enumeration engine behind the count tables and set streams.

Segments are scanned by the kernels in ``_kernels`` (numba or numpy); a
bounded window of segments is dispatched to a thread pool and results are
merged in ascending order, so output is identical for any thread count or
segment size.  Counting supports resumable checkpoints for long runs.
"""

from __future__ import annotations

import json
import os
import tempfile
from collections import deque
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt

import numpy as np

from ._kernels import scan_digit_sets, scan_dividing, scan_korselt
from .errors import DomainError, ResourceError
from .factorint import factorize, primes_upto
from .numbersets import (
    MembershipReport,
    is_carmichael_digit,
    is_primary_carmichael,
    in_S,
    membership_report,
)

DEFAULT_MAX_LIMIT = 10**8
DEFAULT_SEGMENT_SIZE = 10**6
FIRST_OCCURRENCE_MAX_BOUND = 10**14

CHECKPOINT_MAGIC = "carmpoly-count"
CHECKPOINT_VERSION = 1

SET_TAGS = ("S", "C", "Cprime")
SHAPES = ("hexagonal", "octagonal", "twice_pentagonal")


@dataclass(frozen=True)
class CountRow:
    """Cumulative set sizes up to x (a power of 10)."""

    x: int
    c_prime_count: int
    carmichael_count: int
    s_count: int


@dataclass(frozen=True)
class Segment:
    """A scanned range with its smallest-prime-factor table (spf[i] for lo+i)."""

    lo: int
    hi: int
    spf: np.ndarray


def build_segment(lo: int, hi: int) -> Segment:
    """Sieve the smallest prime factor of every integer in [lo, hi), lo >= 2."""
    if lo < 2 or hi <= lo:
        raise DomainError(f"segment needs 2 <= lo < hi, got [{lo}, {hi})")
    spf = np.zeros(hi - lo, dtype=np.int64)
    for p in primes_upto(isqrt(hi - 1)):
        p = int(p)
        sl = spf[(-lo) % p :: p]
        sl[sl == 0] = p
    untouched = spf == 0
    spf[untouched] = np.arange(lo, hi, dtype=np.int64)[untouched]
    return Segment(lo, hi, spf)


def _segment_bounds(
    lo: int, hi: int, segment_size: int, cuts: tuple[int, ...] = ()
) -> list[tuple[int, int]]:
    points = sorted({lo, hi, *(c for c in cuts if lo < c < hi)})
    out = []
    for a, b in zip(points, points[1:]):
        x = a
        while x < b:
            y = min(x + segment_size, b)
            out.append((x, y))
            x = y
    return out


def run_segments(
    kernel: Callable,
    lo: int,
    hi: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
    cuts: tuple[int, ...] = (),
) -> Iterator[tuple[int, int, object]]:
    """Apply a scan kernel over [lo, hi) segment by segment, in order.

    With threads > 1 a sliding window of segments runs concurrently (the
    numba kernels release the GIL); results still arrive in ascending order.
    """
    if hi <= lo:
        return
    if lo < 2:
        raise DomainError(f"scans start at 2, got lo={lo}")
    primes = primes_upto(isqrt(hi - 1))
    segments = _segment_bounds(lo, hi, segment_size, cuts)
    if threads <= 1:
        for a, b in segments:
            yield a, b, kernel(a, b, primes)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        window: deque = deque()
        seg_iter = iter(segments)
        for _ in range(threads + 1):
            try:
                a, b = next(seg_iter)
            except StopIteration:
                break
            window.append((a, b, pool.submit(kernel, a, b, primes)))
        while window:
            a, b, fut = window.popleft()
            result = fut.result()
            try:
                a2, b2 = next(seg_iter)
                window.append((a2, b2, pool.submit(kernel, a2, b2, primes)))
            except StopIteration:
                pass
            yield a, b, result


def _check_limit(limit: int, max_limit: int) -> None:
    if limit > max_limit:
        raise ResourceError(
            f"limit {limit} above configured maximum {max_limit}; "
            "raise max_limit explicitly for extended runs"
        )


def stream_S(
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
    max_limit: int = DEFAULT_MAX_LIMIT,
) -> Iterator[MembershipReport]:
    """All members of the base digit-sum set up to limit, ascending,
    each with full per-prime witnesses."""
    _check_limit(limit, max_limit)
    if limit < 2:
        return
    for lo, _hi, masks in run_segments(
        scan_digit_sets, 2, limit + 1, segment_size=segment_size, threads=threads
    ):
        in_s = masks[0]
        for idx in np.flatnonzero(in_s):
            yield membership_report(int(lo + idx))


def count_sets(
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
    max_limit: int = DEFAULT_MAX_LIMIT,
    checkpoint: str | os.PathLike | None = None,
) -> list[CountRow]:
    """Cumulative set counts at every power of 10 up to limit.

    With ``checkpoint`` set, progress is persisted after each segment and a
    matching interrupted run resumes where it stopped.
    """
    _check_limit(limit, max_limit)
    powers = [10**k for k in range(1, 19) if 10**k <= limit]
    if not powers:
        return []
    state = _load_checkpoint(checkpoint, limit, segment_size) if checkpoint else None
    if state is None:
        start, cum, rows = 2, [0, 0, 0], {}
    else:
        start, cum, rows = state
    if start <= limit:
        cuts = tuple(p + 1 for p in powers)
        for lo, hi, masks in run_segments(
            scan_digit_sets,
            start,
            limit + 1,
            segment_size=segment_size,
            threads=threads,
            cuts=cuts,
        ):
            in_s, in_c, in_cp = masks
            cum[0] += int(in_cp.sum())
            cum[1] += int(in_c.sum())
            cum[2] += int(in_s.sum())
            if hi - 1 in powers:
                rows[hi - 1] = tuple(cum)
            if checkpoint:
                _save_checkpoint(checkpoint, limit, segment_size, hi, cum, rows)
    return [
        CountRow(x, *rows[x])
        for x in powers
        if x in rows
    ]


def _load_checkpoint(path, limit: int, segment_size: int):
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("magic") != CHECKPOINT_MAGIC or data.get("version") != CHECKPOINT_VERSION:
        raise DomainError(f"unrecognized checkpoint file {path}")
    if data["limit"] != limit or data["segment_size"] != segment_size:
        raise DomainError(
            f"checkpoint {path} was written for limit={data['limit']}, "
            f"segment_size={data['segment_size']}; refusing to mix runs"
        )
    rows = {int(k): tuple(v) for k, v in data["rows"].items()}
    return data["next_lo"], list(data["cum"]), rows


def _save_checkpoint(path, limit, segment_size, next_lo, cum, rows) -> None:
    payload = {
        "magic": CHECKPOINT_MAGIC,
        "version": CHECKPOINT_VERSION,
        "limit": limit,
        "segment_size": segment_size,
        "next_lo": next_lo,
        "cum": list(cum),
        "rows": {str(k): list(v) for k, v in rows.items()},
    }
    directory = os.path.dirname(os.fspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def carmichael_route_mismatches(
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
    max_limit: int = DEFAULT_MAX_LIMIT,
) -> list[int]:
    """All m <= limit where the digit-sum route and the divisibility route
    disagree about being a Carmichael number (expected: none).

    The two routes run as independent kernels over the same segments.
    """
    _check_limit(limit, max_limit)
    bad: list[int] = []
    if limit < 2:
        return bad
    korselt_stream = run_segments(
        scan_korselt, 2, limit + 1, segment_size=segment_size, threads=threads
    )
    for (lo, _hi, masks), (_lo2, _hi2, korselt) in zip(
        run_segments(scan_digit_sets, 2, limit + 1, segment_size=segment_size, threads=threads),
        korselt_stream,
    ):
        diff = masks[1] ^ korselt
        bad.extend(int(lo + i) for i in np.flatnonzero(diff))
    return bad


def dividing_fixed_point_mismatches(
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    threads: int = 1,
    max_limit: int = DEFAULT_MAX_LIMIT,
) -> list[int]:
    """All m in [2, limit] violating the three-way equivalence between base-set
    membership, m equalling its own dividing part, and m dividing the
    no-constant-term denominator of index m (expected: none).

    m divides that denominator iff m is squarefree with dividing part m, since
    the primes in the product that do not divide m cannot help; squarefreeness
    is forced by dividing == m because the dividing part divides the radical.
    """
    _check_limit(limit, max_limit)
    bad: list[int] = []
    if limit < 2:
        return bad
    dividing_stream = run_segments(
        scan_dividing, 2, limit + 1, segment_size=segment_size, threads=threads
    )
    for (lo, hi, masks), (_lo2, _hi2, (dividing, sqfree)) in zip(
        run_segments(scan_digit_sets, 2, limit + 1, segment_size=segment_size, threads=threads),
        dividing_stream,
    ):
        m_all = np.arange(lo, hi, dtype=np.int64)
        fixed_point = dividing == m_all
        divides = sqfree & fixed_point
        diff = (masks[0] ^ fixed_point) | (masks[0] ^ divides)
        bad.extend(int(lo + i) for i in np.flatnonzero(diff))
    return bad


_SHAPE_VALUE = {
    "hexagonal": lambda q: q * (2 * q - 1),
    "octagonal": lambda q: q * (3 * q - 2),
    "twice_pentagonal": lambda q: q * (3 * q - 1),
}

_SET_PREDICATE = {
    "S": in_S,
    "C": is_carmichael_digit,
    "Cprime": is_primary_carmichael,
}


def first_occurrence(shape: str, set_tag: str, bound: int) -> int | None:
    """Least member of the tagged set below bound of the given shape with
    index equal to its own greatest prime factor.

    Shape-first search: candidate primes q are enumerated in ascending
    order and the shape value is tested for membership, so the cost is
    O(sqrt(bound)) candidates instead of a whole-set scan.
    """
    if shape not in _SHAPE_VALUE:
        raise DomainError(f"unknown shape {shape!r}")
    if set_tag not in _SET_PREDICATE:
        raise DomainError(f"unknown set tag {set_tag!r}")
    if bound > FIRST_OCCURRENCE_MAX_BOUND:
        raise ResourceError(f"bound {bound} above search maximum {FIRST_OCCURRENCE_MAX_BOUND}")
    value = _SHAPE_VALUE[shape]
    predicate = _SET_PREDICATE[set_tag]
    for q in primes_upto(isqrt(bound) + 2):
        q = int(q)
        m = value(q)
        if m > bound:
            break
        fact = factorize(m)
        if fact.factors[-1][0] == q and predicate(m, fact):
            return m
    return None
