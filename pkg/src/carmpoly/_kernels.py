"""Hot segment-scan kernels: numba-jitted with a pure-numpy fallback.

Each kernel sweeps one half-open segment [lo, hi) (lo >= 2) with one inner
loop per base prime p, p*p < hi.  Multiples of p get p divided out of a
running residual, their base-p digit sum taken, and per-condition masks
updated.  After the prime sweep a residual r > 1 is a prime factor larger
than sqrt(hi) > sqrt(m); such a factor forces s_r(m) = m // r < r, so the
digit-sum conditions fail without ever expanding m in base r.

The numba and numpy implementations are kept structurally parallel and both
importable (``benchmarks/bench_kernels.py`` times them against each other).
``CARMPOLY_NO_NUMBA=1`` (or an unimportable numba) selects the fallback.
"""

from __future__ import annotations

import os

import numpy as np


def _want_numba() -> bool:
    flag = os.environ.get("CARMPOLY_NO_NUMBA", "").strip().lower()
    if flag in {"1", "true", "yes", "on"}:
        return False
    if os.environ.get("NUMBA_DISABLE_JIT", "0") not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _want_numba()


# --- pure-numpy implementations ------------------------------------------------


def scan_digit_sets_np(lo: int, hi: int, primes: np.ndarray):
    """Digit-sum set masks for [lo, hi): (in_S, in_C, in_Cprime)."""
    n = hi - lo
    m_all = np.arange(lo, hi, dtype=np.int64)
    residual = m_all.copy()
    sqfree = np.ones(n, dtype=np.bool_)
    ok_s = np.ones(n, dtype=np.bool_)
    ok_c = np.ones(n, dtype=np.bool_)
    ok_p = np.ones(n, dtype=np.bool_)
    for p in primes:
        p = int(p)
        if p * p >= hi:
            break
        sl = slice((-lo) % p, n, p)
        r = residual[sl] // p
        extra = r % p == 0
        sqfree[sl] &= ~extra
        while extra.any():
            np.floor_divide(r, p, out=r, where=extra)
            extra &= r % p == 0
        residual[sl] = r
        x = m_all[sl].copy()
        s = np.zeros(x.shape[0], dtype=np.int64)
        while x.any():
            s += x % p
            x //= p
        ok_s[sl] &= s >= p
        ok_p[sl] &= s == p
        ok_c[sl] &= (s - 1) % (p - 1) == 0
    big = residual > 1
    ok_s &= ~big
    ok_p &= ~big
    in_s = sqfree & ok_s
    return in_s, in_s & ok_c, sqfree & ok_p


def scan_korselt_np(lo: int, hi: int, primes: np.ndarray) -> np.ndarray:
    """Mask of composite squarefree m in [lo, hi) with p-1 | m-1 for all p | m."""
    n = hi - lo
    m_all = np.arange(lo, hi, dtype=np.int64)
    residual = m_all.copy()
    sqfree = np.ones(n, dtype=np.bool_)
    ok = np.ones(n, dtype=np.bool_)
    nfac = np.zeros(n, dtype=np.int64)
    for p in primes:
        p = int(p)
        if p * p >= hi:
            break
        sl = slice((-lo) % p, n, p)
        r = residual[sl] // p
        extra = r % p == 0
        sqfree[sl] &= ~extra
        while extra.any():
            np.floor_divide(r, p, out=r, where=extra)
            extra &= r % p == 0
        residual[sl] = r
        nfac[sl] += 1
        if p > 2:
            ok[sl] &= (m_all[sl] - 1) % (p - 1) == 0
    big = residual > 1
    nfac += big
    np.logical_and(ok, ~big | ((m_all - 1) % np.where(big, residual - 1, 1) == 0), out=ok)
    return sqfree & ok & (nfac >= 2)


def scan_dividing_np(lo: int, hi: int, primes: np.ndarray):
    """(dividing-part products, squarefree mask) for [lo, hi).

    dividing[i] is the product of primes p | m with s_p(m) >= p; a residual
    prime factor above sqrt(hi) never qualifies, so it is left out.
    """
    n = hi - lo
    m_all = np.arange(lo, hi, dtype=np.int64)
    residual = m_all.copy()
    sqfree = np.ones(n, dtype=np.bool_)
    dividing = np.ones(n, dtype=np.int64)
    for p in primes:
        p = int(p)
        if p * p >= hi:
            break
        sl = slice((-lo) % p, n, p)
        r = residual[sl] // p
        extra = r % p == 0
        sqfree[sl] &= ~extra
        while extra.any():
            np.floor_divide(r, p, out=r, where=extra)
            extra &= r % p == 0
        residual[sl] = r
        x = m_all[sl].copy()
        s = np.zeros(x.shape[0], dtype=np.int64)
        while x.any():
            s += x % p
            x //= p
        d = dividing[sl]
        np.multiply(d, p, out=d, where=s >= p)
    return dividing, sqfree


# --- numba implementations ------------------------------------------------------

if NUMBA_ENABLED:
    import numba

    _jit = numba.njit(cache=True, nogil=True)

    @_jit
    def scan_digit_sets_nb(lo, hi, primes):  # pragma: no cover - compiled
        n = hi - lo
        residual = np.empty(n, np.int64)
        for i in range(n):
            residual[i] = lo + i
        sqfree = np.ones(n, np.bool_)
        ok_s = np.ones(n, np.bool_)
        ok_c = np.ones(n, np.bool_)
        ok_p = np.ones(n, np.bool_)
        for k in range(primes.shape[0]):
            p = primes[k]
            if p * p >= hi:
                break
            start = lo + ((p - lo % p) % p)
            for m in range(start, hi, p):
                i = m - lo
                r = residual[i] // p
                if r % p == 0:
                    sqfree[i] = False
                    while r % p == 0:
                        r //= p
                residual[i] = r
                s = 0
                x = m
                while x > 0:
                    s += x % p
                    x //= p
                if s < p:
                    ok_s[i] = False
                if s != p:
                    ok_p[i] = False
                if (s - 1) % (p - 1) != 0:
                    ok_c[i] = False
        for i in range(n):
            if residual[i] > 1:
                ok_s[i] = False
                ok_p[i] = False
        in_s = sqfree & ok_s
        return in_s, in_s & ok_c, sqfree & ok_p

    @_jit
    def scan_korselt_nb(lo, hi, primes):  # pragma: no cover - compiled
        n = hi - lo
        residual = np.empty(n, np.int64)
        for i in range(n):
            residual[i] = lo + i
        sqfree = np.ones(n, np.bool_)
        ok = np.ones(n, np.bool_)
        nfac = np.zeros(n, np.int64)
        for k in range(primes.shape[0]):
            p = primes[k]
            if p * p >= hi:
                break
            start = lo + ((p - lo % p) % p)
            for m in range(start, hi, p):
                i = m - lo
                r = residual[i] // p
                if r % p == 0:
                    sqfree[i] = False
                    while r % p == 0:
                        r //= p
                residual[i] = r
                nfac[i] += 1
                if p > 2 and (m - 1) % (p - 1) != 0:
                    ok[i] = False
        out = np.empty(n, np.bool_)
        for i in range(n):
            r = residual[i]
            k_i = nfac[i]
            if r > 1:
                k_i += 1
                if (lo + i - 1) % (r - 1) != 0:
                    ok[i] = False
            out[i] = sqfree[i] and ok[i] and k_i >= 2
        return out

    @_jit
    def scan_dividing_nb(lo, hi, primes):  # pragma: no cover - compiled
        n = hi - lo
        residual = np.empty(n, np.int64)
        for i in range(n):
            residual[i] = lo + i
        sqfree = np.ones(n, np.bool_)
        dividing = np.ones(n, np.int64)
        for k in range(primes.shape[0]):
            p = primes[k]
            if p * p >= hi:
                break
            start = lo + ((p - lo % p) % p)
            for m in range(start, hi, p):
                i = m - lo
                r = residual[i] // p
                if r % p == 0:
                    sqfree[i] = False
                    while r % p == 0:
                        r //= p
                residual[i] = r
                s = 0
                x = m
                while x > 0:
                    s += x % p
                    x //= p
                if s >= p:
                    dividing[i] *= p
        return dividing, sqfree

    scan_digit_sets = scan_digit_sets_nb
    scan_korselt = scan_korselt_nb
    scan_dividing = scan_dividing_nb
else:
    scan_digit_sets = scan_digit_sets_np
    scan_korselt = scan_korselt_np
    scan_dividing = scan_dividing_np
