#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Both implementations are imported directly (the env-flag selection in
carmpoly._kernels is bypassed) and timed on identical segments.

Usage:
    python benchmarks/bench_kernels.py [--limit 1000000] [--repeat 3]
"""

import argparse
import time
from math import isqrt

from carmpoly import _kernels
from carmpoly.factorint import primes_upto

KERNELS = [
    ("digit-sets", "scan_digit_sets"),
    ("korselt", "scan_korselt"),
    ("dividing-part", "scan_dividing"),
]


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=10**6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    lo, hi = 2, args.limit + 1
    primes = primes_upto(isqrt(hi - 1))
    rows = []
    for label, stem in KERNELS:
        numpy_fn = getattr(_kernels, stem + "_np")
        numba_fn = getattr(_kernels, stem + "_nb", None)
        t_np = best_of(numpy_fn, (lo, hi, primes), args.repeat)
        if numba_fn is not None:
            numba_fn(lo, hi, primes)  # trigger compilation outside the timing
            t_nb = best_of(numba_fn, (lo, hi, primes), args.repeat)
        else:
            t_nb = None
        rows.append((label, t_np, t_nb))

    print(f"segment [2, {args.limit}], best of {args.repeat}")
    print(f"{'kernel':<14} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for label, t_np, t_nb in rows:
        if t_nb is None:
            print(f"{label:<14} {t_np:>9.3f}s {'n/a':>10} {'n/a':>9}")
        else:
            print(f"{label:<14} {t_np:>9.3f}s {t_nb:>9.3f}s {t_np / t_nb:>8.1f}x")
    if any(t_nb is None for _, _, t_nb in rows):
        print("numba unavailable or disabled; only the fallback path was timed")


if __name__ == "__main__":
    main()
