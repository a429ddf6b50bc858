"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive and shares no code path with the
library: trial division instead of Miller-Rabin/rho, literal Fermat and
coprime-power tests instead of lambda divisibility, Akiyama-Tanigawa
instead of the binomial recurrence, and scan-based polygonal recognition.
"""

from fractions import Fraction
from math import gcd, isqrt


def trial_factorize(m: int) -> list[tuple[int, int]]:
    fs = []
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            fs.append((d, e))
        d += 1
    if m > 1:
        fs.append((m, 1))
    return fs


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def digits_lsf(n: int, p: int) -> list[int]:
    out = []
    while n:
        n, r = divmod(n, p)
        out.append(r)
    return out


def digit_sum_naive(n: int, p: int) -> int:
    return sum(digits_lsf(n, p))


def naive_squarefree(m: int) -> bool:
    return all(e == 1 for _, e in trial_factorize(m))


def naive_in_S(m: int) -> bool:
    if m <= 1 or not naive_squarefree(m):
        return False
    return all(digit_sum_naive(m, p) >= p for p, _ in trial_factorize(m))


def naive_in_C(m: int) -> bool:
    if not naive_in_S(m):
        return False
    return all(
        (digit_sum_naive(m, p) - 1) % (p - 1) == 0 for p, _ in trial_factorize(m)
    )


def naive_in_Cprime(m: int) -> bool:
    if m <= 1 or not naive_squarefree(m):
        return False
    return all(digit_sum_naive(m, p) == p for p, _ in trial_factorize(m))


def fermat_carmichael(m: int) -> bool:
    """Literal definition: composite m with a^(m-1) = 1 mod m for all coprime a."""
    fs = trial_factorize(m)
    if m <= 3 or (len(fs) == 1 and fs[0][1] == 1):
        return False
    return all(pow(a, m - 1, m) == 1 for a in range(2, m) if gcd(a, m) == 1)


def naive_knodel(m: int, d: int) -> bool:
    fs = trial_factorize(m)
    if m <= 1 or (len(fs) == 1 and fs[0][1] == 1) or m <= d:
        return False
    return all(pow(a, m - d, m) == 1 for a in range(2, m) if gcd(a, m) == 1)


def group_exponent(m: int) -> int:
    """Exponent of the unit group mod m by direct order computation."""
    exp = 1
    for a in range(1, m):
        if gcd(a, m) != 1:
            continue
        x, order = a % m, 1
        while x != 1:
            x = x * a % m
            order += 1
        exp = exp * order // gcd(exp, order)
    return exp


def bernoulli_akiyama_tanigawa(count: int) -> list[Fraction]:
    """B_0..B_count via the Akiyama-Tanigawa triangle, flipped to B_1 = -1/2."""
    row = [Fraction(0)] * (count + 1)
    out = []
    for m in range(count + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if count >= 1:
        out[1] = -out[1]
    return out


def legendre_floor_sum(n: int, p: int) -> int:
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


def rgonal_index(m: int, r: int) -> int | None:
    """The n with the n-th rank-r polygonal number equal to m, by scanning."""
    n = 1
    while True:
        value = (n * n * (r - 2) - n * (r - 4)) // 2
        if value == m:
            return n
        if value > m:
            return None
        n += 1
