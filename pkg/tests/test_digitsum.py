import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carmpoly import digitsum, factorint
from carmpoly.errors import DomainError

from oracles import digit_sum_naive, digits_lsf, legendre_floor_sum

PRIMES_TO_97 = [int(p) for p in factorint.primes_upto(97)]


def test_expand_561_base_3():
    ex = digitsum.expand(561, 3)
    assert ex.digits == (0, 1, 2, 2, 0, 2)
    assert ex.digit_sum == 7


def test_expand_known_witness():
    assert digitsum.expand(1729, 19).digit_sum == 19


def test_expand_single_digit_when_base_exceeds_n():
    for n, p in ((4, 19), (1, 2), (10, 11)):
        ex = digitsum.expand(n, p)
        assert ex.digits == (n,)
        assert ex.digit_sum == n


def test_expand_zero():
    ex = digitsum.expand(0, 7)
    assert ex.digits == ()
    assert ex.digit_sum == 0


def test_expand_rejects_composite_base():
    with pytest.raises(DomainError):
        digitsum.expand(5, 4)
    with pytest.raises(DomainError):
        digitsum.digit_sum(5, 1)
    with pytest.raises(DomainError):
        digitsum.expand(-1, 3)


def test_digit_sum_examples():
    assert digitsum.digit_sum(231, 11) == 11
    assert digitsum.digit_sum(11102, 61) == 62
    assert digitsum.digit_sum(0, 13) == 0


def test_factorial_valuation_examples():
    assert digitsum.factorial_valuation(4, 19) == 0
    assert digitsum.factorial_valuation(6, 3) == 2  # 6! = 720 = 2^4 * 3^2 * 5
    assert digitsum.factorial_valuation(767, 37) == 20


def test_digit_sum_matches_expand():
    for n in range(0, 2000, 7):
        for p in (2, 3, 5, 13, 97):
            assert digitsum.digit_sum(n, p) == digitsum.expand(n, p).digit_sum


def test_congruence_n_mod_p_minus_1():
    for n in range(1, 10**4 + 1):
        for p in PRIMES_TO_97:
            assert (n - digitsum.digit_sum(n, p)) % (p - 1) == 0


def test_shift_identity_divisors():
    for p in PRIMES_TO_97:
        for m in range(p, 2 * 10**4 + 1, p):
            assert digitsum.digit_sum(m, p) == digitsum.digit_sum(m // p, p)


def test_legendre_matches_floor_sum():
    for n in range(0, 10**4 + 1):
        for p in (2, 3, 5, 7, 11, 37, 97):
            assert digitsum.factorial_valuation(n, p) == legendre_floor_sum(n, p)


def test_digit_sum_one_iff_equal_for_squarefree():
    for n in range(2, 10**4 + 1):
        if not factorint.is_squarefree(n):
            continue
        for p in PRIMES_TO_97:
            assert (digitsum.digit_sum(n, p) == 1) == (n == p)


@given(
    st.integers(min_value=0, max_value=2**62),
    st.sampled_from(PRIMES_TO_97),
)
@settings(max_examples=200, deadline=None)
def test_expand_reconstructs(n, p):
    ex = digitsum.expand(n, p)
    assert list(ex.digits) == digits_lsf(n, p)
    assert sum(d * p**i for i, d in enumerate(ex.digits)) == n
    assert all(0 <= d < p for d in ex.digits)
    if ex.digits:
        assert ex.digits[-1] != 0
    assert ex.digit_sum == digit_sum_naive(n, p)
