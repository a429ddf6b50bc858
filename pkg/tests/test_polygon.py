import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carmpoly import digitsum, factorint, polygon
from carmpoly.errors import DomainError, RangeError

from oracles import rgonal_index


def test_polygonal_examples():
    assert polygon.polygonal(6, 11) == 231
    assert polygon.polygonal(12, 19) == 1729
    for r in (3, 5, 8, 40):
        assert polygon.polygonal(r, 1) == 1
        assert polygon.polygonal(r, 2) == r


def test_polygonal_validation():
    with pytest.raises(DomainError):
        polygon.polygonal(2, 5)
    with pytest.raises(DomainError):
        polygon.polygonal(6, 0)
    with pytest.raises(RangeError):
        polygon.polygonal(2**40, 2**30)


def test_hexagonal_triangular_identity():
    for n in range(1, 1001):
        assert polygon.polygonal(6, n) == polygon.polygonal(3, 2 * n - 1)


def test_strictly_increasing_in_rank():
    for n in (3, 5, 17):
        values = [polygon.polygonal(r, n) for r in range(3, 60)]
        assert all(a < b for a, b in zip(values, values[1:]))


def test_polygonal_matches_scan_oracle():
    for r in (5, 6, 8, 12):
        for n in (3, 7, 19, 31):
            assert rgonal_index(polygon.polygonal(r, n), r) == n


def test_classify_examples():
    assert polygon.classify_low_ell(561) == polygon.HEXAGONAL
    assert polygon.classify_low_ell(2465) == polygon.OCTAGONAL
    assert polygon.classify_low_ell(11102) == polygon.TWICE_PENTAGONAL
    assert polygon.classify_low_ell(1105) is None  # shifted index 3
    with pytest.raises(DomainError):
        polygon.classify_low_ell(105)


def test_decomposition_examples():
    form = polygon.polygonal_decomposition(1105)
    assert (form.d, form.r, form.p) == (1, 10, 17)
    assert polygon.polygonal_decomposition(2145) is None
    form = polygon.polygonal_decomposition(3570)
    assert (form.d, form.r, form.p) == (2, 15, 17)
    with pytest.raises(DomainError):
        polygon.polygonal_decomposition(12)


def test_2145_sits_between_consecutive_ranks():
    assert polygon.polygonal(29, 13) == 2119 < 2145 < 2197 == polygon.polygonal(30, 13)


def test_carmichael_polygonal_examples():
    form = polygon.carmichael_polygonal(6601)
    assert (form.r, form.p) == (10, 41)
    form = polygon.carmichael_polygonal(1729)
    assert (form.r, form.eta) == (12, 1)
    form = polygon.carmichael_polygonal(1050985)
    assert (form.r, form.p, form.eta) == (1580, 37, 2)
    with pytest.raises(DomainError):
        polygon.carmichael_polygonal(231)  # in the base set but not Carmichael
    with pytest.raises(DomainError):
        polygon.carmichael_polygonal(100)


def test_pentagonal_hexagonal_octagonal_digit_sums():
    # s_p of the p-th hexagonal/octagonal number is p; twice-pentagonal gives p+1
    for p in factorint.primes_upto(500):
        p = int(p)
        if p == 2:
            continue
        assert digitsum.digit_sum(polygon.polygonal(6, p), p) == p
        assert digitsum.digit_sum(polygon.polygonal(8, p), p) == p
        assert digitsum.digit_sum(2 * polygon.polygonal(5, p), p) == p + 1


def test_decomposition_roundtrip_and_low_ell(s_reports_1e4):
    for report in s_reports_1e4:
        m = report.m
        p, s, _ = report.per_prime[-1]
        ell = m // (p * p)
        assert ell >= 1
        shape = polygon.classify_low_ell(m)
        if ell == 1:
            assert shape == polygon.HEXAGONAL and m == p * (2 * p - 1)
        elif ell == 2:
            want = polygon.OCTAGONAL if s == p else polygon.TWICE_PENTAGONAL
            assert shape == want
        else:
            assert shape is None
        form = polygon.polygonal_decomposition(m)
        if form is not None:
            assert form.d * polygon.polygonal(form.r, form.p) == m
            assert form.eta >= 1 and 0 <= form.mu < p - 1
            assert s == form.eta * (p - 1) + form.mu
            assert (form.d, form.e) in ((1, 0), (1, 1), (2, 0))
        if shape is not None:
            # low shifted index forms agree with the general decomposition
            assert form is not None
            expect_d = 2 if shape == polygon.TWICE_PENTAGONAL else 1
            expect_r = {polygon.HEXAGONAL: 6, polygon.OCTAGONAL: 8,
                        polygon.TWICE_PENTAGONAL: 5}[shape]
            assert (form.d, form.r) == (expect_d, expect_r)


def test_carmichael_eta_one_for_primary(s_reports_1e4):
    for report in s_reports_1e4:
        if report.in_Cprime:
            assert polygon.carmichael_polygonal(report.m).eta == 1


def test_decomposition_roundtrip_to_1e6(s_reports_1e6):
    for report in s_reports_1e6:
        m = report.m
        p = report.per_prime[-1][0]
        ell = m // (p * p)
        assert ell >= 1
        form = polygon.polygonal_decomposition(m)
        if form is not None:
            assert form.d * polygon.polygonal(form.r, form.p) == m
        shape = polygon.classify_low_ell(m)
        assert (shape == polygon.HEXAGONAL) == (ell == 1) == (m == p * (2 * p - 1))
        if ell == 2:
            s = report.per_prime[-1][1]
            assert shape == (polygon.OCTAGONAL if s == p else polygon.TWICE_PENTAGONAL)
            assert m == (p * (3 * p - 2) if s == p else p * (3 * p - 1))
        if ell > 2:
            assert shape is None


def test_sharp_alpha_examples():
    rep = polygon.sharp_alpha("S", 10**4)
    assert (rep.q, rep.witness) == (11, 231)
    assert abs(rep.alpha - 0.7237) < 1e-4
    rep = polygon.sharp_alpha("C", 10**4)
    assert (rep.q, rep.witness) == (17, 561)
    assert abs(rep.alpha - 0.7177) < 1e-4
    rep = polygon.sharp_alpha("S_even", 10**5)
    assert (rep.q, rep.witness) == (61, 11102)
    assert abs(rep.alpha - 0.5789) < 1e-4
    assert rep.family == polygon.TWICE_PENTAGONAL


def test_sharp_alpha_not_found_carries_sup():
    rep = polygon.sharp_alpha("Cprime", 10**5)
    assert not rep.found
    assert rep.alpha is None and rep.q is None
    assert rep.empirical_sup > 0.5
    with pytest.raises(DomainError):
        polygon.sharp_alpha("S", 100)
    with pytest.raises(DomainError):
        polygon.sharp_alpha("X", 10**4)


@given(st.integers(min_value=3, max_value=10**4), st.integers(min_value=3, max_value=10**4))
@settings(max_examples=100, deadline=None)
def test_polygonal_formula_random(r, n):
    value = polygon.polygonal(r, n)
    assert 2 * value == n * n * (r - 2) - n * (r - 4)
