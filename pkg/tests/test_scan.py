import json

import pytest

from carmpoly import factorint, scan
from carmpoly.errors import DomainError, ResourceError

from oracles import naive_in_S

KNOWN_S_PREFIX = [231, 561, 1001, 1045, 1105, 1122, 1155, 1729, 2002]


def test_stream_small_limits():
    assert [r.m for r in scan.stream_S(100)] == []
    assert [r.m for r in scan.stream_S(300)] == [231]
    assert [r.m for r in scan.stream_S(1000)] == [231, 561]
    assert [r.m for r in scan.stream_S(2002)] == KNOWN_S_PREFIX


def test_stream_matches_naive_oracle():
    got = [r.m for r in scan.stream_S(10**4)]
    want = [m for m in range(2, 10**4 + 1) if naive_in_S(m)]
    assert got == want
    assert len(got) == 57


def test_stream_reports_carry_witnesses():
    reports = {r.m: r for r in scan.stream_S(2002)}
    r = reports[561]
    assert r.in_C and not r.in_Cprime and r.in_S and r.in_SF
    assert r.per_prime == ((3, 7, 1), (11, 11, 1), (17, 17, 1))
    assert r.least_d == 1


def test_counts_match_reference_rows():
    rows = {r.x: (r.c_prime_count, r.carmichael_count, r.s_count)
            for r in scan.count_sets(10**5)}
    assert rows[10**3] == (0, 1, 2)
    assert rows[10**4] == (2, 7, 57)
    assert rows[10**5] == (4, 16, 636)


def test_counts_monotone_and_nested():
    rows = scan.count_sets(10**5)
    for row in rows:
        assert row.c_prime_count <= row.carmichael_count <= row.s_count
    for a, b in zip(rows, rows[1:]):
        assert a.c_prime_count <= b.c_prime_count
        assert a.carmichael_count <= b.carmichael_count
        assert a.s_count <= b.s_count


def test_segment_size_and_thread_independence():
    base = scan.count_sets(2 * 10**5, segment_size=10**6)
    members = [r.m for r in scan.stream_S(2 * 10**5)]
    for seg in (10**4, 10**5):
        assert scan.count_sets(2 * 10**5, segment_size=seg) == base
        assert [r.m for r in scan.stream_S(2 * 10**5, segment_size=seg)] == members
    for threads in (2, 4):
        assert scan.count_sets(2 * 10**5, segment_size=10**4, threads=threads) == base
        assert [
            r.m for r in scan.stream_S(2 * 10**5, segment_size=10**4, threads=threads)
        ] == members


def test_resource_limits():
    with pytest.raises(ResourceError):
        list(scan.stream_S(10**8 + 1))
    with pytest.raises(ResourceError):
        scan.count_sets(10**8 + 1)
    scan.count_sets(10**4, max_limit=10**4)  # explicit ceiling is honored
    with pytest.raises(ResourceError):
        scan.count_sets(10**4 + 1, max_limit=10**4)


def test_checkpoint_roundtrip(tmp_path):
    path = tmp_path / "state.json"
    fresh = scan.count_sets(10**4, segment_size=10**3, checkpoint=path)
    data = json.loads(path.read_text())
    assert data["magic"] == scan.CHECKPOINT_MAGIC
    assert data["version"] == scan.CHECKPOINT_VERSION
    assert data["next_lo"] == 10**4 + 1
    # a second run resumes from the stored state without rescanning
    resumed = scan.count_sets(10**4, segment_size=10**3, checkpoint=path)
    assert resumed == fresh == scan.count_sets(10**4)


def test_checkpoint_resumes_partial_state(tmp_path):
    from math import isqrt

    from carmpoly import _kernels

    path = tmp_path / "state.json"
    full = scan.count_sets(10**4, segment_size=10**3)
    scan.count_sets(10**4, segment_size=10**3, checkpoint=path)
    # rewind the saved state to a mid-run segment and let it re-scan the rest
    data = json.loads(path.read_text())
    in_s, in_c, in_cp = _kernels.scan_digit_sets(
        2, 5001, factorint.primes_upto(isqrt(5000))
    )
    half_rows = scan.count_sets(5 * 10**3, segment_size=10**3)
    data["next_lo"] = 5 * 10**3 + 1
    data["cum"] = [int(in_cp.sum()), int(in_c.sum()), int(in_s.sum())]
    data["rows"] = {
        str(r.x): [r.c_prime_count, r.carmichael_count, r.s_count] for r in half_rows
    }
    path.write_text(json.dumps(data))
    assert scan.count_sets(10**4, segment_size=10**3, checkpoint=path) == full


def test_checkpoint_rejects_mismatched_run(tmp_path):
    path = tmp_path / "state.json"
    scan.count_sets(10**4, segment_size=10**3, checkpoint=path)
    with pytest.raises(DomainError):
        scan.count_sets(2 * 10**4, segment_size=10**3, checkpoint=path)
    path.write_text(json.dumps({"magic": "nope", "version": 1}))
    with pytest.raises(DomainError):
        scan.count_sets(10**4, segment_size=10**3, checkpoint=path)


def test_first_occurrence_examples():
    assert scan.first_occurrence("octagonal", "Cprime", 10**4) == 2821
    assert scan.first_occurrence("hexagonal", "C", 10**3) == 561
    assert scan.first_occurrence("hexagonal", "Cprime", 10**6) is None
    assert scan.first_occurrence("hexagonal", "S", 10**4) == 231
    assert scan.first_occurrence("octagonal", "S", 10**4) == 1045
    assert scan.first_occurrence("twice_pentagonal", "S", 10**5) == 11102


def test_first_occurrence_validation():
    with pytest.raises(DomainError):
        scan.first_occurrence("heptagonal", "S", 10**4)
    with pytest.raises(DomainError):
        scan.first_occurrence("hexagonal", "S_odd", 10**4)
    with pytest.raises(ResourceError):
        scan.first_occurrence("hexagonal", "S", 10**15)


def test_route_mismatch_helpers_empty():
    assert scan.carmichael_route_mismatches(10**5) == []
    assert scan.dividing_fixed_point_mismatches(10**5) == []


@pytest.mark.extended
def test_four_factor_primary_census_1e9():
    # primary members with four prime factors are rare; below 1e9 there are
    # exactly three, the least being 10606681 = 31*43*73*109
    import numpy as np

    from carmpoly import _kernels

    members = []
    for lo, _hi, masks in scan.run_segments(
        _kernels.scan_digit_sets, 2, 10**9 + 1, segment_size=4 * 10**6, threads=4
    ):
        members.extend(int(lo + i) for i in np.flatnonzero(masks[2]))
    four = [m for m in members if len(factorint.factorize(m).factors) == 4]
    assert four == [10606681, 42490801, 65037817]
    assert factorint.factorize(10606681).primes == (31, 43, 73, 109)


def test_build_segment_spf_sampled():
    seg = scan.build_segment(10**5, 10**5 + 2000)
    for off in range(0, 2000, 37):
        m = seg.lo + off
        assert int(seg.spf[off]) == factorint.factorize(m).factors[0][0]
    with pytest.raises(DomainError):
        scan.build_segment(1, 100)
