import pytest

from pfcurves.algebra import is_probable_prime
from pfcurves.families import get_family
from pfcurves.search import (
    SearchError,
    check_seed,
    parse_range,
    search_bits,
    search_seeds,
    seed_interval,
)


def brute_bn_hits(lo, hi):
    out = []
    for u in range(lo, hi + 1):
        p = 36 * u ** 4 + 36 * u ** 3 + 24 * u ** 2 + 6 * u + 1
        r = 36 * u ** 4 + 36 * u ** 3 + 18 * u ** 2 + 6 * u + 1
        if is_probable_prime(p) and is_probable_prime(r):
            out.append(u)
    return out


def test_parse_range():
    assert parse_range("1..10") == (1, 10)
    assert parse_range("-0x10..2^4") == (-16, 16)
    with pytest.raises(SearchError):
        parse_range("5")
    with pytest.raises(SearchError):
        parse_range("9..1")


def test_bn_scan_matches_brute_force():
    hits = search_seeds(get_family("BN"), -300, 300)
    assert [h.u for h in hits] == brute_bn_hits(-300, 300)
    for h in hits:
        assert h.embedding_degree_ok()
        assert pow(h.p, 12, h.r) == 1


def test_count_limit_keeps_order():
    fd = get_family("BN")
    assert [h.u for h in search_seeds(fd, 1, 2000, count=3)] == brute_bn_hits(1, 2000)[:3]


def test_results_do_not_depend_on_workers():
    fd = get_family("BLS12")
    one = [h.u for h in search_seeds(fd, -3000, 3000, workers=1)]
    three = [h.u for h in search_seeds(fd, -3000, 3000, workers=3)]
    assert one and one == three
    a = [h.u for h in search_bits(get_family("BN"), 64, count=4, workers=1, rng_seed=5)]
    b = [h.u for h in search_bits(get_family("BN"), 64, count=4, workers=2, rng_seed=5)]
    assert len(a) == 4 and a == b


def test_search_bits_sizes():
    for inst in search_bits(get_family("BLS12"), 96, count=3, rng_seed=1):
        assert inst.r_bits == 96
        assert is_probable_prime(inst.p) and is_probable_prime(inst.r)


def test_seed_interval_brackets():
    fd = get_family("BN")
    lo, hi = seed_interval(fd, 100)
    r = lambda u: 36 * u ** 4 + 36 * u ** 3 + 18 * u ** 2 + 6 * u + 1
    assert r(lo).bit_length() == r(hi).bit_length() == 100
    assert r(lo - 1).bit_length() == 99 and r(hi + 1).bit_length() == 101


def test_invalid_family_refused():
    with pytest.raises(SearchError):
        search_seeds(get_family("KSS18-printed"), 1, 10)


def test_check_seed_skips_inadmissible():
    fd = get_family("KSS18")
    u = next(u for u in range(1, 50) if not fd.admissible(u))
    assert check_seed(fd, u) is None
    assert check_seed(get_family("BLS12"), 1) is None
