import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pfcurves.algebra import X, cyclotomic, is_probable_prime, poly_divides
from pfcurves.construct import (
    ConstructionError,
    PellInstance,
    cocks_pinch,
    cvd_rho_bound,
    cvd_to_fixed_d,
    drylo_cvd,
    brezing_weng,
    mnt_search,
    pell_exhaustive,
    pell_fundamental,
    pell_solve,
    primitive_roots_of_unity,
    random_cp_prime,
    scott_barreto_candidates,
    scott_barreto_pell,
)
from pfcurves.families import get_family, validate_family
from pfcurves.pairing import embedding_degree


def test_cocks_pinch_properties():
    rng = random.Random(2024)
    good = 0
    for i in range(20):
        k = 4 if i % 2 else 6
        r = random_cp_prime(64, k, 3, rng)
        res = cocks_pinch(k, 3, r, rng)
        assert is_probable_prime(res.p)
        assert pow(res.p, k, res.r) == 1
        assert embedding_degree(res.r, res.p) == k
        assert 4 * res.p - res.t ** 2 == 3 * res.y ** 2
        assert (res.p + 1 - res.t) % res.r == 0
        good += 1.8 <= res.rho <= 2.2
    assert good >= 18


def test_primitive_roots():
    r = 13
    roots = primitive_roots_of_unity(4, r)
    assert sorted(roots) == sorted(z for z in range(1, r) if pow(z, 4, r) == 1
                                   and pow(z, 2, r) != 1)
    with pytest.raises(ConstructionError):
        cocks_pinch(5, 3, 13)


def test_brezing_weng_odd_k_closed_form():
    k = 5
    fd = brezing_weng(k, 1, cyclotomic(4 * k))
    closed = (X ** (2 * k + 4) + 2 * X ** (2 * k + 2) + X ** (2 * k)
              + X ** 4 - 2 * X ** 2 + 1) / 4
    rep = validate_family(fd)
    assert rep.status == "valid"
    # the constructed family may use -zeta; compare after fixing the sign of x
    assert fd.p == closed or fd.p == closed.compose(-X)
    assert fd.t == 1 - X ** 2
    assert fd.rho == Fraction(fd.p.degree, fd.r.degree) == Fraction(7, 4)
    assert poly_divides(fd.r, cyclotomic(k).compose(fd.t - 1))[0]


def test_brezing_weng_rejects_bad_root():
    with pytest.raises(ConstructionError):
        brezing_weng(5, 1, cyclotomic(20), zeta=X)


def test_drylo_cvd9():
    r = get_family("CVD9").r
    assert r == cyclotomic(9).compose(3 * X)
    zeta = (3 * X) % r
    # sqrt(-3) = 2*zeta^3 + 1 and sqrt(zeta) = zeta^5, so z^2 = -zeta/3 = -x
    z = ((2 * zeta ** 3 + 1) * zeta ** 5 / 3) % r
    fd = drylo_cvd(9, r, zeta, z)
    assert 4 * fd.p - fd.t ** 2 == X * fd.y ** 2
    assert validate_family(fd).status == "valid"
    assert fd.rho == Fraction(2 * r.degree - 1, r.degree) == Fraction(11, 6)
    got, bound = cvd_rho_bound(fd)
    assert got == bound
    with pytest.raises(ConstructionError):
        drylo_cvd(9, r, zeta, zeta)


def test_cvd_to_fixed_d():
    fixed = cvd_to_fixed_d(get_family("CVD9"), 3)
    assert fixed.D == 3
    assert validate_family(fixed).status == "valid"
    assert poly_divides(fixed.r, cyclotomic(9).compose(fixed.t - 1))[0]


@pytest.mark.parametrize("d", [2, 3, 5, 7, 13, 61])
def test_pell_fundamental(d):
    x, y = pell_fundamental(d)
    assert x * x - d * y * y == 1
    # least solution: no smaller y works
    if y < 10 ** 5:
        assert all(math.isqrt(d * w * w + 1) ** 2 != d * w * w + 1 for w in range(1, y))


def test_pell_rejects_square():
    with pytest.raises(ConstructionError):
        PellInstance(9, 1)
    with pytest.raises(ConstructionError):
        pell_fundamental(16)


def test_pell_matches_exhaustive_small():
    for d in (2, 3, 5, 6, 7, 10, 11, 13):
        for n in range(-10, 11):
            got = [s.pair() for s in pell_solve(PellInstance(d, n), 2000)]
            assert got == pell_exhaustive(d, n, 2000), (d, n)


@settings(max_examples=30, deadline=None)
@given(st.integers(21, 200), st.integers(-60, 60))
def test_pell_random_instances(d, n):
    if math.isqrt(d) ** 2 == d:
        return
    got = [s.pair() for s in pell_solve(PellInstance(d, n), 3000)]
    assert got == pell_exhaustive(d, n, 3000)


def test_pell_chains():
    assert [s.pair() for s in pell_solve(PellInstance(2, 1), 100)] == [(3, 2), (17, 12), (99, 70)]
    assert pell_fundamental(3) == (2, 1)
    assert [s.pair() for s in pell_solve(PellInstance(2, -1), 50)] == [(1, 1), (7, 5), (41, 29)]


def test_scott_barreto_k4_shape():
    inst = scott_barreto_pell(4)
    # 3x^2 + 2x + 3 = y^2  <=>  (3x + 1)^2 - 3y^2 = -8
    assert (inst.d_coeff, inst.n_rhs) == (3, -8)


def test_scott_barreto_transform():
    inst = scott_barreto_pell(6, 1, 1, 2)
    sols = pell_solve(inst, 10 ** 6)
    cands = scott_barreto_candidates(inst, sols)
    assert cands
    for x, t, r, p, y in cands:
        assert r == x * x - x + 1
        assert p == r + t - 1
        assert 4 * p - t * t == 2 * y * y
    with pytest.raises(ConstructionError, match="degree 4"):
        scott_barreto_pell(12)


def test_mnt_exact_k():
    found, rejected = mnt_search(6, 50)
    assert any((i.p, i.r, i.t) == (5, 7, -1) for i in found)
    for i in found:
        assert embedding_degree(i.r, i.p) == 6
        assert is_probable_prime(i.p) and is_probable_prime(i.r)
    assert rejected and all(r["k_true"] < 6 for r in rejected)
    assert any((r["p"], r["t"], r["r"], r["k_true"]) == (5, 3, 3, 2) for r in rejected)


def test_mnt_pell_path():
    found, _ = mnt_search(6, 0, D_range=range(1, 60), pell_bound=10 ** 8)
    assert found
    for i in found:
        assert embedding_degree(i.r, i.p) == 6
        assert 4 * i.p - i.t ** 2 == i.D * i.cm_y ** 2


def test_mnt_unsupported_k():
    with pytest.raises(ConstructionError):
        mnt_search(12, 10)
