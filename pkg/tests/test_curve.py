import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pfcurves.algebra import PrimeField
from pfcurves.curve import (
    QQ,
    Curve,
    SingularCurve,
    count_points_naive,
    discriminant,
    find_point_of_order,
    hasse_interval,
    is_supersingular,
    order_over_extension,
    scalar_mul,
)


def brute_count(p, a, b):
    """Independent oracle: enumerate every (x, y) pair."""
    return 1 + sum(1 for x in range(p) for y in range(p)
                   if (y * y - x ** 3 - a * x - b) % p == 0)


def test_discriminant_examples():
    assert discriminant(PrimeField(5), 1, 0) == 1
    assert discriminant(QQ, -2, 0) == 512
    with pytest.raises(SingularCurve):
        Curve(PrimeField(5), 0, 0)


def test_rational_chord():
    E = Curve(QQ, -2, 0)
    P = E.point(-1, -1)
    Q = E.point(0, 0)
    R = P + Q
    assert (R.x, R.y) == (Fraction(2), Fraction(-2))
    assert R.on_curve()


def test_identity_and_inverse():
    E = Curve(PrimeField(59), 1, 0)
    P = E.random_point(random.Random(1))
    assert P + E.infinity() == P
    assert (P + (-P)).is_infinity()
    assert scalar_mul(1, P) == P
    assert scalar_mul(2, P) == P + P


def test_point_counts():
    assert count_points_naive(Curve(PrimeField(5), 1, 0)).order == 4
    info = count_points_naive(Curve(PrimeField(59), 1, 0))
    assert info.order == 60 and info.trace == 0


def test_count_matches_brute_force():
    rng = random.Random(7)
    for p in (5, 7, 11, 13, 31, 59, 61):
        for _ in range(4):
            a, b = rng.randrange(p), rng.randrange(p)
            if (4 * a ** 3 + 27 * b ** 2) % p == 0:
                continue
            info = count_points_naive(Curve(PrimeField(p), a, b))
            assert info.order == brute_count(p, a, b)
            assert info.hasse_ok()
            lo, hi = hasse_interval(p)
            assert lo <= info.order <= hi


def test_bn_desk_curve_has_prime_order():
    bs = [b for b in range(1, 103) if brute_count(103, 0, b) == 97]
    assert bs
    E = Curve(PrimeField(103), 0, bs[0])
    assert count_points_naive(E).order == 97
    assert not is_supersingular(E)


def test_find_point_of_order():
    E = Curve(PrimeField(59), 1, 0)
    P = find_point_of_order(E, 5, 60, random.Random(2))
    assert not P.is_infinity() and scalar_mul(5, P).is_infinity()
    Q = find_point_of_order(E, 60, 60, random.Random(2))
    assert scalar_mul(60, Q).is_infinity()
    with pytest.raises(ValueError):
        find_point_of_order(E, 1, 60)


def test_supersingular_examples():
    assert is_supersingular(Curve(PrimeField(59), 1, 0))
    assert not is_supersingular(Curve(PrimeField(5), 1, 0))
    for p in (7, 11, 19, 23, 43, 47, 67, 71, 79, 83):
        assert count_points_naive(Curve(PrimeField(p), 1, 0)).trace == 0


def test_order_over_extension():
    # y^2 = x^3 + x over F_5 has t = 2; over F_25 count directly
    assert order_over_extension(5, 2, 1) == 4
    assert order_over_extension(59, 0, 2) == 60 * 60


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([11, 23, 59, 101]), st.integers(0, 10 ** 6),
       st.integers(0, 500), st.integers(0, 500))
def test_group_laws(p, seed, m, n):
    rng = random.Random(seed)
    F = PrimeField(p)
    while True:
        a, b = rng.randrange(p), rng.randrange(p)
        if (4 * a ** 3 + 27 * b ** 2) % p:
            break
    E = Curve(F, a, b)
    P, Q, R = (E.random_point(rng) for _ in range(3))
    assert (P + Q) + R == P + (Q + R)
    assert P + Q == Q + P
    assert scalar_mul(m + n, P) == scalar_mul(m, P) + scalar_mul(n, P)
    for T in (P + Q, scalar_mul(m, P), -R):
        assert T.on_curve()
    assert math.isqrt(4 * p) + 1 > abs(count_points_naive(E).trace)
