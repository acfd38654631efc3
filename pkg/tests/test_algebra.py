import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pfcurves.algebra import (
    ExtField,
    PrimeField,
    RatPolynomial,
    X,
    cyclotomic,
    euler_phi,
    find_irreducible,
    format_int,
    is_irreducible_fp,
    is_probable_prime,
    parse_int,
    parse_poly,
    poly_divides,
    poly_eval,
    sqrt_mod,
)

F5 = PrimeField(5)
F59 = PrimeField(59)
F59I = ExtField(F59, 2, [1, 0, 1])


def test_prime_field_small():
    assert F5(3) + F5(4) == 2
    assert F5(2).inverse() == 3
    assert F5(2) * F5(3) == 1


def test_extension_multiply():
    assert F59I((3, 2)) * F59I((3, -2)) == 13


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(91)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 58), st.integers(0, 58), st.integers(0, 58), st.integers(0, 58),
       st.integers(0, 58), st.integers(0, 58))
def test_extension_field_axioms(a0, a1, b0, b1, c0, c1):
    a, b, c = F59I((a0, a1)), F59I((b0, b1)), F59I((c0, c1))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1


def test_frobenius_fixes_extension():
    rng = random.Random(3)
    E = ExtField(PrimeField(103), 12, rng=rng)
    for _ in range(5):
        a = E.random(rng)
        assert a ** (103 ** 12) == a


def test_primality_matches_sympy_below_bound():
    for n in range(0, 20000):
        assert is_probable_prime(n) == sympy.isprime(n), n


def test_primality_examples():
    assert is_probable_prime(97)
    assert not is_probable_prime(1)
    u = 2 ** 110 + 2 ** 36 + 1
    p = 36 * u ** 4 + 36 * u ** 3 + 24 * u ** 2 + 6 * u + 1
    assert is_probable_prime(p)
    assert not is_probable_prime(p * 3)


def test_cyclotomic_examples():
    assert cyclotomic(1) == X - 1
    assert cyclotomic(12) == X ** 4 - X ** 2 + 1
    assert cyclotomic(54).degree == euler_phi(54) == 18


def test_cyclotomic_product_identity():
    for n in range(1, 61):
        prod = RatPolynomial.constant(1)
        for d in sympy.divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == X ** n - 1, n


def test_cyclotomic_against_sympy():
    x = sympy.Symbol("x")
    for n in (5, 9, 20, 24, 36, 54):
        ref = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert [int(c) for c in cyclotomic(n).coeffs] == [int(c) for c in ref]


def test_poly_eval_and_divides():
    p_bn = parse_poly("36*u^4+36*u^3+24*u^2+6*u+1")
    assert poly_eval(p_bn, 1) == 103
    p_bls = parse_poly("(u-1)^2*(u^4-u^2+1)/3 + u")
    assert poly_eval(p_bls, 1) == 1
    assert poly_eval(p_bn, 0) == 1
    ok, q = poly_divides(X - 1, X ** 2 - 1)
    assert ok and q == X + 1
    assert not poly_divides(X + 1, X ** 2 + 1)[0]
    t = 6 * X ** 2 + 1
    r = parse_poly("36*u^4+36*u^3+18*u^2+6*u+1")
    assert poly_divides(r, cyclotomic(12).compose(t - 1))[0]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_divides_matches_sympy_remainder(a, b):
    A, B = RatPolynomial(a), RatPolynomial(b)
    if B.is_zero():
        return
    x = sympy.Symbol("x")
    sa = sum(c * x ** i for i, c in enumerate(a))
    sb = sum(c * x ** i for i, c in enumerate(b))
    rem = sympy.rem(sympy.Poly(sa * sb + sa, x, domain="QQ"), sympy.Poly(sb, x, domain="QQ"))
    ok, _ = poly_divides(B, A * B + A)
    assert ok == rem.is_zero
    assert poly_divides(B, A * B)[0]


def test_sqrt_mod_examples():
    assert sqrt_mod(F59(4)) in (2, 57)
    assert sqrt_mod(F5(2)) is None
    F103 = PrimeField(103)
    for a in range(103):
        roots = [s for s in range(103) if s * s % 103 == a]
        got = sqrt_mod(F103(a))
        assert (got is None) == (not roots)
        if got is not None:
            assert int(got) in roots


def test_find_irreducible_examples():
    assert find_irreducible(F59, 2) == [1, 0, 1]
    assert find_irreducible(F5, 2) == [3, 0, 1]
    f = find_irreducible(PrimeField(103), 12, rng=random.Random(0))
    assert len(f) == 13 and f[-1] == 1
    assert is_irreducible_fp(f, 103)
    assert sympy.Poly(f[::-1], sympy.Symbol("x"), modulus=103).is_irreducible


def test_integer_text_roundtrip():
    seed = parse_int("-2^192+2^188-2^115-2^110-2^44-1")
    assert seed == -2 ** 192 + 2 ** 188 - 2 ** 115 - 2 ** 110 - 2 ** 44 - 1
    assert format_int(-255) == "-0xff"
    assert parse_int(format_int(seed)) == seed
    assert parse_int("-17") == -17
