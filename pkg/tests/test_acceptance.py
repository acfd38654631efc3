"""One test per acceptance criterion; the summary prints a PASS/FAIL line for each."""

import io
import json
import math
import random
from contextlib import redirect_stdout
from fractions import Fraction

import sympy

from pfcurves.algebra import cyclotomic, is_probable_prime, X
from pfcurves.cli import main
from pfcurves.construct import (
    brezing_weng,
    cocks_pinch,
    mnt_search,
    PellInstance,
    pell_exhaustive,
    pell_solve,
    random_cp_prime,
)
from pfcurves.curve import Curve, count_points_naive, scalar_mul
from pfcurves.algebra import PrimeField
from pfcurves.families import builtin_catalog, get_family, instantiate, rho_value, synthesize_curve
from pfcurves.pairing import (
    PairingContext,
    curve_discrete_log,
    embedding_degree,
    find_supersingular,
    tate_pairing,
    weil_pairing,
)
from pfcurves.protocols import (
    BlsKeypair,
    IbeSystem,
    PairingSetup,
    bls_matrix,
    ibe_roundtrip,
    joux_exchange,
    mov_demo,
)
from pfcurves.security import check_128_constraint

x = sympy.Symbol("x")


def sym(poly):
    return sum(sympy.Rational(c.numerator, c.denominator) * x ** i
               for i, c in enumerate(poly.coeffs))


def trial_prime(n):
    return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))


def test_criterion_01_bn_symbolic(criterion):
    with criterion(1, "BN family identities hold symbolically", limit=1.0):
        bn = get_family("BN")
        p, r, t = sym(bn.p), sym(bn.r), sym(bn.t)
        assert sympy.rem(sympy.expand(sympy.cyclotomic_poly(12, t - 1)), r, x) == 0
        assert sympy.expand(4 * p - t ** 2 - 3 * (6 * x ** 2 + 4 * x + 1) ** 2) == 0


def test_criterion_02_bn_desk_instance(criterion):
    with criterion(2, "BN u=1 gives p=103, r=97 and a curve of order 97", limit=5.0):
        inst = instantiate(get_family("BN"), 1)
        assert (inst.p, inst.r, inst.t, inst.D, inst.cm_y) == (103, 97, 7, 3, 11)
        assert trial_prime(inst.p) and trial_prime(inst.r)
        inst = synthesize_curve(inst)
        E = Curve(PrimeField(103), inst.curve["a"], inst.curve["b"])
        assert count_points_naive(E).order == 97


def test_criterion_03_bn446(criterion):
    with criterion(3, "BN seed 2^110+2^36+1 gives 446-bit p and r", limit=10.0):
        inst = instantiate(get_family("BN"), 2 ** 110 + 2 ** 36 + 1)
        assert inst.p.bit_length() == 446 and inst.r.bit_length() == 446
        assert is_probable_prime(inst.p, 40) and is_probable_prime(inst.r, 40)
        assert 4 * inst.p - inst.t ** 2 == 3 * inst.cm_y ** 2


def test_criterion_04_bls12_768(criterion):
    with criterion(4, "BLS12 negative seed gives 768-bit r and 1150-bit p", limit=10.0):
        u = -2 ** 192 + 2 ** 188 - 2 ** 115 - 2 ** 110 - 2 ** 44 - 1
        inst = instantiate(get_family("BLS12"), u)
        assert inst.r.bit_length() == 768 and inst.p.bit_length() == 1150
        assert is_probable_prime(inst.p) and is_probable_prime(inst.r)


def test_criterion_05_rho_suite(criterion):
    with criterion(5, "rho values for BN, BLS12, BLS48, KSS18 and Freeman10"):
        want = {"BN": Fraction(1), "BLS12": Fraction(3, 2), "BLS48": Fraction(9, 8),
                "KSS18": Fraction(4, 3), "Freeman10": Fraction(1)}
        for name, rho in want.items():
            got = rho_value(get_family(name))
            assert isinstance(got, Fraction) and got == rho, name


def _order(v, r):
    return next(d for d in range(1, r + 1) if (v ** d).is_one())


def test_criterion_06_pairing_properties(criterion):
    with criterion(6, "Weil and Tate pairing properties on y^2=x^3+x over F_59", limit=5.0):
        ctx = PairingContext.supersingular_context(59, 5)
        assert ctx.k == 2 == embedding_degree(5, 59)
        rng = random.Random(6)
        P = ctx.lift(ctx.g1_point(rng))
        Q = ctx.torsion_point(rng, independent_of=P)
        for pairing in (weil_pairing, tate_pairing):
            e = pairing(ctx, P, Q)
            assert _order(e, 5) == 5
            for a in range(5):
                for b in range(5):
                    v = pairing(ctx, scalar_mul(a, P), scalar_mul(b, Q))
                    assert v == e ** (a * b)
                    assert (v ** 5).is_one()
        assert weil_pairing(ctx, P, P).is_one() and weil_pairing(ctx, Q, Q).is_one()


def test_criterion_07_mov(criterion):
    with criterion(7, "MOV recovers 20/20 planted logs on a 16-bit subgroup", limit=60.0):
        rng = random.Random(7)
        p, r = find_supersingular(16, rng)
        assert r.bit_length() == 16
        ctx = PairingContext.supersingular_context(p, r)
        good = 0
        for _ in range(20):
            n = rng.randrange(1, r)
            rep = mov_demo(ctx, n, rng, check_bsgs=False)
            P, Q = ctx.curve.point_from_text(rep["P"]), ctx.curve.point_from_text(rep["Q"])
            good += rep["recovered"] == n == curve_discrete_log(P, Q, r)
        assert good == 20


def test_criterion_08_mnt_exact_k(criterion):
    with criterion(8, "MNT search keeps only embedding degree exactly 6"):
        found, rejected = mnt_search(6, 50, h=1)
        assert any((i.p, i.r, i.t) == (5, 7, -1) for i in found)
        assert all(embedding_degree(i.r, i.p) == 6 for i in found)
        assert any(r["k_true"] < 6 and (r["p"] + 1 - r["t"]) % r["r"] == 0 for r in rejected)


def test_criterion_09_cocks_pinch(criterion):
    with criterion(9, "Cocks-Pinch: 50 runs, every output valid, rho near 2"):
        rng = random.Random(9)
        near_two = 0
        for i in range(50):
            k = (4, 6)[i % 2]
            r = random_cp_prime(64, k, 3, rng)
            res = cocks_pinch(k, 3, r, rng)
            assert res.r.bit_length() == 64
            assert (res.p ** k - 1) % res.r == 0
            assert is_probable_prime(res.p)
            near_two += 1.8 <= math.log(res.p) / math.log(res.r) <= 2.2
        assert near_two >= 45


def test_criterion_10_brezing_weng(criterion):
    with criterion(10, "Brezing-Weng k=5, D=1 matches the closed form p(x)"):
        k = 5
        fd = brezing_weng(k, 1, cyclotomic(4 * k))
        closed = (X ** (2 * k + 4) + 2 * X ** (2 * k + 2) + X ** (2 * k)
                  + X ** 4 - 2 * X ** 2 + 1) / 4
        assert fd.p.coeffs == closed.coeffs
        assert fd.r == cyclotomic(20)


def test_criterion_11_pell(criterion):
    with criterion(11, "Pell solutions equal exhaustive search for d<=20, |N|<=20"):
        for d in range(2, 21):
            if math.isqrt(d) ** 2 == d:
                continue
            for n in range(-20, 21):
                got = [s.pair() for s in pell_solve(PellInstance(d, n), 10 ** 4)]
                assert got == pell_exhaustive(d, n, 10 ** 4), (d, n)


BANDS_CAPTION = ("Curve parameter size (in bits) with associated embedding degree "
                 "for obtaining the prescribed level of security")
BANDS_TABLE = [
    ["80", "160", "960-1280", "6-8", "3-4"],
    ["112", "224", "2200-3600", "10-16", "5-8"],
    ["128", "256", "3000-5000", "12-20", "6-10"],
    ["192", "384", "8000-10000", "20-26", "10-13"],
    ["256", "512", "14000-18000", "28-36", "14-18"],
]


def test_criterion_12_security_bands(criterion):
    with criterion(12, "security bands table and the 128-bit rho*k bounds"):
        buf = io.StringIO()
        with redirect_stdout(buf):
            assert main(["security", "bands", "--format", "csv"]) == 0
        lines = buf.getvalue().strip().splitlines()
        body = [line.split(",") for line in lines if line[:1].isdigit()]
        assert body == BANDS_TABLE
        buf = io.StringIO()
        with redirect_stdout(buf):
            assert main(["security", "bands"]) == 0
        table = buf.getvalue().splitlines()
        assert table[0] == BANDS_CAPTION
        cells = [[c.strip() for c in line.split("|")] for line in table[1:] if "|" in line]
        assert cells[1:] == BANDS_TABLE
        assert check_128_constraint(1, 12) and check_128_constraint(1, 21)
        assert not check_128_constraint(1, 22)
        assert check_128_constraint(2, 6)


def test_criterion_13_protocols(criterion):
    with criterion(13, "IBE 100/100, Joux exhaustive on r=5, BLS matrix", limit=30.0):
        rng = random.Random(13)
        toy = PairingContext.supersingular_context(59, 5)
        ibe = IbeSystem(toy, rng=rng)
        ok = 0
        for _ in range(100):
            ident = bytes(rng.randrange(256) for _ in range(rng.randrange(1, 16)))
            msg = bytes(rng.randrange(256) for _ in range(rng.randrange(1, 48)))
            _, out, tr = ibe_roundtrip(ibe, ident, msg, rng.randrange(1, toy.r))
            ok += out == msg and tr["key_equal"]
        assert ok == 100
        setup = PairingSetup(toy, rng=rng)
        for a in range(1, 5):
            for b in range(1, 5):
                for c in range(1, 5):
                    ka, kb, kc = joux_exchange(setup, a, b, c)
                    assert ka == kb == kc
        mid = PairingContext.supersingular_context(310711, 38839)
        bls_setup = PairingSetup(mid, rng=rng)
        rows = bls_matrix(BlsKeypair.generate(bls_setup, rng), b"message", rng)
        assert len([r for r in rows if not r["expected"]]) == 4
        assert all(r["ok"] for r in rows)


def test_criterion_14_validator_honesty(criterion):
    with criterion(14, "catalog validation report is complete and honest"):
        buf = io.StringIO()
        with redirect_stdout(buf):
            main(["families", "validate", "--format", "json"])
        report = {f["family"]: f for f in json.loads(buf.getvalue())["families"]}
        assert set(report) == {fd.name for fd in builtin_catalog()}
        failed = 0
        for fd in builtin_catalog():
            entry = report[fd.name]
            states = [c["status"] for c in entry["checks"]]
            assert len(states) == 5
            if entry["status"] == "valid":
                assert states == ["pass"] * 5, fd.name
            if "fail" in states:
                assert entry["status"] == "invalid", fd.name
                failed += 1
        assert failed > 0
        assert report["KSS18-printed"]["status"] == "invalid"
