import random

import pytest

from pfcurves.curve import scalar_mul
from pfcurves.pairing import PairingContext, find_supersingular
from pfcurves.protocols import (
    BlsKeypair,
    IbeSystem,
    PairingSetup,
    ProtocolError,
    bls_matrix,
    bls_sign_verify,
    bls_verify,
    h2,
    hash_to_point,
    ibe_roundtrip,
    joux_exchange,
    mov_demo,
)


@pytest.fixture(scope="module")
def toy():
    return PairingContext.supersingular_context(59, 5)


@pytest.fixture(scope="module")
def mid():
    return PairingContext.supersingular_context(310711, 38839)


def test_hash_to_point_lands_in_subgroup(toy):
    seen = set()
    for i in range(200):
        P = hash_to_point(toy, b"id-%d" % i)
        assert P.on_curve() and not P.is_infinity()
        assert scalar_mul(5, P).is_infinity()
        seen.add(P.to_text())
    assert len(seen) == 4
    assert hash_to_point(toy, b"alice") == hash_to_point(toy, b"alice")


def test_h2_length_and_determinism(toy):
    g = toy.ext((3, 4))
    assert len(h2(g, 300)) == 300
    assert h2(g, 40) == h2(g, 300)[:40]
    assert h2(g, 32) != h2(toy.ext((4, 3)), 32)


def test_ibe_roundtrips(toy):
    rng = random.Random(1)
    ibe = IbeSystem(toy, rng=rng)
    for i in range(30):
        ident = bytes(rng.randrange(256) for _ in range(8))
        msg = bytes(rng.randrange(256) for _ in range(rng.randrange(1, 64)))
        C, out, tr = ibe_roundtrip(ibe, ident, msg, rng.randrange(1, 5))
        assert out == msg and tr["key_equal"] and tr["roundtrip"]


def test_ibe_wrong_key_fails(mid):
    ibe = IbeSystem(mid, rng=random.Random(3))
    C = ibe.encrypt(b"alice", b"attack at dawn", 1234)
    assert ibe.decrypt(ibe.extract(b"alice"), C) == b"attack at dawn"
    assert ibe.decrypt(ibe.extract(b"bob"), C) != b"attack at dawn"


def test_ibe_contract(toy):
    ibe = IbeSystem(toy, master_s=2)
    with pytest.raises(ProtocolError):
        ibe.encrypt(b"a", b"x" * 300, 1)
    with pytest.raises(ProtocolError):
        ibe.encrypt(b"a", b"x", 5)
    bn = PairingContext.create(103, 97, 0, 5, order=97)
    with pytest.raises(ProtocolError):
        IbeSystem(bn)


def test_joux_exhaustive(toy):
    setup = PairingSetup(toy, rng=random.Random(2))
    for a in range(1, 5):
        for b in range(1, 5):
            for c in range(1, 5):
                ka, kb, kc = joux_exchange(setup, a, b, c)
                assert ka == kb == kc
                assert ka == setup.e(setup.P, setup.Q) ** (a * b * c)
    with pytest.raises(ProtocolError):
        joux_exchange(setup, 0, 1, 1)


def test_joux_on_tate_context():
    bn = PairingContext.create(103, 97, 0, 5, order=97)
    setup = PairingSetup(bn, rng=random.Random(4))
    assert not setup.symmetric
    ka, kb, kc = joux_exchange(setup, 11, 29, 60)
    assert ka == kb == kc and not ka.is_one()


def test_bls_matrix(mid):
    rng = random.Random(9)
    setup = PairingSetup(mid, rng=rng)
    keys = BlsKeypair.generate(setup, rng)
    S, ok = bls_sign_verify(keys, b"hello")
    assert ok
    rows = bls_matrix(keys, b"hello", rng)
    assert [r["case"] for r in rows] == ["valid", "message", "key", "signature", "generator"]
    assert all(r["ok"] for r in rows)
    assert not bls_verify(setup, keys.A, b"hello", mid.curve.infinity())
    with pytest.raises(ProtocolError):
        BlsKeypair(setup, 0)


def test_mov_demo_trials():
    rng = random.Random(16)
    p, r = find_supersingular(16, rng)
    ctx = PairingContext.supersingular_context(p, r)
    for _ in range(5):
        n = rng.randrange(1, r)
        rep = mov_demo(ctx, n, rng)
        assert rep["recovered"] == rep["planted"] == n == rep["bsgs"]
        assert rep["b_equals_a_pow_n"]


def test_large_contexts_refused():
    class Big:
        p = 2 ** 64 + 13
    with pytest.raises(ProtocolError):
        hash_to_point(Big(), b"x")
    with pytest.raises(ProtocolError):
        mov_demo(Big(), 1)
