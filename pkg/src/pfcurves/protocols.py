"""Toy pairing protocols: Boneh-Franklin IBE, Joux three-party key agreement,
BLS signatures and the MOV attack.

Pedagogical only: nothing here is constant time, and contexts with p above
2^64 are refused.
"""

import hashlib
import random

from .algebra import format_int, sqrt_mod
from .curve import Point, scalar_mul
from .pairing import (
    PairingError,
    curve_discrete_log,
    distortion_apply,
    modified_weil,
    mov_reduce,
    tate_pairing,
)

DIGEST = "sha256"
HASH_BUDGET = 256
MAX_P = 2 ** 64
MASK_BYTES = 256


class ProtocolError(ValueError):
    pass


def _guard(ctx):
    if ctx.p > MAX_P:
        raise ProtocolError("protocol demos refuse p above 2^64")


def _has_distortion(ctx):
    try:
        distortion_apply(ctx, ctx.curve.infinity())
    except PairingError:
        return False
    return True


class PairingSetup:
    """A generator P of G1, a partner Q and the pairing e(P-side, Q-side).

    With a distortion map Q = P and e is the modified Weil pairing; otherwise
    Q is an independent r-torsion point over F_{p^k} and e is reduced Tate.
    """

    def __init__(self, ctx, P=None, rng=None):
        _guard(ctx)
        self.ctx = ctx
        rng = rng or random.Random(0)
        self.P = P if P is not None else ctx.g1_point(rng)
        self.symmetric = _has_distortion(ctx)
        if self.symmetric:
            self.Q = self.P
        else:
            self.Q = ctx.torsion_point(rng, independent_of=ctx.lift(self.P))
        self.rng = rng

    def e(self, A, B):
        if self.symmetric:
            return modified_weil(self.ctx, A, B, self.rng)
        return tate_pairing(self.ctx, A, B, self.rng)


# -- hashing ------------------------------------------------------------------

def _digest(data):
    return hashlib.new(DIGEST, data).digest()


def hash_to_point(ctx, data: bytes):
    """Try-and-increment: digest(data || counter) -> x, lift, clear the cofactor."""
    _guard(ctx)
    curve, p = ctx.curve, ctx.p
    cofactor = ctx.order // ctx.r
    for ctr in range(HASH_BUDGET):
        h = _digest(data + ctr.to_bytes(4, "big"))
        x = curve.field(int.from_bytes(h, "big") % p)
        y = sqrt_mod(curve.rhs(x))
        if y is None:
            continue
        # canonical root, then a digest bit picks the sign
        y = min(int(y), p - int(y))
        if h[-1] & 1:
            y = p - y
        P = scalar_mul(cofactor, Point(curve, x, curve.field(y)))
        if not P.is_infinity():
            return P
    raise ProtocolError("hash_to_point budget exhausted")


def encode_element(v):
    """Fixed-width big-endian bytes of each coefficient."""
    width = (v.field.p.bit_length() + 7) // 8
    return b"".join(int(c).to_bytes(width, "big") for c in v.c)


def h2(v, length):
    """Counter-mode digest expansion of a field element to `length` bytes."""
    seed = encode_element(v)
    out = b""
    ctr = 0
    while len(out) < length:
        out += _digest(ctr.to_bytes(4, "big") + seed)
        ctr += 1
    return out[:length]


def _xor(a, b):
    return bytes(x ^ y for x, y in zip(a, b))


def _pt(P):
    return P.to_text()


# -- Boneh-Franklin -------------------------------------------------------------

class IbeSystem:
    def __init__(self, ctx, master_s=None, rng=None):
        if not _has_distortion(ctx):
            raise ProtocolError("IBE needs the supersingular distortion-map context")
        rng = rng or random.Random(0)
        self.setup = PairingSetup(ctx, rng=rng)
        self.ctx = ctx
        self.master_s = master_s if master_s is not None else rng.randrange(1, ctx.r)
        self.P = self.setup.P
        self.P0 = scalar_mul(self.master_s, self.P)

    def h1(self, identity: bytes):
        return hash_to_point(self.ctx, identity)

    def extract(self, identity: bytes):
        return scalar_mul(self.master_s, self.h1(identity))

    def encrypt(self, identity: bytes, message: bytes, rand: int):
        if len(message) > MASK_BYTES:
            raise ProtocolError(f"message longer than {MASK_BYTES} bytes")
        if not 1 <= rand < self.ctx.r:
            raise ProtocolError("randomness must lie in [1, r)")
        g = self.setup.e(self.h1(identity), self.P0) ** rand
        C0 = scalar_mul(rand, self.P)
        return C0, _xor(message, h2(g, len(message)))

    def decrypt(self, S_A, ciphertext):
        C0, C1 = ciphertext
        g = self.setup.e(S_A, C0)
        return _xor(C1, h2(g, len(C1)))

    def to_dict(self):
        return {"p": format_int(self.ctx.p), "r": format_int(self.ctx.r),
                "P": _pt(self.P), "P0": _pt(self.P0), "digest": DIGEST}


def ibe_roundtrip(system, identity: bytes, message: bytes, rand: int):
    """(ciphertext, decrypted) plus the key-equality check in a transcript."""
    S_A = system.extract(identity)
    C = system.encrypt(identity, message, rand)
    out = system.decrypt(S_A, C)
    k_enc = system.setup.e(system.h1(identity), system.P0) ** rand
    k_dec = system.setup.e(S_A, C[0])
    transcript = {
        "system": system.to_dict(),
        "identity": identity.hex(),
        "P_A": _pt(system.h1(identity)),
        "S_A": _pt(S_A),
        "C0": _pt(C[0]),
        "C1": C[1].hex(),
        "key_equal": k_enc == k_dec,
        "roundtrip": out == message,
    }
    return C, out, transcript


# -- Joux ---------------------------------------------------------------------

def joux_exchange(setup: PairingSetup, a, b, c):
    """Each party publishes (xP, xQ); K_A = e(bP, cQ)^a and so on."""
    r = setup.ctx.r
    for v in (a, b, c):
        if not 1 <= v < r:
            raise ProtocolError("exponents must lie in [1, r)")
    P, Q = setup.P, setup.Q
    A = (scalar_mul(a, P), scalar_mul(a, Q))
    B = (scalar_mul(b, P), scalar_mul(b, Q))
    C = (scalar_mul(c, P), scalar_mul(c, Q))
    k_a = setup.e(B[0], C[1]) ** a
    k_b = setup.e(A[0], C[1]) ** b
    k_c = setup.e(A[0], B[1]) ** c
    return k_a, k_b, k_c


def joux_transcript(setup, a, b, c):
    keys = joux_exchange(setup, a, b, c)
    return {"p": format_int(setup.ctx.p), "r": format_int(setup.ctx.r),
            "a": a, "b": b, "c": c, "keys": [k.to_text() for k in keys],
            "equal": keys[0] == keys[1] == keys[2]}


# -- BLS ----------------------------------------------------------------------

class BlsKeypair:
    def __init__(self, setup: PairingSetup, a):
        if not 1 <= a < setup.ctx.r:
            raise ProtocolError("secret key must lie in [1, r)")
        self.setup = setup
        self.a = a
        self.A = scalar_mul(a, setup.Q)

    @classmethod
    def generate(cls, setup, rng):
        return cls(setup, rng.randrange(1, setup.ctx.r))

    def sign(self, m: bytes):
        return scalar_mul(self.a, hash_to_point(self.setup.ctx, m))


def bls_verify(setup, A, m: bytes, S, Q=None):
    """e(S, Q) == e(H(m), A)."""
    Q = setup.Q if Q is None else Q
    if S.is_infinity():
        return False
    H = hash_to_point(setup.ctx, m)
    return setup.e(S, Q) == setup.e(H, A)


def bls_sign_verify(keys: BlsKeypair, m: bytes):
    S = keys.sign(m)
    return S, bls_verify(keys.setup, keys.A, m, S)


def bls_matrix(keys: BlsKeypair, m: bytes, rng):
    """Verdicts for the honest tuple and one perturbation of each component."""
    setup, r = keys.setup, keys.setup.ctx.r
    S = keys.sign(m)
    other_a = (keys.a + rng.randrange(1, r)) % r or 1
    other_m = m + b"'"
    other_Q = scalar_mul(rng.randrange(2, r), setup.Q)
    cases = [
        ("valid", True, bls_verify(setup, keys.A, m, S)),
        ("message", False, bls_verify(setup, keys.A, other_m, S)),
        ("key", False, bls_verify(setup, scalar_mul(other_a, setup.Q), m, S)),
        ("signature", False, bls_verify(setup, keys.A, m, S + setup.P)),
        ("generator", False, bls_verify(setup, keys.A, m, S, Q=other_Q)),
    ]
    return [{"case": c, "expected": exp, "verdict": got, "ok": exp == got}
            for c, exp, got in cases]


# -- MOV ----------------------------------------------------------------------

def mov_demo(ctx, secret_n, rng=None, check_bsgs=True):
    """Plant Q = nP, recover n through the pairing, cross-check on the curve."""
    _guard(ctx)
    rng = rng or random.Random(0)
    P = ctx.g1_point(rng)
    Q = scalar_mul(secret_n, P)
    if Q.is_infinity():
        n, a, b = 0, None, None
    else:
        n, w = mov_reduce(ctx, P, Q, rng, with_witness=True)
        a, b = w.a, w.b
    if n % ctx.r != secret_n % ctx.r:
        raise ProtocolError(f"MOV recovered {n}, planted {secret_n}")
    report = {
        "p": format_int(ctx.p), "r": format_int(ctx.r), "k": ctx.k,
        "P": _pt(P), "Q": _pt(Q), "planted": secret_n % ctx.r, "recovered": n,
        "a": a.to_text() if a is not None else None,
        "b": b.to_text() if b is not None else None,
        "b_equals_a_pow_n": (a ** n == b) if a is not None else True,
    }
    if check_bsgs:
        report["bsgs"] = curve_discrete_log(P, Q, ctx.r)
    return report
