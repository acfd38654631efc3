"""Miller loop, Weil and reduced Tate pairings, distortion maps, MOV."""

import math
import random

from .algebra import ExtField, PrimeField, is_probable_prime
from .curve import (
    Curve,
    DEFAULT_NAIVE_BOUND,
    add,
    count_points_naive,
    order_over_extension,
    scalar_mul,
    slope,
)

AUX_RETRIES = 64


class PairingRetry(ArithmeticError):
    """An evaluation point hit a zero or pole of a line function."""


class PairingError(ValueError):
    pass


def line_value(P, Q, at):
    """g_{P,Q} = (line through P, Q) / (vertical at P+Q), evaluated at `at`."""
    if P.is_infinity() or Q.is_infinity():
        return at.curve.field.one()
    if at.is_infinity():
        raise PairingRetry("line evaluated at infinity")
    mu = slope(P, Q)
    if mu is None:
        v = at.x - P.x
        if v.is_zero():
            raise PairingRetry("vertical line vanishes at evaluation point")
        return v
    num = at.y - P.y - mu * (at.x - P.x)
    den = at.x + P.x + Q.x - mu * mu
    if num.is_zero() or den.is_zero():
        raise PairingRetry("line has a zero or pole at evaluation point")
    return num / den


def miller(P, at, n):
    """f_{n,P}(at) by left-to-right double-and-add over the bits of n."""
    if n < 1:
        raise ValueError("Miller loop length must be positive")
    f = at.curve.field.one()
    T = P
    for bit in bin(n)[3:]:
        f = f * f * line_value(T, T, at)
        T = add(T, T)
        if bit == "1":
            f = f * line_value(T, P, at)
            T = add(T, P)
    return f


def embedding_degree(r, p, k_max=64):
    """Least k <= k_max with r | p^k - 1."""
    if math.gcd(r, p) != 1:
        raise PairingError("r and p must be coprime")
    x = 1
    for k in range(1, k_max + 1):
        x = x * p % r
        if x == 1:
            return k
    raise PairingError(f"no embedding degree <= {k_max}")


class PairingContext:
    """A curve over F_p, its copy over F_{p^k}, and the pairing group order r."""

    def __init__(self, curve, r, k, ext, order, seed=0):
        self.curve = curve
        self.p = curve.p
        self.r = r
        self.k = k
        self.ext = ext
        self.curve_ext = curve.over(ext) if ext is not curve.field else curve
        self.order = order
        self.ext_order = order_over_extension(self.p, self.p + 1 - order, k)
        self.final_exp = (self.p ** k - 1) // r
        self.rng = random.Random(seed)
        self.supersingular = (self.p + 1 - order) % self.p == 0
        self._r_cofactor = None

    @classmethod
    def create(cls, p, r, a, b, order=None, k=None, k_max=64, seed=0,
               naive_bound=DEFAULT_NAIVE_BOUND):
        if not is_probable_prime(p):
            raise PairingError(f"p={p} is not prime")
        if not is_probable_prime(r):
            raise PairingError(f"r={r} is not prime")
        F = PrimeField(p, check=False)
        curve = Curve(F, a, b)
        if order is None:
            order = count_points_naive(curve, naive_bound).order
        if order % r:
            raise PairingError(f"r={r} does not divide #E={order}")
        k_true = embedding_degree(r, p, k_max)
        if k is not None and k != k_true:
            raise PairingError(f"requested k={k} but embedding degree is {k_true}")
        k = k_true
        if k == 1:
            ext = F
        elif k == 2 and p % 4 == 3:
            ext = ExtField(F, 2, [1, 0, 1])
        else:
            ext = ExtField(F, k, rng=random.Random(seed))
        return cls(curve, r, k, ext, order, seed)

    @classmethod
    def supersingular_context(cls, p, r, seed=0):
        """y^2 = x^3 + x over F_p with p = 3 mod 4; #E = p + 1, k = 2."""
        if p % 4 != 3:
            raise PairingError("the x^3 + x context needs p = 3 mod 4")
        if (p + 1) % r:
            raise PairingError(f"r={r} does not divide p+1")
        return cls.create(p, r, 1, 0, order=p + 1, seed=seed)

    def __repr__(self):
        return f"PairingContext(p={self.p}, r={self.r}, k={self.k})"

    # -- points -------------------------------------------------------------

    def lift(self, P):
        if P.curve is self.curve_ext or P.curve == self.curve_ext:
            return P
        return self.curve.lift_point(P, self.curve_ext)

    def g1_point(self, rng=None):
        from .curve import find_point_of_order
        return find_point_of_order(self.curve, self.r, self.order, rng or self.rng)

    def _r_part(self):
        if self._r_cofactor is None:
            m = self.ext_order
            while m % self.r == 0:
                m //= self.r
            self._r_cofactor = m
        return self._r_cofactor

    def project_r_torsion(self, T):
        """Map a point of E(F_{p^k}) into E[r]: strip the prime-to-r part,
        then multiply by r until the next step would vanish."""
        T = scalar_mul(self._r_part(), T)
        while not T.is_infinity():
            T2 = scalar_mul(self.r, T)
            if T2.is_infinity():
                return T
            T = T2
        return T

    def torsion_point(self, rng=None, independent_of=None):
        """Nonzero r-torsion point over F_{p^k}; outside <independent_of> if given."""
        rng = rng or self.rng
        for _ in range(1000):
            T = self.project_r_torsion(self.curve_ext.random_point(rng))
            if T.is_infinity():
                continue
            if independent_of is not None:
                if not weil_pairing(self, independent_of, T, rng).is_one():
                    return T
                continue
            return T
        raise PairingError("could not find the requested torsion point")

    def random_aux(self, rng=None):
        return self.curve_ext.random_point(rng or self.rng)


def weil_pairing(ctx, P, Q, rng=None):
    """e_W(P,Q) = [f_P(Q+S)/f_P(S)] / [f_Q(P-S)/f_Q(-S)] with random S."""
    P, Q = ctx.lift(P), ctx.lift(Q)
    one = ctx.ext.one()
    if P.is_infinity() or Q.is_infinity():
        return one
    rng = rng or ctx.rng
    for _ in range(AUX_RETRIES):
        S = ctx.random_aux(rng)
        try:
            num = miller(P, add(Q, S), ctx.r) / miller(P, S, ctx.r)
            den = miller(Q, add(P, -S), ctx.r) / miller(Q, -S, ctx.r)
        except PairingRetry:
            continue
        return num / den
    raise PairingError("auxiliary point retry budget exhausted")


def tate_pairing(ctx, P, Q, rng=None):
    """Reduced Tate pairing: (f_P(Q+S)/f_P(S))^((p^k-1)/r)."""
    P, Q = ctx.lift(P), ctx.lift(Q)
    one = ctx.ext.one()
    if P.is_infinity() or Q.is_infinity():
        return one
    rng = rng or ctx.rng
    for _ in range(AUX_RETRIES):
        S = ctx.random_aux(rng)
        try:
            val = miller(P, add(Q, S), ctx.r) / miller(P, S, ctx.r)
        except PairingRetry:
            continue
        return val ** ctx.final_exp
    raise PairingError("auxiliary point retry budget exhausted")


# -- distortion map on y^2 = x^3 + x --------------------------------------

def _check_distortion_ctx(ctx):
    c = ctx.curve
    if not (int(c.a) == 1 and int(c.b) == 0 and ctx.p % 4 == 3 and ctx.k == 2
            and isinstance(ctx.ext, ExtField) and ctx.ext.modulus == (1, 0, 1)):
        raise PairingError("distortion map needs y^2 = x^3 + x, p = 3 mod 4, F_p[i]/(i^2+1)")


def distortion_apply(ctx, P):
    """(x, y) -> (-x, i*y)."""
    _check_distortion_ctx(ctx)
    P = ctx.lift(P)
    if P.is_infinity():
        return P
    i = ctx.ext.gen()
    from .curve import Point
    return Point(ctx.curve_ext, -P.x, i * P.y)


def modified_weil(ctx, P, Q, rng=None):
    return weil_pairing(ctx, P, distortion_apply(ctx, Q), rng)


# -- discrete logs and MOV --------------------------------------------------

def discrete_log(a, b, n):
    """x in [0, n) with a^x = b, by baby-step giant-step; None if absent."""
    m = math.isqrt(n) + 1
    table = {}
    e = a.field.one() if hasattr(a, "field") else 1
    for j in range(m):
        table.setdefault(e, j)
        e = e * a
    step = (a ** m).inverse()
    gamma = b
    for i in range(m):
        j = table.get(gamma)
        if j is not None:
            return (i * m + j) % n
        gamma = gamma * step
    return None


def curve_discrete_log(P, Q, n):
    """x in [0, n) with xP = Q, by baby-step giant-step on the curve."""
    m = math.isqrt(n) + 1
    table = {}
    R = P.curve.infinity()
    for j in range(m):
        table.setdefault(R, j)
        R = add(R, P)
    step = -scalar_mul(m, P)
    G = Q
    for i in range(m):
        j = table.get(G)
        if j is not None:
            return (i * m + j) % n
        G = add(G, step)
    return None


class MovWitness:
    def __init__(self, n, T, a, b, attempts):
        self.n = n
        self.T = T
        self.a = a
        self.b = b
        self.attempts = attempts

    def to_dict(self):
        return {"n": self.n, "T": self.T.to_text(), "a": self.a.to_text(),
                "b": self.b.to_text(), "attempts": self.attempts}


def mov_reduce(ctx, P, Q, rng=None, with_witness=False):
    """Recover n with Q = nP by moving the DLP into F_{p^k}."""
    rng = rng or ctx.rng
    if Q.is_infinity():
        n = 0
        if not with_witness:
            return n
    Pl, Ql = ctx.lift(P), ctx.lift(Q)
    for attempt in range(1, AUX_RETRIES + 1):
        T = ctx.curve_ext.random_point(rng)
        if ctx.k > 1 and T.x.in_base() and T.y.in_base():
            continue
        T1 = ctx.project_r_torsion(T)
        if T1.is_infinity():
            continue
        a = weil_pairing(ctx, Pl, T1, rng)
        if a.is_one():
            continue  # T1 in <P>, the pairing is degenerate
        b = weil_pairing(ctx, Ql, T1, rng)
        n = discrete_log(a, b, ctx.r)
        if n is None:
            raise PairingError("Q is not in the subgroup generated by P")
        if with_witness:
            return n, MovWitness(n, T1, a, b, attempt)
        return n
    raise PairingError("no non-degenerate MOV point found")


def find_supersingular(r_bits, rng=None, max_cofactor=10_000):
    """(p, r): r prime of r_bits bits and p = h*r - 1 prime with p = 3 mod 4,
    so y^2 = x^3 + x over F_p is supersingular with r | #E = p + 1."""
    rng = rng or random.Random()
    while True:
        r = rng.getrandbits(r_bits) | (1 << (r_bits - 1)) | 1
        if not is_probable_prime(r):
            continue
        for h in range(4, max_cofactor, 4):
            p = h * r - 1
            if (p + 1) % (r * r) and is_probable_prime(p):
                return p, r
