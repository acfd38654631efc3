"""Curve constructions: Cocks-Pinch, Brezing-Weng, Drylo CVD, Pell/MNT."""

import math
import random
from fractions import Fraction

from .algebra import (
    RatPolynomial,
    X,
    cyclotomic,
    factor_over_q,
    factorize,
    is_irreducible_over_q,
    is_probable_prime,
    is_square,
    poly_mod_inverse,
    squarefree_decompose,
)
from .families import CurveInstance, FamilyDescriptor, get_family
from .pairing import embedding_degree


class ConstructionError(ValueError):
    pass


# -- Cocks-Pinch ------------------------------------------------------------

class CocksPinchResult:
    def __init__(self, k, D, r, p, t, y, tries):
        self.k = k
        self.D = D
        self.r = r
        self.p = p
        self.t = t
        self.y = y
        self.tries = tries

    @property
    def rho(self):
        return math.log(self.p) / math.log(self.r)

    def as_instance(self):
        n = self.p + 1 - self.t
        return CurveInstance("cocks-pinch", 0, self.p, self.r, self.t, self.D, self.y,
                             n // self.r, self.k)

    def to_dict(self):
        return {"k": self.k, "D": self.D, "r": self.r, "p": self.p, "t": self.t,
                "y": self.y, "rho": round(self.rho, 4), "tries": self.tries}


def primitive_roots_of_unity(k, r, rng=None):
    """All primitive k-th roots of unity mod the prime r (k | r - 1)."""
    if (r - 1) % k:
        raise ConstructionError(f"k={k} does not divide r-1")
    rng = rng or random.Random(r)
    qs = list(factorize(r - 1))
    while True:
        g = rng.randrange(2, r)
        if all(pow(g, (r - 1) // q, r) != 1 for q in qs):
            break
    z = pow(g, (r - 1) // k, r)
    return sorted(pow(z, i, r) for i in range(1, k + 1) if math.gcd(i, k) == 1)


def _sqrt_mod_prime(a, p):
    from .algebra import PrimeField, sqrt_mod
    s = sqrt_mod(PrimeField(p, check=False)(a))
    return None if s is None else int(s)


def cocks_pinch(k, D, r, rng=None, lift_bound=64):
    """(p, t, y) with r | p^k - 1, from a primitive k-th root z mod r.

    t = z + 1 and y = (t - 2)/sqrt(-D) mod r; p = (t^2 + D y^2)/4. The
    representatives are lifted by multiples of r (t + i*r, y + j*r, smallest
    first) until p is an integer prime.
    """
    if not is_probable_prime(r):
        raise ConstructionError("r must be prime")
    if (r - 1) % k:
        raise ConstructionError(f"k={k} does not divide r-1")
    s = _sqrt_mod_prime(-D, r)
    if s is None:
        raise ConstructionError(f"-{D} is not a square mod r")
    rng = rng or random.Random()
    choices = [(z, sgn) for z in primitive_roots_of_unity(k, r, rng) for sgn in (1, -1)]
    rng.shuffle(choices)
    lifts = sorted(((i, j) for i in range(lift_bound) for j in range(lift_bound)),
                   key=lambda ij: (max(ij), ij))
    tries = 0
    for z, sgn in choices:
        t0 = z + 1
        y0 = (t0 - 2) * pow(sgn * s, -1, r) % r
        for i, j in lifts:
            t, y = t0 + i * r, y0 + j * r
            num = t * t + D * y * y
            if num % 4:
                continue
            tries += 1
            p = num // 4
            if is_probable_prime(p):
                if pow(p, k, r) != 1:
                    raise ConstructionError("internal: r does not divide p^k - 1")
                return CocksPinchResult(k, D, r, p, t, y, tries)
    raise ConstructionError("no prime p within the lift budget")


def random_cp_prime(bits, k, D, rng):
    """A prime r of the given size with k | r - 1 and -D a square mod r."""
    while True:
        r = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        r -= (r - 1) % k
        if r.bit_length() != bits or not is_probable_prime(r):
            continue
        if _sqrt_mod_prime(-D, r) is not None:
            return r


# -- polynomial constructions ------------------------------------------------

def _small_candidates(r_poly, limit=None):
    n = limit or 2 * max(r_poly.degree, 1) + 2
    for i in range(1, n):
        m = RatPolynomial.monomial(i) % r_poly
        yield m
        yield -m


def find_root_of_unity(k, r_poly):
    """Candidates +-x^i that are primitive k-th roots of unity mod r(x)."""
    phi = cyclotomic(k)
    return [c for c in _small_candidates(r_poly, 4 * r_poly.degree + 4)
            if (phi(c) % r_poly).is_zero()]


def find_sqrt(target, r_poly):
    """Small candidates c with c^2 = target mod r(x): +-x^i and +-(2x^i + 1)."""
    out = []
    for c in _small_candidates(r_poly, 4 * r_poly.degree + 4):
        for cand in (c, (c * 2 + 1) % r_poly, (c * 2 - 1) % r_poly):
            if ((cand * cand - target) % r_poly).is_zero() and cand not in out:
                out.append(cand)
    return out


def brezing_weng(k, D, r_poly, zeta=None, sqrt_neg_d=None, root_choice=0, name=None):
    """Family with t = zeta + 1, y = (zeta - 1)/sqrt(-D), p = (t^2 + D y^2)/4."""
    if not is_irreducible_over_q(r_poly):
        raise ConstructionError("r(x) must be irreducible")
    if zeta is None:
        roots = find_root_of_unity(k, r_poly)
        if not roots:
            raise ConstructionError(f"no small primitive {k}-th root of unity mod r(x)")
        zeta = roots[root_choice % len(roots)]
    zeta = zeta % r_poly
    if not (cyclotomic(k)(zeta) % r_poly).is_zero():
        raise ConstructionError(f"zeta is not a primitive {k}-th root of unity mod r(x)")
    if sqrt_neg_d is None:
        roots = find_sqrt(RatPolynomial.constant(-D), r_poly)
        if not roots:
            raise ConstructionError(f"sqrt(-{D}) not found in Q[x]/r(x)")
        sqrt_neg_d = roots[0]
    if not ((sqrt_neg_d * sqrt_neg_d + D) % r_poly).is_zero():
        raise ConstructionError(f"given element is not sqrt(-{D}) mod r(x)")
    t = zeta + 1
    y = ((zeta - 1) * poly_mod_inverse(sqrt_neg_d, r_poly)) % r_poly
    p = (t * t + y * y * D) / 4
    return FamilyDescriptor(name or f"BW{k}-D{D}", k, "complete-fixed-D", p, r_poly, t,
                            D=D, y=y, label="Brezing-Weng construction",
                            transcription="constructed")


def drylo_cvd(k, r_poly, zeta, z, name=None):
    """Variable-discriminant family: z^2 = -x mod r(x), t = zeta + 1,
    h = (zeta - 1)/z, p = (t^2 + x h^2)/4, so 4p - t^2 = x h^2."""
    zeta = zeta % r_poly
    z = z % r_poly
    if not (cyclotomic(k)(zeta) % r_poly).is_zero():
        raise ConstructionError(f"zeta is not a primitive {k}-th root of unity mod r(x)")
    if not ((z * z + X) % r_poly).is_zero():
        raise ConstructionError("z^2 is not -x mod r(x)")
    t = zeta + 1
    h = ((zeta - 1) * poly_mod_inverse(z, r_poly)) % r_poly
    p = (t * t + X * h * h) / 4
    return FamilyDescriptor(name or f"DRYLO-CVD{k}", k, "complete-variable-D", p, r_poly, t,
                            y=h, g=X, label="Drylo variable discriminant",
                            transcription="constructed")


def cvd_rho_bound(fd):
    """max(2 deg t, 1 + 2 deg h)/deg r and the (2 deg r - 1)/deg r ceiling."""
    h = fd.y if fd.y is not None else fd.report.derived.get("y")
    num = max(2 * fd.t.degree, 1 + 2 * h.degree)
    return Fraction(num, fd.r.degree), Fraction(2 * fd.r.degree - 1, fd.r.degree)


def cvd_to_fixed_d(fd, D, name=None):
    """Substitute x -> D x^2 in a variable-discriminant family.

    4p - t^2 becomes D (x h(D x^2))^2. If r(D x^2) splits, the factor of
    largest degree is kept (every factor inherits the divisibilities).
    """
    sub = X * X * D
    p, t, r = fd.p(sub), fd.t(sub), fd.r(sub)
    h = fd.y if fd.y is not None else fd.report.derived["y"]
    y = X * h(sub)
    if not is_irreducible_over_q(r):
        facs = factor_over_q(r)
        r = max(facs, key=lambda f: f.degree)
        r = r / r.content()
        if r.leading < 0:
            r = -r
    return FamilyDescriptor(name or f"{fd.name}-D{D}", fd.k, "complete-fixed-D", p, r, t,
                            D=D, y=y, label=f"{fd.label}, x -> {D}x^2",
                            transcription="constructed")


# -- Pell equations ---------------------------------------------------------

class PellInstance:
    """x^2 - d*y^2 = n, plus how x maps back to the curve variable."""

    def __init__(self, d_coeff, n_rhs, description="", back=None):
        if d_coeff <= 0 or is_square(d_coeff):
            raise ConstructionError(f"d={d_coeff} must be a positive non-square")
        self.d_coeff = d_coeff
        self.n_rhs = n_rhs
        self.description = description
        self.back = back or {}

    def __repr__(self):
        return f"PellInstance(X^2 - {self.d_coeff}*Y^2 = {self.n_rhs})"

    def to_dict(self):
        return {"d": self.d_coeff, "n": self.n_rhs, "description": self.description,
                "back": self.back}


class PellSolution:
    __slots__ = ("x", "y", "class_index")

    def __init__(self, x, y, class_index):
        self.x = x
        self.y = y
        self.class_index = class_index

    def __repr__(self):
        return f"PellSolution({self.x}, {self.y}, class={self.class_index})"

    def pair(self):
        return (self.x, self.y)


def pell_fundamental(d):
    """Least (x, y), y > 0, with x^2 - d y^2 = 1, from the continued fraction of sqrt(d)."""
    if d <= 0 or is_square(d):
        raise ConstructionError(f"d={d} must be a positive non-square")
    a0 = math.isqrt(d)
    m, q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - d * k * k != 1:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return h, k


def _class_representatives(d, n, u, v):
    """Nagell's bounds: every class of x^2 - d y^2 = n has a member with y in range."""
    reps = []
    if n > 0:
        lo, hi = 0, math.isqrt(n * v * v // (2 * (u + 1))) + 1
    else:
        lo = math.isqrt(-n // (2 * (u - 1))) if u > 1 else 0
        hi = math.isqrt(-n * v * v // (2 * (u - 1))) + 1
    for y in range(lo, hi + 1):
        x2 = n + d * y * y
        if x2 >= 0 and is_square(x2):
            x = math.isqrt(x2)
            reps.append((x, y))
            if x:
                reps.append((-x, y))
    return reps


def pell_solve(inst: PellInstance, bound: int):
    """All solutions with 0 <= x <= bound and y >= 1 (signs normalized away)."""
    d, n = inst.d_coeff, inst.n_rhs
    u, v = pell_fundamental(d)
    found = {}
    for ci, (x0, y0) in enumerate(_class_representatives(d, n, u, v)):
        for uu, vv in ((u, v), (u, -v)):
            x, y = x0, y0
            prev = None
            for _ in range(10_000):
                if abs(x) <= bound and y != 0:
                    found.setdefault((abs(x), abs(y)), ci)
                if abs(x) > bound and prev is not None and abs(x) > prev:
                    break
                prev = abs(x)
                x, y = x * uu + d * y * vv, x * vv + y * uu
    return [PellSolution(x, y, ci) for (x, y), ci in sorted(found.items())]


def pell_exhaustive(d, n, bound):
    """Brute-force oracle over 0 <= x <= bound."""
    out = []
    for x in range(bound + 1):
        rest = x * x - n
        if rest > 0 and rest % d == 0 and is_square(rest // d):
            out.append((x, math.isqrt(rest // d)))
    return out


def scott_barreto_pell(k, h=1, d=1, D=1):
    """Pell form of D y^2 = 4 h Phi_k(x)/d - (x - 1)^2 for k in {3, 4, 6}."""
    f = cyclotomic(k) * Fraction(4 * h, d) - (X - 1) ** 2
    if f.degree != 2:
        raise ConstructionError(f"right-hand side has degree {f.degree}, need 2 (k in 3, 4, 6)")
    m = f.denominator()
    A, B, C = (int(c * m) for c in (f[2], f[1], f[0]))
    if A <= 0:
        raise ConstructionError("leading coefficient must be positive")
    # 4A*m*D*y^2 = (2Ax + B)^2 - (B^2 - 4AC)
    dd, nn, c = 4 * A * m * D, B * B - 4 * A * C, math.gcd(2 * A, B)
    while c > 1 and (dd % (c * c) or nn % (c * c)):
        c -= 1
        while c > 1 and ((2 * A) % c or B % c):
            c -= 1
    dd, nn = dd // (c * c), nn // (c * c)
    desc = (f"{D}*y^2 = 4*{h}*Phi_{k}(x)/{d} - (x-1)^2 with X = (2*{A}*x + {B})/{c}")
    return PellInstance(dd, nn, desc, {"A": A, "B": B, "c": c, "k": k, "h": h, "d": d, "D": D})


def scott_barreto_candidates(inst: PellInstance, solutions):
    """(x, t, r, p, y) from Pell solutions, where the back-substitution is integral."""
    b = inst.back
    A, B, c, k, h, d = b["A"], b["B"], b["c"], b["k"], b["h"], b["d"]
    phi = cyclotomic(k)
    out = []
    for s in solutions:
        for X_ in (s.x, -s.x):
            num = c * X_ - B
            if num % (2 * A):
                continue
            x = num // (2 * A)
            rv = phi(x)
            if rv.denominator != 1 or int(rv) % d:
                continue
            r = int(rv) // d
            t = x + 1
            p = h * r + t - 1
            out.append((x, t, r, p, s.y))
    return out


# -- MNT search --------------------------------------------------------------

MNT_FAMILIES = {3: ("MNT3-plus", "MNT3-minus"), 4: ("MNT4-a", "MNT4-b"),
                6: ("MNT6-plus", "MNT6-minus")}


def _cm_split(p, t):
    f = 4 * p - t * t
    if f <= 0:
        return None, None
    return squarefree_decompose(f)


def mnt_search(k, u_bound, h=1, D_range=None, pell_bound=10 ** 6):
    """Prime-order (h=1) or small-cofactor MNT/GMV curves with embedding degree exactly k.

    Returns (instances, rejected); rejected lists parameter-consistent
    candidates whose true embedding degree is smaller than k.
    """
    if k not in MNT_FAMILIES:
        raise ConstructionError("MNT search supports k in {3, 4, 6}")
    found, rejected = {}, []

    def consider(family, u, p, t):
        n = p + 1 - t
        if n <= 0 or n % h:
            return
        r = n // h
        if not (is_probable_prime(p) and is_probable_prime(r)) or r == p:
            return
        k_true = embedding_degree(r, p, k_max=max(64, k))
        D, y = _cm_split(p, t)
        if D is None:
            return
        if k_true != k:
            rejected.append({"family": family, "u": u, "p": p, "t": t, "r": r,
                             "k_true": k_true, "reason": f"embedding degree {k_true} != {k}"})
            return
        key = (p, t)
        if key not in found:
            found[key] = CurveInstance(family, u, p, r, t, D, y, h, k, rho=Fraction(1))

    if h == 1:
        for name in MNT_FAMILIES[k]:
            fd = get_family(name)
            for u in range(1, u_bound + 1):
                consider(name, u, int(fd.p(u)), int(fd.t(u)))
    for D in (D_range or ()):
        if squarefree_decompose(D)[1] != 1:
            continue
        try:
            inst = scott_barreto_pell(k, h, 1, D)
        except ConstructionError:
            continue  # degenerate (square) Pell coefficient
        sols = pell_solve(inst, pell_bound)
        for x, t, r, p, _y in scott_barreto_candidates(inst, sols):
            consider(f"SB{k}-h{h}-D{D}", x, p, t)
    instances = sorted(found.values(), key=lambda i: (abs(i.u), i.p))
    return instances, rejected
