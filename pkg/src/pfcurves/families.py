"""Polynomial curve families: the family conditions, rho, instantiation."""

import math
import random
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import catalog
from .algebra import (
    PrimeField,
    RatPolynomial,
    X,
    cyclotomic,
    euler_phi,
    factor_over_q,
    format_int,
    is_irreducible_over_q,
    is_probable_prime,
    parse_int,
    parse_poly,
    squarefree_decompose,
)
from .curve import DEFAULT_NAIVE_BOUND, Curve, count_points_naive, scalar_mul

KINDS = ("complete-fixed-D", "complete-variable-D", "sparse")
CHECKS = ("a_irreducible", "b_cyclotomic_divisibility", "c_cofactor",
          "d_cm_identity", "e_seed_residues")

# residue discovery runs over u mod M in numpy; beyond this we give up
RESIDUE_SCAN_LIMIT = 100_000_000


class FamilyError(ValueError):
    pass


class CheckResult:
    def __init__(self, name, status, detail=""):
        self.name = name
        self.status = status  # pass | fail | not-checkable
        self.detail = detail

    def to_dict(self):
        return {"check": self.name, "status": self.status, "detail": self.detail}


class ValidationReport:
    def __init__(self, family, checks, derived, notes=()):
        self.family = family
        self.checks = checks
        self.derived = derived
        self.notes = list(notes)

    @property
    def status(self):
        states = [c.status for c in self.checks]
        if "fail" in states:
            return "invalid"
        if "not-checkable" in states:
            return "unvalidated"
        return "valid"

    @property
    def passed(self):
        return sum(c.status == "pass" for c in self.checks)

    def to_dict(self):
        return {
            "family": self.family,
            "status": self.status,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "derived": {k: (v.to_json() if isinstance(v, RatPolynomial) else v)
                        for k, v in self.derived.items()},
            "notes": self.notes,
        }


def _poly(v):
    if v is None or isinstance(v, RatPolynomial):
        return v
    return parse_poly(v)


class FamilyDescriptor:
    """A named parameterized family (k, D, p(u), r(u), t(u), ...)."""

    def __init__(self, name, k, kind, p, r, t, D="variable", y=None, g=None, h=None,
                 rho_printed=None, label="", transcription="as-printed", note="",
                 partial=False):
        if kind not in KINDS:
            raise FamilyError(f"unknown family kind {kind!r}")
        self.name = name
        self.k = k
        self.kind = kind
        self.D = D
        self.p = _poly(p)
        self.r = _poly(r)
        self.t = _poly(t)
        self.y = _poly(y)
        self.g = _poly(g)
        self.h = _poly(h)
        self.rho_printed = Fraction(rho_printed) if rho_printed is not None else None
        self.label = label
        self.transcription = transcription
        self.note = note
        self.partial = partial
        self._seed_info = None
        self._report = None

    def __repr__(self):
        return f"FamilyDescriptor({self.name}, k={self.k}, D={self.D})"

    @property
    def rho(self):
        return rho_value(self)

    @property
    def report(self):
        if self._report is None:
            self._report = validate_family(self)
        return self._report

    @property
    def status(self):
        return self.report.status

    @property
    def is_valid(self):
        return self.status == "valid"

    # -- seeds --------------------------------------------------------------

    def _seeds(self):
        if self._seed_info is None:
            self._seed_info = _seed_info(self)
        return self._seed_info

    @property
    def seed_modulus(self):
        return self._seeds()[0]

    @property
    def seed_residues(self):
        return self._seeds()[1]

    @property
    def r_content(self):
        """Fixed divisor of r(u) over admissible seeds; divided out on instantiation."""
        return self._seeds()[2]

    def admissible(self, u):
        M, res, _ = self._seeds()
        if res is None:
            return None
        if not hasattr(self, "_residue_set"):
            self._residue_set = frozenset(res)
        return u % M in self._residue_set

    def to_dict(self, with_report=True):
        out = {
            "name": self.name,
            "k": self.k,
            "kind": self.kind,
            "D": self.D,
            "label": self.label,
            "transcription": self.transcription,
            "completeness": "partial" if self.partial else "full",
            "p": self.p.to_json() if self.p else None,
            "r": self.r.to_json() if self.r else None,
            "t": self.t.to_json(),
            "rho": _frac_text(self.rho) if self.rho is not None else None,
            "rho_printed": _frac_text(self.rho_printed) if self.rho_printed is not None else None,
            "note": self.note,
        }
        for key in ("y", "g", "h"):
            v = getattr(self, key)
            if v is not None:
                out[key] = v.to_json()
        if with_report:
            rep = self.report
            out["status"] = rep.status
            out["seed_modulus"] = self.seed_modulus
            out["seed_residues"] = (list(self.seed_residues)
                                    if self.seed_residues is not None else None)
            out["r_content"] = self.r_content
        return out


def _frac_text(f):
    f = Fraction(f)
    return f"{f.numerator}/{f.denominator}"


# -- rho and seeds ----------------------------------------------------------

def rho_value(fd):
    if fd.p is None or fd.r is None or fd.r.degree < 1:
        return None
    return Fraction(fd.p.degree, fd.r.degree)


def _eval_mod(poly_int_coeffs, us, m):
    acc = np.zeros_like(us)
    for c in reversed(poly_int_coeffs):
        acc = (acc * us + (c % m)) % m
    return acc


def _seed_info(fd):
    """(M, admissible residues mod M, fixed content of r)."""
    polys = [f for f in (fd.p, fd.t, fd.r) if f is not None]
    dens = [f.denominator() for f in polys]
    M = 2 * math.lcm(*dens)
    # int64 Horner needs den^2 < 2^63
    if M > RESIDUE_SCAN_LIMIT or max(dens) > 3_000_000_000:
        return M, None, 1
    integer_forms = [([int(c * den) for c in f.coeffs], den)
                     for f, den in zip(polys, dens) if den > 1]
    found = []
    chunk = 1 << 21
    for start in range(0, M, chunk):
        us = np.arange(start, min(start + chunk, M), dtype=np.int64)
        ok = np.ones(len(us), dtype=bool)
        for ints, den in integer_forms:
            ok &= _eval_mod(ints, us % den, den) == 0
        found.append(us[ok])
    residues = tuple(int(a) for a in np.concatenate(found)) if found else ()
    content = _r_content(fd, M, residues)
    # the cofactor (p + 1 - t) / (r / content) must be integral as well
    if fd.r is not None and fd.p is not None and residues:
        q, rem = divmod(fd.p + 1 - fd.t, fd.r)
        if rem.is_zero():
            for _ in range(4):
                h = q * content
                dh = h.denominator()
                if dh == 1:
                    break
                M2 = math.lcm(M, dh)
                if M2 > RESIDUE_SCAN_LIMIT:
                    return M, None, 1
                residues = tuple(a + M * j for a in residues for j in range(M2 // M)
                                 if h(a + M * j).denominator == 1)
                M = M2
                new = _r_content(fd, M, residues)
                if new == content:
                    break
                content = new
    return M, residues, content


def _r_content(fd, M, residues):
    content = 0
    if fd.r is not None and residues:
        for a in residues[:4096]:
            for j in range(fd.r.degree + 1):
                content = math.gcd(content, int(fd.r(a + M * j)))
    return max(content, 1)


# -- CM shape ---------------------------------------------------------------

def _split_square(f: RatPolynomial):
    """Write f = g * y^2 with g squarefree (constant part squarefree integer)."""
    from sympy import Poly, Rational, sqf_list, symbols
    x = symbols("x")
    sp = Poly([Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], x)
    const, facs = sqf_list(sp)
    g = RatPolynomial.constant(1)
    y = RatPolynomial.constant(1)
    for fac, e in facs:
        q = RatPolynomial(Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs()))
        y = y * q ** (e // 2)
        if e % 2:
            g = g * q
    c = Fraction(int(const.p), int(const.q))
    s, v = squarefree_decompose(c.numerator * c.denominator)
    # c = s * (v / den)^2
    return g * s, y * Fraction(v, c.denominator)


def _cm_check(fd):
    """Returns (CheckResult, derived dict)."""
    f = fd.p * 4 - fd.t * fd.t
    derived = {}
    if fd.kind == "complete-fixed-D":
        if fd.y is not None:
            ok = f == fd.y * fd.y * fd.D
            return CheckResult("d_cm_identity", "pass" if ok else "fail",
                               f"4p - t^2 == {fd.D}*y^2 with the given y"), {"y": fd.y}
        y = (f / fd.D).sqrt()
        if y is None:
            return CheckResult("d_cm_identity", "fail",
                               f"(4p - t^2)/{fd.D} is not the square of a polynomial"), derived
        if y.leading < 0:
            y = -y
        derived["y"] = y
        return CheckResult("d_cm_identity", "pass", f"4p - t^2 = {fd.D}*({y.format('u')})^2"), derived
    if fd.kind == "complete-variable-D":
        q, rem = divmod(f, X)
        h = q.sqrt() if not rem else None
        if h is None:
            return CheckResult("d_cm_identity", "fail",
                               "4p - t^2 is not of the form u*h(u)^2"), derived
        if h.leading < 0:
            h = -h
        derived["y"] = h
        derived["g"] = X
        return CheckResult("d_cm_identity", "pass", f"4p - t^2 = u*({h.format('u')})^2"), derived
    # sparse: g quadratic and not a square
    if fd.g is not None and fd.y is not None:
        g, y = fd.g, fd.y
        if f != g * y * y:
            return CheckResult("d_cm_identity", "fail", "4p - t^2 != g*y^2 for the given g, y"), derived
    else:
        g, y = _split_square(f)
    derived["g"], derived["y"] = g, y
    if g.degree != 2:
        return CheckResult("d_cm_identity", "fail",
                           f"squarefree part of 4p - t^2 has degree {g.degree}, expected 2"), derived
    if g.sqrt() is not None:
        return CheckResult("d_cm_identity", "fail", "g(u) is a square"), derived
    return CheckResult("d_cm_identity", "pass",
                       f"4p - t^2 = ({g.format('u')})*({y.format('u')})^2"), derived


def validate_family(fd) -> ValidationReport:
    """The five family conditions. Never raises; failures are report entries."""
    checks, derived, notes = [], {}, []
    if fd.r is None:
        checks.append(CheckResult("a_irreducible", "fail", "r(u) unknown"))
    else:
        try:
            irr = is_irreducible_over_q(fd.r)
            checks.append(CheckResult("a_irreducible", "pass" if irr else "fail",
                                      "r irreducible over Q" if irr else "r factors over Q"))
        except Exception as exc:  # sympy trouble is reported, not raised
            checks.append(CheckResult("a_irreducible", "not-checkable", str(exc)))

    if fd.r is None or fd.t is None:
        checks.append(CheckResult("b_cyclotomic_divisibility", "fail", "r(u) unknown"))
        checks.append(CheckResult("c_cofactor", "fail", "r(u) unknown"))
    else:
        phi = cyclotomic(fd.k)(fd.t - 1)
        ok = (phi % fd.r).is_zero()
        checks.append(CheckResult("b_cyclotomic_divisibility", "pass" if ok else "fail",
                                  f"r | Phi_{fd.k}(t-1)" if ok else f"r does not divide Phi_{fd.k}(t-1)"))
        h, rem = divmod(fd.p + 1 - fd.t, fd.r)
        if rem:
            checks.append(CheckResult("c_cofactor", "fail", "r does not divide p + 1 - t"))
        elif fd.h is not None and fd.h != h:
            checks.append(CheckResult("c_cofactor", "fail",
                                      f"quotient {h.format('u')} differs from the given cofactor"))
        else:
            derived["h"] = h
            checks.append(CheckResult("c_cofactor", "pass", f"h(u) = {h.format('u')}"))

    try:
        cm, extra = _cm_check(fd)
    except Exception as exc:
        cm, extra = CheckResult("d_cm_identity", "not-checkable", str(exc)), {}
    checks.append(cm)
    derived.update(extra)

    M, res, content = fd._seeds()
    if res is None:
        checks.append(CheckResult("e_seed_residues", "not-checkable",
                                  f"modulus {M} too large to scan"))
    elif not res:
        checks.append(CheckResult("e_seed_residues", "fail",
                                  f"no u mod {M} gives integral p, t, r"))
    else:
        shown = ", ".join(str(a) for a in res[:6]) + (", ..." if len(res) > 6 else "")
        checks.append(CheckResult("e_seed_residues", "pass",
                                  f"{len(res)} classes mod {M}: {shown}"))
    if content > 1:
        notes.append(f"r(u) has fixed divisor {content} on admissible seeds")
    if res:
        ell = _joint_obstruction(fd, M, res, content)
        if ell:
            notes.append(f"p(u) and r(u)/{content} are never both prime: one of them is "
                         f"always divisible by {ell}")

    rho = rho_value(fd)
    if fd.rho_printed is not None and rho is not None and rho != fd.rho_printed:
        notes.append(f"computed rho {rho} differs from printed {fd.rho_printed}")
    if fd.partial:
        notes.append("partially specified: r(u) recovered from Phi_k(t-1), p from t and g*y^2")
    return ValidationReport(fd.name, checks, derived, notes)


def _joint_obstruction(fd, M, residues, content, primes=(2, 3, 5, 7), limit=200_000):
    """A small prime dividing p(u) * r(u)/content at every admissible seed, or None.

    Exact: both values mod ell are periodic in u with period L below.
    """
    if fd.p is None or fd.r is None:
        return None
    dp, dr = fd.p.denominator(), fd.r.denominator()
    P = [int(c * dp) for c in fd.p.coeffs]
    R = [int(c * dr) for c in fd.r.coeffs]
    for ell in primes:
        mp, mr = ell * dp, ell * dr * content
        L = math.lcm(M, mp, mr)
        if L > limit or L // M * len(residues) > limit:
            continue
        blocked = True
        for a in residues:
            for j in range(L // M):
                u = a + M * j
                pv = _horner_mod(P, u, mp) // dp
                rv = _horner_mod(R, u, mr) // (dr * content)
                if pv % ell and rv % ell:
                    blocked = False
                    break
            if not blocked:
                break
        if blocked:
            return ell
    return None


def _horner_mod(coeffs, u, m):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * u + c) % m
    return acc


# -- catalog ----------------------------------------------------------------

def _recover_r(k, p, t):
    """A degree-phi(k) factor of Phi_k(t-1) dividing p + 1 - t, or None."""
    target = p + 1 - t
    for fac in factor_over_q(cyclotomic(k)(t - 1)):
        if fac.degree != euler_phi(k):
            continue
        fac = fac / fac.content()
        if fac.leading < 0:
            fac = -fac
        if (target % fac).is_zero():
            return fac
    return None


def _cyclo_sparse_entries():
    out, seen = [], {}
    for k, y, g, t, rho in catalog.CYCLO_SPARSE:
        y, g, t = parse_poly(y), parse_poly(g), parse_poly(t)
        p = (t * t + g * y * y) / 4
        r = _recover_r(k, p, t)
        seen[k] = seen.get(k, 0) + 1
        name = f"FK-SPARSE-{k}"
        if sum(1 for row in catalog.CYCLO_SPARSE if row[0] == k) > 1:
            name += "abcd"[seen[k] - 1]
        out.append(FamilyDescriptor(
            name, k, "sparse", p, r, t, y=y, g=g, rho_printed=rho,
            label="Fotiadis-Konstantinou cyclotomic sparse", partial=True,
            note="" if r is not None else "no factor of Phi_k(t-1) of degree phi(k) divides p+1-t"))
    return out


@lru_cache(maxsize=1)
def _catalog():
    fams = []
    for row in catalog.COMPLETE + catalog.CVD + catalog.SPARSE:
        fams.append(FamilyDescriptor(**row))
    fams.extend(_cyclo_sparse_entries())
    return tuple(fams)


def builtin_catalog():
    return list(_catalog())


def get_family(name):
    for fd in _catalog():
        if fd.name.lower() == name.lower():
            return fd
    raise KeyError(name)


def family_names():
    return [fd.name for fd in _catalog()]


# -- instances --------------------------------------------------------------

class CurveInstance:
    """A concrete curve from a family seed; p and r need not be prime."""

    def __init__(self, family, u, p, r, t, D, cm_y, cofactor, k, curve=None, rho=None):
        self.family = family
        self.u = u
        self.p = p
        self.r = r
        self.t = t
        self.D = D
        self.cm_y = cm_y
        self.cofactor = cofactor
        self.k = k
        self.curve = curve  # {"a": int, "b": int} once synthesized
        self.rho = rho

    def __repr__(self):
        return (f"CurveInstance({self.family}, u={self.u}, p={self.p}, r={self.r}, "
                f"t={self.t}, D={self.D})")

    def with_curve(self, a, b):
        return CurveInstance(self.family, self.u, self.p, self.r, self.t, self.D,
                             self.cm_y, self.cofactor, self.k, {"a": a, "b": b}, self.rho)

    @property
    def p_bits(self):
        return self.p.bit_length()

    @property
    def r_bits(self):
        return self.r.bit_length()

    def embedding_degree_ok(self):
        r, p = self.r, self.p
        if r < 2 or pow(p, self.k, r) != 1:
            return False
        return all(pow(p, i, r) != 1 for i in range(1, self.k))

    def checks(self, rounds=40):
        """Named invariant checks, all booleans."""
        phi = cyclotomic(self.k)(self.t - 1)
        phi_ok = phi.denominator == 1 and self.r > 0 and int(phi) % self.r == 0
        return {
            "p_prime": is_probable_prime(self.p, rounds),
            "r_prime": is_probable_prime(self.r, rounds),
            "order_relation": self.p + 1 - self.t == self.cofactor * self.r,
            "cm_identity": 4 * self.p - self.t ** 2 == self.D * self.cm_y ** 2,
            "r_divides_phi_k": phi_ok,
            "embedding_degree": self.embedding_degree_ok(),
        }

    def to_dict(self):
        out = {
            "family": self.family,
            "seed": format_int(self.u),
            "p": format_int(self.p),
            "r": format_int(self.r),
            "t": format_int(self.t),
            "D": format_int(self.D),
            "cm_y": format_int(self.cm_y),
            "cofactor": format_int(self.cofactor),
            "k": self.k,
            "rho": _frac_text(self.rho) if self.rho is not None else None,
            "curve": ({"a": format_int(self.curve["a"]), "b": format_int(self.curve["b"])}
                      if self.curve else None),
        }
        return out

    @classmethod
    def from_dict(cls, d):
        curve = d.get("curve")
        if curve:
            curve = {"a": parse_int(curve["a"]), "b": parse_int(curve["b"])}
        rho = Fraction(d["rho"]) if d.get("rho") else None
        return cls(d["family"], parse_int(d["seed"]), parse_int(d["p"]), parse_int(d["r"]),
                   parse_int(d["t"]), parse_int(d["D"]), parse_int(d["cm_y"]),
                   parse_int(d["cofactor"]), int(d["k"]), curve, rho)


def _as_int(v, what, u):
    v = Fraction(v)
    if v.denominator != 1:
        raise FamilyError(f"{what}({u}) = {v} is not an integer")
    return v.numerator


def _rational_sqfree(q: Fraction):
    """q = s * w^2 with s a squarefree integer and w rational."""
    s, v = squarefree_decompose(q.numerator * q.denominator)
    return s, Fraction(v, q.denominator)


def instantiate(fd, u) -> CurveInstance:
    u = int(u)
    if fd.r is None:
        raise FamilyError(f"{fd.name} has no r(u)")
    p = _as_int(fd.p(u), "p", u)
    t = _as_int(fd.t(u), "t", u)
    r_full = _as_int(fd.r(u), "r", u)
    content = fd.r_content
    if r_full % content:
        raise FamilyError(f"r({u}) is not divisible by the fixed content {content}")
    r = r_full // content
    if r == 0:
        raise FamilyError(f"r({u}) = 0")
    if (p + 1 - t) % r:
        raise FamilyError(f"r({u}) does not divide p + 1 - t")
    cofactor = (p + 1 - t) // r
    f = 4 * p - t * t
    derived = fd.report.derived
    if fd.kind == "complete-fixed-D":
        D = fd.D
        y = derived.get("y")
        if y is None:
            raise FamilyError(f"{fd.name} has no CM polynomial y(u)")
        cm_y = abs(_as_int(y(u), "y", u))
    elif fd.kind == "complete-variable-D":
        h = derived.get("y")
        if h is None or u <= 0:
            raise FamilyError("variable-discriminant seeds must be positive with a valid h(u)")
        D, w = _rational_sqfree(Fraction(u))
        cm_y = abs(_as_int(w * h(u), "y", u))
    else:
        g, y = derived.get("g"), derived.get("y")
        if g is None:
            raise FamilyError(f"{fd.name} has no CM split g*y^2")
        gv = Fraction(g(u))
        if gv <= 0:
            raise FamilyError(f"g({u}) = {gv} is not positive")
        D, w = _rational_sqfree(gv)
        cm_y = abs(_as_int(w * Fraction(y(u)), "y", u))
    if f != D * cm_y * cm_y:
        raise FamilyError(f"CM identity fails numerically at u={u}")
    return CurveInstance(fd.name, u, p, r, t, D, cm_y, cofactor, fd.k, rho=fd.rho)


# -- curve equations --------------------------------------------------------

def _order_ok(curve, r, cofactor, rng, tries=3):
    for _ in range(tries):
        P = curve.random_point(rng)
        Q = scalar_mul(cofactor, P)
        if Q.is_infinity():
            continue
        return scalar_mul(r, Q).is_infinity()
    return False


def synthesize_curve(inst: CurveInstance, rng=None, budget=10_000,
                     naive_bound=DEFAULT_NAIVE_BOUND):
    """Scan y^2 = x^3 + b (D=3) or y^2 = x^3 + a*x (D=1) for #E = p + 1 - t.

    Above naive_bound the order is only checked with random points.
    """
    if inst.D not in (1, 3):
        raise FamilyError(f"unsupported discriminant D={inst.D}")
    rng = rng or random.Random(inst.u)
    F = PrimeField(inst.p, check=False)
    want = inst.p + 1 - inst.t
    for c in range(1, budget + 1):
        a, b = (0, c) if inst.D == 3 else (c, 0)
        try:
            E = Curve(F, a, b)
        except ValueError:
            continue
        if not _order_ok(E, inst.r, inst.cofactor, rng):
            continue
        if inst.p <= naive_bound and count_points_naive(E, naive_bound).order != want:
            continue
        return inst.with_curve(a, b)
    raise FamilyError("curve scan budget exhausted")
