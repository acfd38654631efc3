"""Security estimates: Pollard rho, NFS in L-notation, parameter bands and the
recommended-curve tables."""

import math
from fractions import Fraction

from .algebra import DEFAULT_MR_ROUNDS, format_int, is_probable_prime, parse_int
from .catalog import BANDS, RECOMMENDED
from .families import FamilyError, get_family, instantiate

C_GENERAL = 1.923
C_SPECIAL = 1.526
CLAIM_TOLERANCE = 8
ESTIMATE_LABEL = "asymptotic, uncalibrated (o(1) = 0)"

BANDS_CAPTION = ("Curve parameter size (in bits) with associated embedding degree "
                 "for obtaining the prescribed level of security")
BANDS_HEADER = ("Security Level (in bits)", "Subgroup size r (in bits)",
                "Extension field size p^k (in bits)", "Embedding degree k rho=1",
                "Embedding degree k rho=2")


def l_notation_bits(n_bits, l, c):
    """log2 of exp(c (ln N)^l (ln ln N)^(1-l)) for N = 2^n_bits."""
    if not 0 <= l <= 1:
        raise ValueError("l must lie in [0, 1]")
    if c <= 0:
        raise ValueError("c must be positive")
    ln_n = n_bits * math.log(2)
    return c * ln_n ** l * math.log(ln_n) ** (1 - l) / math.log(2)


def _is_prime_small(k):
    return k > 1 and all(k % d for d in range(2, math.isqrt(k) + 1))


class ParameterBand:
    def __init__(self, security_bits, r_bits, pk_text, k_rho1_text, k_rho2_text):
        self.security_bits = security_bits
        self.r_bits = r_bits
        self.pk_text = pk_text
        self.k_rho1_text = k_rho1_text
        self.k_rho2_text = k_rho2_text
        self.pk_bits_min, self.pk_bits_max = (int(v) for v in pk_text.split("-"))
        self.k_range_rho1 = tuple(int(v) for v in k_rho1_text.split("-"))
        self.k_range_rho2 = tuple(int(v) for v in k_rho2_text.split("-"))

    def __repr__(self):
        return f"ParameterBand({self.security_bits})"

    def cells(self):
        return (str(self.security_bits), str(self.r_bits), self.pk_text,
                self.k_rho1_text, self.k_rho2_text)

    def to_dict(self):
        return {"security_bits": self.security_bits, "r_bits": self.r_bits,
                "pk_bits_min": self.pk_bits_min, "pk_bits_max": self.pk_bits_max,
                "k_rho1": self.k_rho1_text, "k_rho2": self.k_rho2_text}


def all_bands():
    return [ParameterBand(*row) for row in BANDS]


def band_lookup(security_bits):
    for band in all_bands():
        if band.security_bits == security_bits:
            return band
    levels = ", ".join(str(b[0]) for b in BANDS)
    raise ValueError(f"no band for {security_bits}-bit security (listed: {levels})")


def match_band(r_bits, pk_bits):
    """Highest band whose r size and minimum p^k size the parameters meet."""
    best = None
    for band in all_bands():
        if r_bits >= band.r_bits and pk_bits >= band.pk_bits_min:
            best = band
    return best


def check_128_constraint(rho, k):
    """3072 <= 256 rho k <= 5376."""
    v = 256 * Fraction(rho) * k
    return 3072 <= v <= 5376


class SecurityReport:
    def __init__(self, instance_ref, k, r_bits, p_bits, rho_actual, nfs_c, claimed_bits=None):
        self.instance_ref = instance_ref
        self.k = k
        self.r_bits = r_bits
        self.p_bits = p_bits
        self.pk_bits = k * p_bits
        self.rho_actual = rho_actual
        self.pollard_bits = r_bits // 2
        self.nfs_constant_c = nfs_c
        self.nfs_bits = int(l_notation_bits(self.pk_bits, 1 / 3, nfs_c))
        self.overall_bits = min(self.pollard_bits, self.nfs_bits)
        band = match_band(r_bits, self.pk_bits)
        self.band = band.security_bits if band else "out of band"
        self.claimed_bits = claimed_bits

    def claim_delta(self):
        if self.claimed_bits is None:
            return None
        return self.overall_bits - self.claimed_bits

    def claim_ok(self):
        d = self.claim_delta()
        return None if d is None else abs(d) <= CLAIM_TOLERANCE

    def to_dict(self):
        return {
            "instance": self.instance_ref,
            "k": self.k,
            "r_bits": self.r_bits,
            "p_bits": self.p_bits,
            "pk_bits": self.pk_bits,
            "rho": f"{self.rho_actual.numerator}/{self.rho_actual.denominator}",
            "pollard_bits": self.pollard_bits,
            "nfs_c": self.nfs_constant_c,
            "nfs_bits": self.nfs_bits,
            "overall_bits": self.overall_bits,
            "band": self.band,
            "claimed_bits": self.claimed_bits,
            "claim_ok": self.claim_ok(),
            "estimate": ESTIMATE_LABEL,
        }


def is_special_p(inst):
    """p is special when it is the family polynomial evaluated at the stored seed."""
    try:
        fd = get_family(inst.family)
    except KeyError:
        return False
    v = fd.p(inst.u)
    return v.denominator == 1 and int(v) == inst.p


def claimed_for(inst):
    for row in recommended_rows():
        if row.family == inst.family and row.seed == inst.u:
            return row.claimed_bits
    return None


def rate_instance(inst, k=None, special_p=None, claimed_bits=None, ref=None):
    k = k or inst.k
    if special_p is None:
        special_p = is_special_p(inst)
    composite = k > 3 and not _is_prime_small(k)
    c = C_SPECIAL if composite or special_p else C_GENERAL
    rho = Fraction(inst.p.bit_length(), inst.r.bit_length())
    if claimed_bits is None:
        claimed_bits = claimed_for(inst)
    ref = ref or f"{inst.family}@{format_int(inst.u)}"
    return SecurityReport(ref, k, inst.r.bit_length(), inst.p.bit_length(), rho, c, claimed_bits)


# -- recommended tables -----------------------------------------------------

class RecommendationRow:
    def __init__(self, provenance, curve, family, k, D, r_bits, p_bits, pk_bits,
                 seed_text, extra, claimed_bits):
        self.provenance = provenance
        self.curve = curve
        self.family = family
        self.k = k
        self.D = D
        self.r_bits = r_bits
        self.p_bits = p_bits
        self.pk_bits = pk_bits  # carried verbatim; several look suspicious
        self.seed_text = seed_text
        self.seed = parse_int(seed_text)
        self.extra = extra
        self.claimed_bits = claimed_bits
        self._repro = None

    @property
    def level(self):
        return 128 if self.provenance == "table-2.8" else 192

    def descriptor(self):
        return get_family(self.family) if self.family else None

    def instance(self):
        fd = self.descriptor()
        return instantiate(fd, self.seed) if fd else None

    def reproduce(self, rounds=DEFAULT_MR_ROUNDS):
        """pass / fail / no-family with the measured sizes."""
        if self._repro is not None:
            return self._repro
        out = {"status": "no-family", "r_bits": None, "p_bits": None,
               "p_prime": None, "r_prime": None, "cm_identity": None}
        if self.family:
            try:
                inst = self.instance()
            except FamilyError as e:
                out.update(status="fail", error=str(e))
            else:
                out.update(
                    r_bits=inst.r_bits, p_bits=inst.p_bits,
                    p_prime=is_probable_prime(inst.p, rounds),
                    r_prime=is_probable_prime(inst.r, rounds),
                    cm_identity=4 * inst.p - inst.t ** 2 == inst.D * inst.cm_y ** 2)
                ok = (inst.r_bits == self.r_bits and inst.p_bits == self.p_bits
                      and out["p_prime"] and out["r_prime"] and out["cm_identity"])
                out["status"] = "pass" if ok else "fail"
        self._repro = out
        return out

    def to_dict(self, reproduce=True):
        d = {"table": self.provenance, "curve": self.curve, "family": self.family or "-",
             "k": self.k, "D": self.D, "r_bits": self.r_bits, "p_bits": self.p_bits,
             "pk_bits": self.pk_bits, "seed": self.seed_text, "extra": self.extra or "",
             "security": self.claimed_bits}
        if reproduce:
            rep = self.reproduce()
            d.update(reproduced=rep["status"], r_bits_actual=rep["r_bits"],
                     p_bits_actual=rep["p_bits"])
        return d


_ROWS = None


def recommended_rows():
    global _ROWS
    if _ROWS is None:
        _ROWS = [RecommendationRow(*row) for row in RECOMMENDED]
    return _ROWS


def recommended_tables(bits=None):
    """Rows of the 128-bit and 192-bit recommendation tables, optionally one level."""
    rows = recommended_rows()
    if bits is not None:
        if bits not in (128, 192):
            raise ValueError("recommendations exist for 128 and 192 bits only")
        rows = [r for r in rows if r.level == bits]
    return rows
