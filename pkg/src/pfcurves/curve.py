"""Short Weierstrass curves y^2 = x^3 + ax + b in affine coordinates."""

import math
import random
from fractions import Fraction

import numpy as np

from .algebra import ExtField, FieldElement, PrimeField, factorize, format_int
from .algebra.fields import field_sqrt

DEFAULT_NAIVE_BOUND = 10 ** 6


class RationalField:
    """Q, so the group law can be checked on textbook examples."""

    p = 0
    degree = 1

    def __call__(self, v):
        return Fraction(v)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


def _is_zero(v):
    return v.is_zero() if isinstance(v, FieldElement) else v == 0


def _text(v):
    if isinstance(v, FieldElement):
        return v.to_text()
    if isinstance(v, Fraction) and v.denominator != 1:
        return str(v)
    return format_int(int(v))


class SingularCurve(ValueError):
    pass


class Curve:
    def __init__(self, field, a, b):
        self.field = field
        self.a = field(a)
        self.b = field(b)
        if _is_zero(self.discriminant()):
            raise SingularCurve("discriminant is zero")

    def discriminant(self):
        return discriminant(self.field, self.a, self.b)

    @property
    def p(self):
        return self.field.p

    def __eq__(self, other):
        return (isinstance(other, Curve) and other.field == self.field
                and other.a == self.a and other.b == self.b)

    def __hash__(self):
        return hash((self.field, _text(self.a), _text(self.b)))

    def __repr__(self):
        return f"Curve(y^2 = x^3 + {_text(self.a)}*x + {_text(self.b)} over {self.field!r})"

    def rhs(self, x):
        return x * x * x + self.a * x + self.b

    def infinity(self):
        return Point(self, None, None)

    def point(self, x, y, check=True):
        P = Point(self, self.field(x), self.field(y))
        if check and not P.on_curve():
            raise ValueError("point is not on the curve")
        return P

    def contains(self, P):
        return P.curve == self and P.on_curve()

    def lift_x(self, x):
        """A point with the given x, or None when x^3+ax+b is a non-square."""
        x = self.field(x)
        y = field_sqrt(self.rhs(x))
        return None if y is None else Point(self, x, y)

    def random_point(self, rng=None):
        rng = rng or random
        while True:
            x = self.field.random(rng)
            y = field_sqrt(self.rhs(x))
            if y is None:
                continue
            if rng.randrange(2):
                y = -y
            return Point(self, x, y)

    def over(self, ext: ExtField):
        """Same equation over an extension of the base field."""
        return Curve(ext, ext(self.a), ext(self.b))

    def lift_point(self, P, ext_curve):
        if P.is_infinity():
            return ext_curve.infinity()
        return Point(ext_curve, ext_curve.field(P.x), ext_curve.field(P.y))

    def point_from_text(self, text):
        text = text.strip()
        if text == "O":
            return self.infinity()
        inner = text.strip("()")
        xs, ys = inner.split(",")
        return self.point(_coord_from_text(self.field, xs), _coord_from_text(self.field, ys))


def _coord_from_text(field, s):
    from .algebra import parse_int
    parts = [parse_int(t) for t in s.strip().split(":")]
    if isinstance(field, ExtField):
        return field(parts)
    return field(parts[0])


def discriminant(field, a, b):
    a, b = field(a), field(b)
    return (a * a * a * 4 + b * b * 27) * -16


class Point:
    __slots__ = ("curve", "x", "y")

    def __init__(self, curve, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    def is_infinity(self):
        return self.x is None

    def on_curve(self):
        if self.is_infinity():
            return True
        return self.y * self.y == self.curve.rhs(self.x)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.is_infinity() or other.is_infinity():
            return self.is_infinity() and other.is_infinity()
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity():
            return hash("O")
        return hash((self.x, self.y))

    def __repr__(self):
        return f"Point{self.to_text()}" if not self.is_infinity() else "Point(O)"

    def to_text(self):
        if self.is_infinity():
            return "O"
        return f"({_text(self.x)},{_text(self.y)})"

    def __neg__(self):
        if self.is_infinity():
            return self
        return Point(self.curve, self.x, -self.y)

    def __add__(self, Q):
        return add(self, Q)

    def __sub__(self, Q):
        return add(self, -Q)

    def __mul__(self, n):
        return scalar_mul(n, self)

    __rmul__ = __mul__


def slope(P, Q):
    """Chord or tangent slope; None for a vertical line."""
    if P.x == Q.x:
        if P.y != Q.y or _is_zero(P.y):
            return None
        return (P.x * P.x * 3 + P.curve.a) / (P.y * 2)
    return (Q.y - P.y) / (Q.x - P.x)


def add(P, Q):
    if P.is_infinity():
        return Q
    if Q.is_infinity():
        return P
    mu = slope(P, Q)
    if mu is None:
        return P.curve.infinity()
    x3 = mu * mu - P.x - Q.x
    y3 = mu * (P.x - x3) - P.y
    return Point(P.curve, x3, y3)


def scalar_mul(n, P):
    n = int(n)
    if n < 0:
        n, P = -n, -P
    R = P.curve.infinity()
    if n == 0 or P.is_infinity():
        return R
    for bit in bin(n)[2:]:
        R = add(R, R)
        if bit == "1":
            R = add(R, P)
    return R


class GroupInfo:
    def __init__(self, p, order):
        self.p = p
        self.order = order
        self.trace = p + 1 - order
        self._factorization = None

    @property
    def factorization(self):
        if self._factorization is None:
            self._factorization = sorted(factorize(self.order).items())
        return self._factorization

    def hasse_ok(self):
        return self.trace * self.trace <= 4 * self.p

    def __repr__(self):
        return f"GroupInfo(order={self.order}, trace={self.trace})"

    def to_dict(self):
        return {"p": self.p, "order": self.order, "trace": self.trace,
                "factorization": [[q, e] for q, e in self.factorization]}


def count_points_naive(curve, bound=DEFAULT_NAIVE_BOUND) -> GroupInfo:
    """#E(F_p) = 1 + sum over x of (1 + chi(x^3 + ax + b))."""
    if not isinstance(curve.field, PrimeField):
        raise ValueError("naive counting needs a prime field")
    p = curve.p
    if p > bound:
        raise ValueError(f"modulus {p} exceeds naive counting bound {bound}")
    a, b = int(curve.a), int(curve.b)
    xs = np.arange(p, dtype=np.int64)
    rhs = (xs * xs % p * xs + a * xs + b) % p
    squares = np.zeros(p, dtype=bool)
    squares[xs * xs % p] = True
    zero = int(np.count_nonzero(rhs == 0))
    residues = int(np.count_nonzero(squares[rhs])) - zero
    return GroupInfo(p, 1 + zero + 2 * residues)


def order_over_extension(p, t, k):
    """#E(F_{p^k}) from the base trace via t_{i+1} = t*t_i - p*t_{i-1}."""
    t_prev, t_cur = 2, t
    for _ in range(k - 1):
        t_prev, t_cur = t_cur, t * t_cur - p * t_prev
    return p ** k + 1 - t_cur


def find_point_of_order(curve, r, group_order, rng=None, attempts=1000):
    if r <= 1:
        raise ValueError("order must exceed 1")
    if group_order % r:
        raise ValueError(f"{r} does not divide the group order {group_order}")
    rng = rng or random
    h = group_order // r
    for _ in range(attempts):
        P = scalar_mul(h, curve.random_point(rng))
        if not P.is_infinity():
            if not scalar_mul(r, P).is_infinity():
                raise ValueError("group order is inconsistent with the curve")
            return P
    raise RuntimeError("no point of the requested order found")


def is_supersingular(curve, bound=DEFAULT_NAIVE_BOUND) -> bool:
    info = count_points_naive(curve, bound)
    return info.trace % curve.p == 0


def hasse_interval(p):
    s = 2 * math.isqrt(p) + 2
    lo = p + 1 - s
    hi = p + 1 + s
    # tighten to the exact integer bound |t| <= 2*sqrt(p)
    while (p + 1 - lo) ** 2 > 4 * p:
        lo += 1
    while (hi - p - 1) ** 2 > 4 * p:
        hi -= 1
    return lo, hi
