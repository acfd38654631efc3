"""Exact univariate polynomials over Q.

Coefficients are stored low degree first as ``fractions.Fraction``.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c.strip())
    return Fraction(c)


class RatPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, deg, c=1):
        return cls([0] * deg + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPolynomial.constant(other)
        if not isinstance(other, RatPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPolynomial({str(self)!r})"

    def __str__(self):
        return self.format("x")

    def format(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, RatPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RatPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = RatPolynomial.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c):
        if isinstance(c, RatPolynomial):
            q, r = divmod(self, c)
            if r:
                raise ValueError("polynomial division is not exact")
            return q
        c = _frac(c)
        return RatPolynomial(a / c for a in self.coeffs)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None or other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        if len(rem) - 1 < dd:
            return RatPolynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1 - dd, -1, -1):
            c = rem[i + dd] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return RatPolynomial(quot), RatPolynomial(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, v):
        """Horner evaluation at an integer, Fraction, or polynomial."""
        if isinstance(v, RatPolynomial):
            acc = RatPolynomial()
            for c in reversed(self.coeffs):
                acc = acc * v + c
            return acc
        acc = Fraction(0) if not isinstance(v, int) else 0
        if isinstance(v, int):
            # integer numerator / common denominator keeps big seeds fast
            den = self.denominator()
            acc = 0
            for c in reversed(self.coeffs):
                acc = acc * v + c.numerator * (den // c.denominator)
            return Fraction(acc, den)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    # -- misc ---------------------------------------------------------------

    def denominator(self) -> int:
        """Least common denominator of the coefficients."""
        return lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive in Z[x]."""
        if not self.coeffs:
            return Fraction(0)
        den = self.denominator()
        nums = [int(c * den) for c in self.coeffs]
        g = 0
        for n in nums:
            g = gcd(g, n)
        return Fraction(g, den)

    def monic(self):
        return self / self.leading

    def derivative(self):
        return RatPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def sqrt(self):
        """Exact square root in Q[x] (leading coefficient must be a rational
        square), or None."""
        if not self.coeffs:
            return RatPolynomial()
        if self.degree % 2:
            return None
        lead = self.leading
        if lead < 0:
            return None
        ln, ld = _isqrt_exact(lead.numerator), _isqrt_exact(lead.denominator)
        if ln is None or ld is None:
            return None
        # coefficient-by-coefficient from the top
        m = self.degree // 2
        root = [Fraction(0)] * (m + 1)
        root[m] = Fraction(ln, ld)
        for i in range(m - 1, -1, -1):
            # coefficient of x^(m+i) in root^2
            acc = self[m + i]
            for j in range(i + 1, m):
                acc -= root[j] * root[m + i - j]
            root[i] = acc / (2 * root[m])
        cand = RatPolynomial(root)
        return cand if cand * cand == self else None

    def compose(self, inner):
        return self(inner)

    def to_json(self):
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, items):
        return cls(Fraction(s) for s in items)


def _isqrt_exact(n):
    from math import isqrt
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


X = RatPolynomial.x()


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> RatPolynomial:
    """k-th cyclotomic polynomial, by dividing x^k - 1 by the lower ones."""
    if k < 1:
        raise ValueError("cyclotomic index must be positive")
    f = RatPolynomial.monomial(k) - 1
    for d in range(1, k):
        if k % d == 0:
            f = divmod(f, cyclotomic(d))[0]
    return f


def poly_divides(a: RatPolynomial, b: RatPolynomial):
    """Return (True, q) when b == a*q exactly over Q, else (False, None)."""
    if a.is_zero():
        raise ZeroDivisionError("divisor must be nonzero")
    q, r = divmod(b, a)
    return (True, q) if r.is_zero() else (False, None)


def poly_eval(f: RatPolynomial, u) -> Fraction:
    return Fraction(f(u))


def euler_phi(n: int) -> int:
    result, m, q = n, n, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def poly_mod_inverse(a: RatPolynomial, m: RatPolynomial) -> RatPolynomial:
    """Inverse of a in Q[x]/(m); raises ValueError if they share a factor."""
    r0, r1 = m, a % m
    s0, s1 = RatPolynomial(), RatPolynomial.constant(1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ValueError("polynomial is not invertible modulo m")
    return (s0 / r0.leading) % m


def is_irreducible_over_q(f: RatPolynomial) -> bool:
    """Irreducibility over Q (delegates factoring to sympy)."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    from sympy import Poly, Rational, symbols
    x = symbols("x")
    sp = Poly([Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], x)
    return sp.is_irreducible


def factor_over_q(f: RatPolynomial):
    """Irreducible factors of f over Q as RatPolynomials (no multiplicities)."""
    from sympy import Poly, Rational, factor_list, symbols
    x = symbols("x")
    sp = Poly([Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], x)
    _, facs = factor_list(sp)
    out = []
    for g, _mult in facs:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        out.append(RatPolynomial(cs))
    return out


def parse_poly(text: str, var: str = "u") -> RatPolynomial:
    """Parse an arithmetic expression in one variable, e.g. "(u-1)^2*(u^4-u^2+1)/3 + u".

    Accepts + - * / and ^ or ** with non-negative integer exponents.
    """
    import ast

    src = text.replace("^", "**").replace("−", "-")
    tree = ast.parse(src, mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return RatPolynomial.constant(node.value)
        if isinstance(node, ast.Name):
            if node.id not in (var, "x", "u"):
                raise ValueError(f"unknown symbol {node.id!r}")
            return X
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a = ev(node.left)
            if isinstance(node.op, ast.Pow):
                e = ev(node.right)
                if e.degree > 0 or e[0].denominator != 1 or e[0] < 0:
                    raise ValueError("exponent must be a non-negative integer")
                return a ** int(e[0])
            b = ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b.degree > 0:
                    return a / b
                return a / b[0]
        raise ValueError(f"unsupported expression in {text!r}")

    return ev(tree)
