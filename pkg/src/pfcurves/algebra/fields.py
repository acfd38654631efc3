"""Prime fields, single degree-k extensions, and their elements.

Extension elements are coefficient tuples (low degree first) modulo a monic
irreducible reduction polynomial over F_p. Polynomials over F_p used here
are plain int lists, low degree first.
"""

import random

from .integers import DEFAULT_MR_ROUNDS, factorize, format_int, is_probable_prime


class FieldMismatch(ValueError):
    pass


# -- polynomial helpers over F_p --------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def fp_poly_divmod(a, b, p):
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = [c % p for c in a]
    _trim(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] * inv_lead % p
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _trim(q), _trim(a[:db])


def fp_poly_mod(a, b, p):
    return fp_poly_divmod(a, b, p)[1]


def fp_poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def fp_poly_gcd(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, fp_poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def fp_poly_powmod(base, e, mod, p):
    result = [1]
    base = fp_poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = fp_poly_mod(fp_poly_mul(result, base, p), mod, p)
        base = fp_poly_mod(fp_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible_fp(f, p) -> bool:
    """Rabin's test for a monic polynomial f over F_p."""
    f = _trim([c % p for c in f])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]

    def frob_pow(i):
        # x^(p^i) mod f by repeated p-th powering
        h = x
        for _ in range(i):
            h = fp_poly_powmod(h, p, f, p)
        return h

    if fp_poly_sub(frob_pow(k), x, p):
        return False
    for q in factorize(k):
        h = fp_poly_sub(frob_pow(k // q), x, p)
        if len(fp_poly_gcd(h, f, p)) != 1:
            return False
    return True


# -- fields -----------------------------------------------------------------

class PrimeField:
    degree = 1

    def __init__(self, p: int, rounds: int = DEFAULT_MR_ROUNDS, check: bool = True):
        if check and not is_probable_prime(p, rounds):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self._nonresidue = None

    @property
    def order(self):
        return self.p

    @property
    def prime_field(self):
        return self

    def __call__(self, v):
        if isinstance(v, FieldElement):
            if v.field is self:
                return v
            raise FieldMismatch("element belongs to another field")
        return FieldElement(self, (int(v) % self.p,))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def random(self, rng=None):
        rng = rng or random
        return self(rng.randrange(self.p))

    def contains(self, e):
        return isinstance(e, FieldElement) and e.field == self


class ExtField:
    """F_p[x]/(f) for a monic irreducible f of degree k."""

    def __init__(self, base: PrimeField, k: int, modulus=None, rng=None):
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.base = base
        self.p = base.p
        self.degree = k
        if modulus is None:
            modulus = find_irreducible(base, k, rng=rng)
        modulus = [int(c) % self.p for c in modulus]
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("reduction polynomial must be monic of degree k")
        if not is_irreducible_fp(modulus, self.p):
            raise ValueError("reduction polynomial is reducible")
        self.modulus = tuple(modulus)
        # x^k = beta shortcut for binomials
        self._binomial = all(c == 0 for c in modulus[1:k])
        self._beta = (-modulus[0]) % self.p
        self._nonresidue = None

    @property
    def order(self):
        return self.p ** self.degree

    @property
    def prime_field(self):
        return self.base

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("Fq", self.p, self.modulus))

    def __repr__(self):
        return f"ExtField(p={self.p}, k={self.degree})"

    def __call__(self, v):
        if isinstance(v, FieldElement):
            if v.field == self:
                return v
            if v.field == self.base:
                return self.embed(v)
            raise FieldMismatch("element belongs to another field")
        if isinstance(v, (list, tuple)):
            cs = [int(c) % self.p for c in v]
            if len(cs) > self.degree:
                cs = fp_poly_mod(cs, list(self.modulus), self.p)
            cs += [0] * (self.degree - len(cs))
            return FieldElement(self, tuple(cs))
        return FieldElement(self, (int(v) % self.p,) + (0,) * (self.degree - 1))

    def embed(self, e):
        return FieldElement(self, (e.c[0],) + (0,) * (self.degree - 1))

    def gen(self):
        return self([0, 1])

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def random(self, rng=None):
        rng = rng or random
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.degree)))

    def contains(self, e):
        return isinstance(e, FieldElement) and e.field == self

    def _mul(self, a, b):
        k, p = self.degree, self.p
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        if self._binomial:
            beta = self._beta
            for i in range(2 * k - 2, k - 1, -1):
                prod[i - k] += prod[i] * beta
            return tuple(c % p for c in prod[:k])
        m = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return tuple(c % p for c in prod[:k])

    def _inv(self, a):
        # extended Euclid in F_p[x] against the modulus
        p = self.p
        r0, r1 = list(self.modulus), _trim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, r = fp_poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, fp_poly_sub(s0, fp_poly_mul(q, s1, p), p)
        inv = pow(r0[0], -1, p)
        out = [c * inv % p for c in s0]
        out += [0] * (self.degree - len(out))
        return tuple(out)


class FieldElement:
    __slots__ = ("field", "c")

    def __init__(self, field, coords):
        self.field = field
        self.c = coords

    # coercion: ints, and prime-field elements into their extension
    def _other(self, o):
        if isinstance(o, FieldElement):
            if o.field is self.field or o.field == self.field:
                return o
            if isinstance(self.field, ExtField) and o.field == self.field.base:
                return self.field.embed(o)
            raise FieldMismatch("operands live in different fields")
        if isinstance(o, int):
            return self.field(o)
        return None

    def _lift(self, o):
        """Return (self', o') in a common field, embedding into an extension."""
        if (isinstance(o, FieldElement) and isinstance(o.field, ExtField)
                and self.field == o.field.base):
            return o.field.embed(self), o
        o2 = self._other(o)
        return self, o2

    def __add__(self, o):
        a, b = self._lift(o)
        if b is None:
            return NotImplemented
        p = a.field.p
        return FieldElement(a.field, tuple((x + y) % p for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-x) % p for x in self.c))

    def __sub__(self, o):
        a, b = self._lift(o)
        if b is None:
            return NotImplemented
        p = a.field.p
        return FieldElement(a.field, tuple((x - y) % p for x, y in zip(a.c, b.c)))

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, int):
            p = self.field.p
            return FieldElement(self.field, tuple(x * o % p for x in self.c))
        a, b = self._lift(o)
        if b is None:
            return NotImplemented
        if a.field.degree == 1:
            return FieldElement(a.field, (a.c[0] * b.c[0] % a.field.p,))
        if b.field.degree > 1 and not any(b.c[1:]):
            p = a.field.p
            return FieldElement(a.field, tuple(x * b.c[0] % p for x in a.c))
        return FieldElement(a.field, a.field._mul(a.c, b.c))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        if self.field.degree == 1:
            return FieldElement(self.field, (pow(self.c[0], -1, self.field.p),))
        return FieldElement(self.field, self.field._inv(self.c))

    def __truediv__(self, o):
        a, b = self._lift(o)
        if b is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            return self.inverse() ** (-e)
        if self.field.degree == 1:
            return FieldElement(self.field, (pow(self.c[0], e, self.field.p),))
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, o):
        if isinstance(o, int):
            o = self.field(o)
        if not isinstance(o, FieldElement):
            return NotImplemented
        if o.field == self.field:
            return o.c == self.c
        # a base element equals its embedding
        if isinstance(self.field, ExtField) and o.field == self.field.base:
            return self.c == self.field.embed(o).c
        if isinstance(o.field, ExtField) and self.field == o.field.base:
            return o.c == o.field.embed(self).c
        return False

    def __hash__(self):
        if not any(self.c[1:]):
            return hash((self.field.p, self.c[0]))
        return hash((self.field.p, self.c))

    def __int__(self):
        if any(self.c[1:]):
            raise ValueError("extension element is not in the prime field")
        return self.c[0]

    def __repr__(self):
        return f"FieldElement({self.to_text()})"

    def to_text(self):
        """Hex text; extension coordinates are colon-joined, low degree first."""
        return ":".join(format_int(x) for x in self.c)

    def is_zero(self):
        return not any(self.c)

    def is_one(self):
        return self.c[0] == 1 and not any(self.c[1:])

    def in_base(self):
        return not any(self.c[1:])

    def is_square(self):
        if self.is_zero():
            return True
        q = self.field.order
        return (self ** ((q - 1) // 2)).is_one()

    def sqrt(self):
        """A square root in the same field, or None for non-residues."""
        return field_sqrt(self)

    def multiplicative_order(self):
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        n = self.field.order - 1
        order = n
        for q, e in factorize(n).items():
            for _ in range(e):
                if (self ** (order // q)).is_one():
                    order //= q
                else:
                    break
        return order


def _nonresidue(field):
    if field._nonresidue is None:
        rng = random.Random(field.p)
        q = field.order
        while True:
            z = field.random(rng)
            if not z.is_zero() and not (z ** ((q - 1) // 2)).is_one():
                field._nonresidue = z
                break
    return field._nonresidue


def field_sqrt(a: FieldElement):
    """Tonelli-Shanks over any odd-order finite field; direct exponent when
    the order is 3 mod 4."""
    field = a.field
    if a.is_zero():
        return a
    q = field.order
    if q % 2 == 0:
        raise ValueError("characteristic 2 is not supported")
    if not (a ** ((q - 1) // 2)).is_one():
        return None
    if q % 4 == 3:
        return a ** ((q + 1) // 4)
    s, m = 0, q - 1
    while m % 2 == 0:
        m //= 2
        s += 1
    z = _nonresidue(field)
    c = z ** m
    x = a ** ((m + 1) // 2)
    t = a ** m
    while not t.is_one():
        i, t2 = 0, t
        while not t2.is_one():
            t2 = t2 * t2
            i += 1
        b = c
        for _ in range(s - i - 1):
            b = b * b
        x = x * b
        c = b * b
        t = t * c
        s = i
    return x


def sqrt_mod(a: FieldElement):
    """Square root of a prime-field element, or None."""
    if a.field.degree != 1:
        raise ValueError("sqrt_mod expects a prime-field element")
    return field_sqrt(a)


def _beta_candidates():
    n = 1
    yield -1
    while True:
        n += 1
        yield n
        yield -n


def find_irreducible(base: PrimeField, k: int, rng=None, binomial_budget: int = 64):
    """Monic irreducible of degree k over F_p as an int list, low degree first.

    Tries binomials x^k - beta for beta = -1, 2, -2, 3, ... then random
    monic polynomials.
    """
    p = base.p
    if k == 1:
        return [0, 1]
    tried = 0
    for beta in _beta_candidates():
        if tried >= binomial_budget or abs(beta) >= p:
            break
        tried += 1
        f = [(-beta) % p] + [0] * (k - 1) + [1]
        if is_irreducible_fp(f, p):
            return f
    rng = rng or random.Random(p * 1000 + k)
    while True:
        f = [rng.randrange(p) for _ in range(k)] + [1]
        if f[0] and is_irreducible_fp(f, p):
            return f
