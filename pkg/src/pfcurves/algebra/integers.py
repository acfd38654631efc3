"""Integer helpers: primality, text encodings, small factorizations."""

import math
import random
import re

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# deterministic for n < 3.3e24, which covers everything below 2**64
_DETERMINISTIC_BASES = _SMALL_PRIMES

DEFAULT_MR_ROUNDS = 40


def _mr_witness(n, d, s, a):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Miller-Rabin; exact below 2**64, `rounds` extra random bases above."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _DETERMINISTIC_BASES:
        if _mr_witness(n, d, s, a):
            return False
    if n < 1 << 64:
        return True
    rng = random.Random(n)
    for _ in range(rounds):
        if _mr_witness(n, d, s, rng.randrange(2, n - 1)):
            return False
    return True


def next_probable_prime(n, rounds=DEFAULT_MR_ROUNDS):
    n = max(n, 2)
    while not is_probable_prime(n, rounds):
        n += 1
    return n


def bitlen(n: int) -> int:
    return abs(n).bit_length()


def _pollard_rho(n, rng):
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        y = rng.randrange(0, n)
        m, g, r, q = 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, trial_limit: int = 10_000) -> dict:
    """Prime factorization of |n| as {prime: exponent}.

    Trial division, then Pollard rho on what is left. Intended for the
    desk-scale numbers this package feeds it (group orders, CM values);
    there is no size guard.
    """
    n = abs(n)
    out = {}
    if n < 2:
        return out
    for q in range(2, trial_limit):
        if q * q > n:
            break
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    stack = [n] if n > 1 else []
    rng = random.Random(0xC0FFEE)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_rho(m, rng)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def squarefree_decompose(n: int):
    """Return (s, v) with n = s * v**2 and s squarefree (sign kept on s)."""
    if n == 0:
        return 0, 0
    s, v = (-1 if n < 0 else 1), 1
    for q, e in factorize(n).items():
        v *= q ** (e // 2)
        if e % 2:
            s *= q
    return s, v


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


# -- text formats -----------------------------------------------------------

def format_int(n: int, base: str = "hex") -> str:
    """Decimal or lowercase 0x-hex with a leading minus for negatives."""
    if base == "dec":
        return str(n)
    return ("-" if n < 0 else "") + "0x" + format(abs(n), "x")


_TERM = re.compile(r"([+-]?)\s*(\d+)(?:\s*(?:\^|\*\*)\s*(\d+))?")


def parse_int(text: str) -> int:
    """Parse decimal, 0x-hex, or a power sum such as ``-2^192+2^188-1``.

    Unicode minus signs are accepted; so are ``**`` for powers.
    """
    s = str(text).strip().replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty integer literal")
    m = re.fullmatch(r"([+-]?)0[xX]([0-9a-fA-F]+)", s)
    if m:
        v = int(m.group(2), 16)
        return -v if m.group(1) == "-" else v
    if re.fullmatch(r"[+-]?\d+", s):
        return int(s)
    total, pos = 0, 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse integer {text!r}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing operator in {text!r}")
        base = int(m.group(2))
        v = base ** int(m.group(3)) if m.group(3) else base
        total += -v if m.group(1) == "-" else v
        pos = m.end()
    return total
