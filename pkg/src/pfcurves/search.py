"""Seed searches over a family, chunked so results do not depend on worker count."""

import random
from concurrent.futures import ProcessPoolExecutor

from .algebra import DEFAULT_MR_ROUNDS, is_probable_prime
from .families import FamilyError, instantiate

CHUNK = 512


class SearchError(ValueError):
    pass


def parse_range(text):
    """'A..B' (inclusive) with any integer syntax on either side."""
    from .algebra import parse_int
    if ".." not in text:
        raise SearchError(f"range must look like A..B, got {text!r}")
    a, b = text.split("..", 1)
    lo, hi = parse_int(a), parse_int(b)
    if lo > hi:
        raise SearchError(f"empty range {text}")
    return lo, hi


def check_seed(fd, u, rounds=DEFAULT_MR_ROUNDS):
    """The instance at u if p and r are both prime, else None."""
    if not fd.admissible(u):
        return None
    try:
        inst = instantiate(fd, u)
    except FamilyError:
        return None
    if inst.p < 2 or inst.r < 2:
        return None
    # r is usually the smaller of the two, test it first
    if not is_probable_prime(inst.r, rounds) or not is_probable_prime(inst.p, rounds):
        return None
    if not inst.embedding_degree_ok():
        return None
    return inst


def _scan_chunk(args):
    fd, seeds, rounds = args
    return [inst for inst in (check_seed(fd, u, rounds) for u in seeds) if inst]


def _chunks(seeds, size):
    buf = []
    for u in seeds:
        buf.append(u)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def _run(fd, chunk_iter, workers, rounds, count):
    found = []
    jobs = ((fd, c, rounds) for c in chunk_iter)
    if workers <= 1:
        results = map(_scan_chunk, jobs)
        for hits in results:
            found.extend(hits)
            if count and len(found) >= count:
                break
        return found[:count] if count else found
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps chunk order, so the merged list is identical for any worker count
        for hits in pool.map(_scan_chunk, jobs, chunksize=1):
            found.extend(hits)
            if count and len(found) >= count:
                break
    return found[:count] if count else found


def search_seeds(fd, lo, hi, count=None, workers=1, rounds=DEFAULT_MR_ROUNDS):
    """Instances for u in [lo, hi] in ascending u, at most `count` of them."""
    if lo > hi:
        raise SearchError("empty range")
    if not fd.is_valid:
        raise SearchError(f"family {fd.name} did not validate ({fd.status})")
    return _run(fd, _chunks(range(lo, hi + 1), CHUNK), workers, rounds, count)


def _r_bits_at(fd, u):
    v = abs(fd.r(u))
    return (v.numerator // (v.denominator * fd.r_content)).bit_length()


def seed_interval(fd, r_bits, sign=1):
    """Smallest and largest |u| (with the given sign) where r(u) has r_bits bits,
    assuming |r(u)| grows with |u| in that region. None if not reachable."""
    def bits(m):
        return _r_bits_at(fd, sign * m)

    def first_at_least(target):
        hi = 1
        while bits(hi) < target:
            hi *= 2
            if hi.bit_length() > 4096:
                return None
        lo = hi // 2
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if bits(mid) >= target:
                hi = mid
            else:
                lo = mid
        return hi

    a = first_at_least(r_bits)
    b = first_at_least(r_bits + 1)
    if a is None or b is None or b <= a:
        return None
    return a, b - 1


def search_bits(fd, r_bits, count=1, workers=1, rounds=DEFAULT_MR_ROUNDS, rng_seed=0,
                budget=200_000):
    """Random seeds (both signs) whose r(u) has exactly r_bits bits.

    Candidates are drawn from one seeded generator before any testing, so
    the result is the same for every worker count.
    """
    if not fd.is_valid:
        raise SearchError(f"family {fd.name} did not validate ({fd.status})")
    spans = []
    for s in (1, -1):
        iv = seed_interval(fd, r_bits, s)
        if iv:
            spans.append((iv[0], iv[1]) if s > 0 else (-iv[1], -iv[0]))
    if not spans:
        raise SearchError(f"no seeds give {r_bits}-bit r for {fd.name}")
    rng = random.Random(rng_seed)
    M, residues = fd.seed_modulus, fd.seed_residues
    total = sum(hi - lo + 1 for lo, hi in spans)

    def candidates():
        if total <= budget:
            # small window: every admissible seed, in a seeded order
            pool = [u for lo, hi in spans for u in range(lo, hi + 1) if u % M in residues]
            rng.shuffle(pool)
            yield from pool
            return
        seen = set()
        for _ in range(budget):
            lo, hi = spans[rng.randrange(len(spans))]
            u = rng.randint(lo, hi)
            u += (rng.choice(residues) - u) % M
            if u <= hi and u not in seen:
                seen.add(u)
                yield u

    hits = _run(fd, _chunks(candidates(), 64), workers, rounds, count)
    return [inst for inst in hits if inst.r_bits == r_bits]
