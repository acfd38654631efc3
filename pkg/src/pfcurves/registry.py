"""On-disk curve registry: one JSON document, re-validated on every load."""

import contextlib
import datetime
import fcntl
import json
import os
import random

from .algebra import DEFAULT_MR_ROUNDS, PrimeField, format_int
from .curve import Curve, DEFAULT_NAIVE_BOUND, count_points_naive, scalar_mul
from .families import CurveInstance
from .protocols import DIGEST

SCHEMA_VERSION = 1
PROVENANCES = ("searched", "table-2.8", "table-2.9", "manual")


class RegistryError(ValueError):
    """A registry file or entry failed validation; the message names the reason."""


def entry_id(family, u):
    tag = str(u) if abs(u) < 1 << 20 else format_int(u)
    return f"{family.lower()}-u{tag}"


def utc_now():
    return datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


class RegistryEntry:
    def __init__(self, instance: CurveInstance, provenance="searched", security=None,
                 created_at=None, id=None):
        if provenance not in PROVENANCES:
            raise RegistryError(f"unknown provenance {provenance!r}")
        self.instance = instance
        self.provenance = provenance
        self.security = security
        self.created_at = created_at or utc_now()
        self.id = id or entry_id(instance.family, instance.u)

    def to_dict(self):
        d = {"id": self.id}
        d.update(self.instance.to_dict())
        d["security"] = self.security
        d["provenance"] = self.provenance
        d["created_at"] = self.created_at
        return d

    @classmethod
    def from_dict(cls, d):
        try:
            inst = CurveInstance.from_dict(d)
            return cls(inst, d["provenance"], d.get("security"), d["created_at"], d["id"])
        except (KeyError, TypeError, ValueError) as e:
            name = d.get("id", "?") if isinstance(d, dict) else "?"
            raise RegistryError(f"entry {name}: malformed ({e})") from None


def validate_entry(entry: RegistryEntry, rounds=DEFAULT_MR_ROUNDS,
                   naive_bound=DEFAULT_NAIVE_BOUND):
    """None if the entry is sound, else the first failing reason."""
    inst = entry.instance
    checks = inst.checks(rounds)
    for name in ("p_prime", "r_prime", "order_relation", "cm_identity", "embedding_degree"):
        if not checks[name]:
            return name.replace("_", " ") + " check failed"
    if inst.curve:
        try:
            curve = Curve(PrimeField(inst.p, check=False), inst.curve["a"], inst.curve["b"])
        except ValueError:
            return "curve is singular"
        order = inst.cofactor * inst.r
        if inst.p <= naive_bound:
            if count_points_naive(curve, naive_bound).order != order:
                return "curve order differs from cofactor * r"
        else:
            rng = random.Random(inst.p)
            for _ in range(3):
                if not scalar_mul(order, curve.random_point(rng)).is_infinity():
                    return "curve order differs from cofactor * r"
    return None


class Registry:
    def __init__(self, path=None, entries=None):
        self.path = path
        self.entries = list(entries or [])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def get(self, eid):
        for e in self.entries:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def add(self, entry):
        """False when an entry with the same id is already present."""
        if any(e.id == entry.id for e in self.entries):
            return False
        self.entries.append(entry)
        return True

    def to_json(self):
        doc = {"schema_version": SCHEMA_VERSION, "hash_digest": DIGEST,
               "entries": [e.to_dict() for e in self.entries]}
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text, path=None, rounds=DEFAULT_MR_ROUNDS, validate=True):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise RegistryError(f"registry is not valid JSON: {e}") from None
        if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
            raise RegistryError(f"unsupported schema_version {doc.get('schema_version')!r}"
                                if isinstance(doc, dict) else "registry must be a JSON object")
        entries = []
        seen = set()
        for raw in doc.get("entries", []):
            e = RegistryEntry.from_dict(raw)
            if e.id in seen:
                raise RegistryError(f"entry {e.id}: duplicate id")
            seen.add(e.id)
            if validate:
                reason = validate_entry(e, rounds)
                if reason:
                    raise RegistryError(f"entry {e.id}: {reason}")
            entries.append(e)
        return cls(path, entries)

    @classmethod
    def load(cls, path, rounds=DEFAULT_MR_ROUNDS):
        if not os.path.exists(path):
            return cls(path)
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read(), path, rounds)

    def save(self, path=None):
        path = path or self.path
        tmp = f"{path}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
        os.replace(tmp, path)


@contextlib.contextmanager
def locked(path, rounds=DEFAULT_MR_ROUNDS):
    """Load, yield and save the registry under an exclusive advisory lock."""
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    with open(f"{path}.lock", "w") as lock:
        fcntl.flock(lock, fcntl.LOCK_EX)
        try:
            reg = Registry.load(path, rounds)
            yield reg
            reg.save(path)
        finally:
            fcntl.flock(lock, fcntl.LOCK_UN)

