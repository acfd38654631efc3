"""pfcurves command-line interface.

Exit codes: 0 ok, 2 unknown name, 3 empty result, 4 failed check, 1 anything else.
"""

import argparse
import csv
import json
import os
import random
import sys

from .algebra import DEFAULT_MR_ROUNDS, format_int, parse_int, parse_poly
from .curve import DEFAULT_NAIVE_BOUND

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN, EXIT_EMPTY, EXIT_FAILED = 0, 1, 2, 3, 4
DEFAULT_REGISTRY = "pfcurves-registry.json"
FORMATS = ("table", "json", "csv")


class CliFailure(Exception):
    def __init__(self, message, code=EXIT_ERROR):
        super().__init__(message)
        self.code = code


class Parser(argparse.ArgumentParser):
    # no prefix matching: --r must not be read as --registry
    def __init__(self, *a, **kw):
        kw.setdefault("allow_abbrev", False)
        super().__init__(*a, **kw)

    # usage errors are "everything else"; 2 is reserved for unknown names
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class CliConfig:
    ENV = {
        "mr_rounds": ("PFCURVES_MR_ROUNDS", int, DEFAULT_MR_ROUNDS),
        "naive_count_bound": ("PFCURVES_NAIVE_BOUND", int, DEFAULT_NAIVE_BOUND),
        "search_workers": ("PFCURVES_WORKERS", int, 1),
        "rng_seed": ("PFCURVES_RNG_SEED", int, 0),
        "output_format": ("PFCURVES_FORMAT", str, "table"),
        "registry": ("PFCURVES_REGISTRY", str, DEFAULT_REGISTRY),
        "figure_dir": ("PFCURVES_FIGURE_DIR", str, None),
    }

    def __init__(self, **values):
        for key, (var, conv, default) in self.ENV.items():
            v = values.get(key)
            if v is None and os.environ.get(var):
                v = conv(os.environ[var])
            setattr(self, key, default if v is None else v)
        for key in ("mr_rounds", "naive_count_bound", "search_workers"):
            if getattr(self, key) < 1:
                raise CliFailure(f"{key} must be positive")
        if self.output_format not in FORMATS:
            raise CliFailure(f"unknown format {self.output_format!r}")

    @classmethod
    def from_args(cls, args):
        return cls(mr_rounds=getattr(args, "mr_rounds", None),
                   naive_count_bound=getattr(args, "naive_bound", None),
                   search_workers=getattr(args, "workers", None),
                   rng_seed=getattr(args, "rng_seed", None),
                   output_format=getattr(args, "format", None),
                   registry=getattr(args, "registry", None),
                   figure_dir=getattr(args, "figure_dir", None))


# -- output -------------------------------------------------------------------

def _cell(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def emit(rows, columns, fmt, out=None, title=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump([{c: r.get(c) for c in columns} for r in rows], out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        w = csv.DictWriter(out, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({c: r.get(c) for c in columns})
        return
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    if title:
        out.write(title + "\n")
    out.write(" | ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    out.write("-+-".join("-" * w for w in widths) + "\n")
    for row in cells:
        out.write(" | ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def emit_record(record, fmt, out=None):
    """One object: JSON as is, otherwise key/value lines."""
    out = out or sys.stdout
    if fmt == "json":
        json.dump(record, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        emit([{"key": k, "value": json.dumps(v) if isinstance(v, (dict, list)) else v}
              for k, v in record.items()], ["key", "value"], "csv", out)
        return
    width = max(len(k) for k in record)
    for k, v in record.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        out.write(f"{k.ljust(width)} : {_cell(v)}\n")


def emit_transcript(record, out=None):
    out = out or sys.stdout
    json.dump(record, out, indent=2)
    out.write("\n")


def _figure(cfg, fn, *args):
    if cfg.figure_dir:
        from . import plotting
        path = getattr(plotting, fn)(*args, cfg.figure_dir)
        print(f"figure: {path}", file=sys.stderr)


def _family(name):
    from .families import get_family
    try:
        return get_family(name)
    except KeyError:
        raise CliFailure(f"unknown family {name!r}", EXIT_UNKNOWN) from None


# -- families -----------------------------------------------------------------

def _rho_text(f):
    return None if f is None else f"{f.numerator}/{f.denominator}"


def cmd_families(args, cfg):
    from .families import builtin_catalog
    if args.action == "list":
        rows = []
        for fd in builtin_catalog():
            rows.append({"name": fd.name, "k": fd.k, "D": fd.D, "rho": _rho_text(fd.rho),
                         "kind": fd.kind, "status": fd.status,
                         "transcription": fd.transcription})
        emit(rows, ["name", "k", "D", "rho", "kind", "status", "transcription"],
             cfg.output_format)
        _figure(cfg, "rho_vs_k", [dict(r, rho=float(fd.rho) if fd.rho else None)
                                  for r, fd in zip(rows, builtin_catalog())])
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise CliFailure("families show needs a NAME")
        fd = _family(args.name)
        d = fd.to_dict()
        for key in ("p", "r", "t", "y", "g", "h"):
            poly = getattr(fd, key)
            if poly is not None:
                d[key] = poly.format("u")
        emit_record(d, cfg.output_format)
        return EXIT_OK
    # validate
    fds = [_family(args.name)] if args.name else builtin_catalog()
    if cfg.output_format == "json":
        emit_transcript({"families": [dict(fd.report.to_dict(), k=fd.k, kind=fd.kind,
                                           transcription=fd.transcription) for fd in fds]})
        return EXIT_OK
    rows = []
    for fd in fds:
        rep = fd.report
        row = {"family": fd.name, "status": rep.status}
        for c in rep.checks:
            row[c.name] = c.status
        row["notes"] = "; ".join(rep.notes)
        rows.append(row)
    from .families import CHECKS
    emit(rows, ["family", "status", *CHECKS, "notes"], cfg.output_format)
    if args.name and cfg.output_format == "table":
        for c in fds[0].report.checks:
            print(f"  {c.name}: {c.status}  {c.detail}")
    return EXIT_OK


# -- search -------------------------------------------------------------------

def _provenance_for(family, u, default):
    from .security import recommended_rows
    for row in recommended_rows():
        if row.family == family and row.seed == u:
            return row.provenance
    return default


def _entries_for(instances, cfg, provenance, synthesize):
    from .families import FamilyError, synthesize_curve
    from .registry import RegistryEntry
    from .security import rate_instance
    rng = random.Random(cfg.rng_seed)
    out = []
    for inst in instances:
        if synthesize and inst.D in (1, 3):
            try:
                inst = synthesize_curve(inst, rng, naive_bound=cfg.naive_count_bound)
            except FamilyError:
                pass
        prov = _provenance_for(inst.family, inst.u, provenance)
        out.append(RegistryEntry(inst, prov, rate_instance(inst).to_dict()))
    return out


def cmd_search(args, cfg):
    from .search import SearchError, check_seed, parse_range, search_bits, search_seeds
    fd = _family(args.family)
    workers = args.workers or cfg.search_workers
    try:
        if args.seed is not None:
            u = parse_int(args.seed)
            inst = check_seed(fd, u, cfg.mr_rounds)
            hits, prov = ([inst] if inst else []), "manual"
        elif args.seed_range:
            lo, hi = parse_range(args.seed_range)
            hits = search_seeds(fd, lo, hi, args.count, workers, cfg.mr_rounds)
            prov = "searched"
        elif args.r_bits:
            hits = search_bits(fd, args.r_bits, args.count or 1, workers, cfg.mr_rounds,
                               cfg.rng_seed, args.budget)
            prov = "searched"
        else:
            raise CliFailure("give one of --seed, --seed-range or --r-bits")
    except SearchError as e:
        raise CliFailure(str(e)) from None
    if not hits:
        print("no curves found", file=sys.stderr)
        return EXIT_EMPTY
    entries = _entries_for(hits, cfg, prov, args.synthesize)
    if not args.no_save:
        from .registry import locked
        with locked(cfg.registry, cfg.mr_rounds) as reg:
            added = sum(reg.add(e) for e in entries)
        print(f"registry {cfg.registry}: {added} new of {len(entries)}", file=sys.stderr)
    if cfg.output_format == "json":
        # newline-delimited, same schema as registry entries
        for e in entries:
            print(json.dumps(e.to_dict()))
    else:
        rows = [{"id": e.id, "seed": format_int(e.instance.u), "r_bits": e.instance.r_bits,
                 "p_bits": e.instance.p_bits, "D": e.instance.D,
                 "cofactor": format_int(e.instance.cofactor),
                 "curve": (f"a={e.instance.curve['a']},b={e.instance.curve['b']}"
                           if e.instance.curve else None),
                 "provenance": e.provenance} for e in entries]
        emit(rows, ["id", "seed", "r_bits", "p_bits", "D", "cofactor", "curve", "provenance"],
             cfg.output_format)
    _figure(cfg, "search_hits", [e.instance for e in entries])
    return EXIT_OK


# -- pairing ------------------------------------------------------------------

def _context(args, cfg):
    from .pairing import PairingContext, PairingError
    a, b = 1, 0
    if getattr(args, "curve", None):
        try:
            a, b = (parse_int(v) for v in args.curve.split(","))
        except ValueError:
            raise CliFailure("--curve expects a,b") from None
    p, r = parse_int(args.p), parse_int(args.r)
    if p > 2 ** 64:
        raise CliFailure("desk-scale commands refuse p above 2^64")
    try:
        return PairingContext.create(p, r, a, b, seed=cfg.rng_seed,
                                     naive_bound=cfg.naive_count_bound)
    except (PairingError, ValueError) as e:
        raise CliFailure(str(e)) from None


def _partner(ctx, P, rng):
    from .pairing import PairingError, distortion_apply
    try:
        return distortion_apply(ctx, P), "distortion"
    except PairingError:
        return ctx.torsion_point(rng, independent_of=ctx.lift(P)), "torsion"


def _bilinearity(ctx, kind, rng):
    from .curve import scalar_mul
    from .pairing import tate_pairing, weil_pairing
    pair = weil_pairing if kind == "weil" else tate_pairing
    P = ctx.g1_point(rng)
    Q, how = _partner(ctx, P, rng)
    base = pair(ctx, P, Q, rng)
    r = ctx.r
    if r <= 31:
        grid = [(a, b) for a in range(r) for b in range(r)]
    else:
        grid = [(a, b) for a in range(5) for b in range(5)]
        grid += [(rng.randrange(r), rng.randrange(r)) for _ in range(8)]
    rows = []
    for a, b in grid:
        v = pair(ctx, scalar_mul(a, P), scalar_mul(b, Q), rng)
        want = base ** (a * b)
        rows.append({"a": a, "b": b, "e(aP,bQ)": v.to_text(), "e(P,Q)^(ab)": want.to_text(),
                     "ok": v == want})
    order_ok = not base.is_one() and (base ** r).is_one()
    report = {"op": kind, "p": format_int(ctx.p), "r": format_int(r), "k": ctx.k,
              "P": P.to_text(), "Q": Q.to_text(), "Q_from": how, "e(P,Q)": base.to_text(),
              "non_degenerate": order_ok, "bilinear": all(x["ok"] for x in rows)}
    if kind == "weil":
        report["alternating"] = pair(ctx, P, P, rng).is_one()
    return report, rows


def cmd_pairing(args, cfg):
    ctx = _context(args, cfg)
    rng = random.Random(cfg.rng_seed)
    ok = True
    transcript = {}
    ops = ["weil", "tate", "mov"] if args.op == "demo" else [args.op]
    for op in ops:
        if op in ("weil", "tate"):
            report, rows = _bilinearity(ctx, op, rng)
            ok &= report["bilinear"] and report["non_degenerate"] and report.get("alternating", True)
            transcript[op] = dict(report, table=rows)
            if op == ops[0] and ctx.r <= 31:
                _figure(cfg, "bilinearity_grid", rows, ctx.r)
        else:
            from .protocols import mov_demo
            n = rng.randrange(ctx.r) if args.secret is None else args.secret
            rep = mov_demo(ctx, n, rng)
            ok &= rep["recovered"] == rep["planted"] == rep["bsgs"] and rep["b_equals_a_pow_n"]
            transcript["mov"] = rep
    emit_transcript(transcript if len(ops) > 1 else transcript[ops[0]])
    return EXIT_OK if ok else EXIT_FAILED


# -- security -----------------------------------------------------------------

RECOMMEND_COLUMNS = ["table", "curve", "family", "k", "D", "r_bits", "p_bits", "pk_bits",
                     "seed", "extra", "security", "reproduced", "r_bits_actual",
                     "p_bits_actual"]


def render_bands(fmt, out=None):
    from .security import BANDS_CAPTION, BANDS_HEADER, all_bands
    out = out or sys.stdout
    rows = [dict(zip(BANDS_HEADER, b.cells())) for b in all_bands()]
    if fmt == "table":
        emit(rows, list(BANDS_HEADER), fmt, out, title=BANDS_CAPTION)
    else:
        emit(rows, list(BANDS_HEADER), fmt, out)


def cmd_security(args, cfg):
    from .security import rate_instance, recommended_tables
    if args.action == "bands":
        render_bands(cfg.output_format)
        _figure(cfg, "security_curves")
        return EXIT_OK
    if args.action == "recommend":
        try:
            rows = [r.to_dict() for r in recommended_tables(args.bits)]
        except ValueError as e:
            raise CliFailure(str(e)) from None
        emit(rows, RECOMMEND_COLUMNS, cfg.output_format)
        _figure(cfg, "recommend_bits", rows)
        return EXIT_OK
    if args.action == "rate":
        from .families import FamilyError, instantiate
        if not args.family or args.seed is None:
            raise CliFailure("security rate needs --family and --seed")
        try:
            inst = instantiate(_family(args.family), parse_int(args.seed))
        except FamilyError as e:
            raise CliFailure(str(e)) from None
        emit_record(rate_instance(inst).to_dict(), cfg.output_format)
        return EXIT_OK
    # report
    if not args.entry:
        raise CliFailure("security report needs --entry")
    entry = _registry_entry(cfg, args.entry)
    emit_record(rate_instance(entry.instance, ref=entry.id).to_dict(), cfg.output_format)
    return EXIT_OK


def _registry_entry(cfg, eid):
    from .registry import Registry, RegistryError
    try:
        reg = Registry.load(cfg.registry, cfg.mr_rounds)
    except RegistryError as e:
        raise CliFailure(f"registry rejected: {e}") from None
    try:
        return reg.get(eid)
    except KeyError:
        raise CliFailure(f"unknown registry entry {eid!r}", EXIT_UNKNOWN) from None


# -- protocols ----------------------------------------------------------------

def cmd_protocol(args, cfg):
    from . import protocols as pr
    ctx = _context(args, cfg)
    rng = random.Random(cfg.rng_seed)
    try:
        if args.scheme == "ibe":
            try:
                system = pr.IbeSystem(ctx, rng=rng)
            except pr.ProtocolError as e:
                raise CliFailure(str(e)) from None
            msg = args.msg.encode()
            ident = args.identity.encode()
            _, out, tr = pr.ibe_roundtrip(system, ident, msg, rng.randrange(1, ctx.r))
            tr["message"] = args.msg
            tr["decrypted"] = out.decode(errors="replace")
            emit_transcript(tr)
            ok = tr["roundtrip"] and tr["key_equal"]
        elif args.scheme == "joux":
            setup = pr.PairingSetup(ctx, rng=rng)
            a, b, c = (rng.randrange(1, ctx.r) for _ in range(3))
            tr = pr.joux_transcript(setup, a, b, c)
            emit_transcript(tr)
            ok = tr["equal"]
        elif args.scheme == "bls":
            setup = pr.PairingSetup(ctx, rng=rng)
            keys = pr.BlsKeypair.generate(setup, rng)
            msg = args.msg.encode()
            S, verdict = pr.bls_sign_verify(keys, msg)
            tr = {"p": format_int(ctx.p), "r": format_int(ctx.r), "A": keys.A.to_text(),
                  "message": args.msg, "signature": S.to_text(), "accepted": verdict}
            if args.tamper:
                tampered = msg + b"!"
                tr["tampered_message"] = tampered.decode(errors="replace")
                tr["tampered_accepted"] = pr.bls_verify(setup, keys.A, tampered, S)
                tr["mode"] = "expected-reject"
                ok = verdict and not tr["tampered_accepted"]
            else:
                tr["matrix"] = pr.bls_matrix(keys, msg, rng)
                ok = verdict and all(c["ok"] for c in tr["matrix"])
            emit_transcript(tr)
        else:
            n = rng.randrange(ctx.r) if args.secret is None else args.secret
            rep = pr.mov_demo(ctx, n, rng)
            emit_transcript(rep)
            ok = rep["recovered"] == rep["bsgs"] and rep["b_equals_a_pow_n"]
    except pr.ProtocolError as e:
        raise CliFailure(str(e), EXIT_FAILED) from None
    return EXIT_OK if ok else EXIT_FAILED


# -- constructions ------------------------------------------------------------

def cmd_construct(args, cfg):
    from . import construct as cs
    rng = random.Random(cfg.rng_seed)
    try:
        if args.method == "cocks-pinch":
            rows = []
            for i in range(args.runs):
                r = (parse_int(args.r) if args.r else cs.random_cp_prime(args.r_bits, args.k, args.D, rng))
                res = cs.cocks_pinch(args.k, args.D, r, rng)
                d = res.to_dict()
                rows.append({"run": i, "r_bits": r.bit_length(), "p_bits": res.p.bit_length(),
                             "rho": d["rho"], "p": format_int(res.p), "t": format_int(res.t),
                             "y": format_int(res.y), "r": format_int(r)})
            emit(rows, ["run", "r_bits", "p_bits", "rho", "r", "p", "t", "y"], cfg.output_format)
            _figure(cfg, "rho_histogram", [r["rho"] for r in rows])
            return EXIT_OK
        if args.method == "mnt":
            d_range = range(1, args.d_max + 1) if args.d_max else None
            found, rejected = cs.mnt_search(args.k, args.u_bound, args.h, d_range)
            rows = [{"family": i.family, "u": i.u, "p": i.p, "r": i.r, "t": i.t, "D": i.D,
                     "k": i.k, "status": "accepted"} for i in found]
            rows += [{"family": x["family"], "u": x["u"], "p": x["p"], "r": x["r"], "t": x["t"],
                      "D": None, "k": x["k_true"], "status": "rejected: " + x["reason"]}
                     for x in rejected]
            emit(rows, ["family", "u", "p", "r", "t", "D", "k", "status"], cfg.output_format)
            return EXIT_OK if found else EXIT_EMPTY
        if args.method == "pell":
            inst = cs.PellInstance(args.d, args.n)
            sols = cs.pell_solve(inst, args.bound)
            emit([{"x": s.x, "y": s.y, "class": s.class_index} for s in sols],
                 ["x", "y", "class"], cfg.output_format)
            return EXIT_OK if sols else EXIT_EMPTY
        if args.method == "bw":
            r_poly = parse_poly(args.r_poly) if args.r_poly else None
            if r_poly is None:
                from .algebra import cyclotomic
                r_poly = cyclotomic(4 * args.k if args.k % 2 else 2 * args.k)
            fd = cs.brezing_weng(args.k, args.D, r_poly, root_choice=args.root)
        else:
            base = _family(args.family)
            fd = cs.cvd_to_fixed_d(base, args.D)
        d = fd.to_dict()
        for key in ("p", "r", "t", "y"):
            poly = getattr(fd, key)
            if poly is not None:
                d[key] = poly.format("u")
        d["checks"] = {c.name: c.status for c in fd.report.checks}
        emit_record(d, cfg.output_format)
        return EXIT_OK if fd.is_valid else EXIT_FAILED
    except cs.ConstructionError as e:
        raise CliFailure(str(e)) from None


# -- registry -----------------------------------------------------------------

def cmd_registry(args, cfg):
    from .registry import Registry, RegistryError, locked
    try:
        if args.action == "list":
            reg = Registry.load(cfg.registry, cfg.mr_rounds)
            rows = [{"id": e.id, "family": e.instance.family, "k": e.instance.k,
                     "r_bits": e.instance.r_bits, "p_bits": e.instance.p_bits,
                     "provenance": e.provenance, "created_at": e.created_at} for e in reg]
            emit(rows, ["id", "family", "k", "r_bits", "p_bits", "provenance", "created_at"],
                 cfg.output_format)
            return EXIT_OK if rows else EXIT_EMPTY
        if args.action == "export":
            text = Registry.load(cfg.registry, cfg.mr_rounds).to_json()
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        if args.action == "import":
            if not args.file:
                raise CliFailure("registry import needs a FILE")
            with open(args.file, encoding="utf-8") as fh:
                incoming = Registry.from_json(fh.read(), rounds=cfg.mr_rounds)
            with locked(cfg.registry, cfg.mr_rounds) as reg:
                added = sum(reg.add(e) for e in incoming)
            print(f"imported {added} of {len(incoming)} entries", file=sys.stderr)
            return EXIT_OK
        # add-tables: reproduce the recommendation rows that have a family
        from .security import recommended_tables
        rows = [r for r in recommended_tables() if r.family and r.reproduce()["status"] == "pass"]
        entries = _entries_for([r.instance() for r in rows], cfg, "manual", args.synthesize)
        with locked(cfg.registry, cfg.mr_rounds) as reg:
            added = sum(reg.add(e) for e in entries)
        print(f"added {added} table entries", file=sys.stderr)
        return EXIT_OK
    except RegistryError as e:
        raise CliFailure(f"registry rejected: {e}") from None
    except FileNotFoundError as e:
        raise CliFailure(str(e)) from None


# -- parser -------------------------------------------------------------------

def _common():
    # parsed both before and after the subcommand
    c = Parser(add_help=False)
    s = argparse.SUPPRESS
    c.add_argument("--format", choices=FORMATS, default=s, help="output format")
    c.add_argument("--figure-dir", default=s, help="also write PNG figures here")
    c.add_argument("--registry", default=s, help=f"registry file (default {DEFAULT_REGISTRY})")
    c.add_argument("--mr-rounds", type=int, default=s, help="random Miller-Rabin rounds")
    c.add_argument("--naive-bound", type=int, default=s, help="largest p for naive point counts")
    c.add_argument("--rng-seed", type=int, default=s, help="seed for all randomness")
    return c


def build_parser():
    common = _common()
    p = Parser(prog="pfcurves", parents=[common],
               description="Pairing-friendly curve families, constructions, pairings and demos.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    f = sub.add_parser("families", parents=[common], help="list, show or validate families")
    f.add_argument("action", choices=["list", "show", "validate"])
    f.add_argument("name", nargs="?")
    f.set_defaults(func=cmd_families)

    s = sub.add_parser("search", parents=[common], help="seed search within a family")
    s.add_argument("--family", required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--seed", help="one seed, e.g. 2^110+2^36+1 or 0x4000000000000000001000000001")
    g.add_argument("--seed-range", help="inclusive range A..B")
    g.add_argument("--r-bits", type=int, help="random seeds giving r of this size")
    s.add_argument("--count", type=int, default=None)
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--budget", type=int, default=200_000, help="candidates for --r-bits")
    s.add_argument("--synthesize", action="store_true", help="find a, b when D is 1 or 3")
    s.add_argument("--no-save", action="store_true")
    s.set_defaults(func=cmd_search)

    pa = sub.add_parser("pairing", parents=[common], help="pairings on a desk-scale curve")
    pa.add_argument("--p", required=True)
    pa.add_argument("--r", required=True)
    pa.add_argument("--curve", help="a,b (default 1,0: y^2 = x^3 + x)")
    pa.add_argument("--op", choices=["weil", "tate", "mov", "demo"], default="weil")
    pa.add_argument("--secret", type=int)
    pa.set_defaults(func=cmd_pairing)

    se = sub.add_parser("security", parents=[common], help="security estimates and tables")
    se.add_argument("action", choices=["report", "recommend", "bands", "rate"])
    se.add_argument("--entry")
    se.add_argument("--bits", type=int)
    se.add_argument("--family")
    se.add_argument("--seed")
    se.set_defaults(func=cmd_security)

    pr = sub.add_parser("protocol", parents=[common], help="IBE, Joux, BLS and MOV demos")
    pr.add_argument("scheme", choices=["ibe", "joux", "bls", "mov"])
    pr.add_argument("--p", default="59")
    pr.add_argument("--r", default="5")
    pr.add_argument("--curve", help="a,b for joux, bls and mov")
    pr.add_argument("--msg", default="hi")
    pr.add_argument("--identity", default="alice@example.com")
    pr.add_argument("--tamper", action="store_true", help="bls: expect the tampered check to fail")
    pr.add_argument("--secret", type=int)
    pr.set_defaults(func=cmd_protocol)

    c = sub.add_parser("construct", parents=[common], help="generic constructions")
    c.add_argument("method", choices=["cocks-pinch", "mnt", "pell", "bw", "cvd-fixed"])
    c.add_argument("--k", type=int, default=6)
    c.add_argument("--D", type=int, default=3)
    c.add_argument("--r", help="cocks-pinch: use this prime r")
    c.add_argument("--r-bits", type=int, default=64)
    c.add_argument("--runs", type=int, default=1)
    c.add_argument("--u-bound", type=int, default=50)
    c.add_argument("--h", type=int, default=1)
    c.add_argument("--d-max", type=int, default=0, help="mnt: also try the Pell route for D <= d-max")
    c.add_argument("--d", type=int, default=2, help="pell: x^2 - d*y^2 = n")
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--bound", type=int, default=10 ** 4)
    c.add_argument("--r-poly", help="bw: r(u), default the cyclotomic polynomial")
    c.add_argument("--root", type=int, default=0)
    c.add_argument("--family", help="cvd-fixed: variable-discriminant family")
    c.set_defaults(func=cmd_construct)

    r = sub.add_parser("registry", parents=[common], help="inspect or move the curve registry")
    r.add_argument("action", choices=["list", "export", "import", "add-tables"])
    r.add_argument("file", nargs="?")
    r.add_argument("--out")
    r.add_argument("--synthesize", action="store_true")
    r.set_defaults(func=cmd_registry)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors and --help, reported as a return code
        return e.code
    try:
        cfg = CliConfig.from_args(args)
        return args.func(args, cfg)
    except CliFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (ValueError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
