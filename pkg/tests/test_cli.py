import csv
import io
import json

import pytest

from pfcurves.cli import main


@pytest.fixture
def reg(tmp_path, monkeypatch):
    path = tmp_path / "reg.json"
    monkeypatch.setenv("PFCURVES_REGISTRY", str(path))
    monkeypatch.delenv("PFCURVES_FORMAT", raising=False)
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_families_list_and_show(reg, capsys):
    code, out, _ = run(capsys, "families", "list", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    bn = next(r for r in rows if r["name"] == "BN")
    assert bn["rho"] == "1/1" and bn["status"] == "valid"
    code, out, _ = run(capsys, "families", "show", "BLS12")
    assert code == 0 and "3/2" in out


def test_families_validate(reg, capsys):
    code, out, _ = run(capsys, "families", "validate", "BN", "--format", "json")
    assert code == 0
    rep = json.loads(out)["families"][0]
    assert rep["family"] == "BN" and rep["passed"] == 5


def test_unknown_names_exit_2(reg, capsys):
    assert run(capsys, "families", "show", "NOPE")[0] == 2
    assert run(capsys, "security", "report", "--entry", "nope-u1")[0] == 2


def test_usage_errors_exit_1(reg, capsys):
    assert run(capsys, "pairing", "--p", "4", "--r", "5")[0] == 1
    assert run(capsys, "search", "--family", "BN")[0] == 1
    assert run(capsys, "bogus")[0] == 1


def test_search_range_and_report(reg, capsys):
    code, out, _ = run(capsys, "search", "--family", "BN", "--seed-range", "1..100",
                       "--format", "json")
    assert code == 0
    hits = [json.loads(line) for line in out.splitlines() if line.strip()]
    first = next(h for h in hits if h["id"] == "bn-u1")
    assert first["p"] == "0x67" and first["r"] == "0x61"
    code, out, _ = run(capsys, "security", "report", "--entry", "bn-u1", "--format", "json")
    assert code == 0 and json.loads(out)["pollard_bits"] == 3


def test_search_empty_exit_3(reg, capsys):
    assert run(capsys, "search", "--family", "BN", "--seed-range", "2..4")[0] == 3


def test_search_hex_seed(reg, capsys):
    code, out, _ = run(capsys, "search", "--family", "BN", "--seed",
                       "0x4000000000000000001000000001", "--format", "json", "--no-save")
    assert code == 0
    hit = json.loads(out.splitlines()[0])
    assert int(hit["p"], 16).bit_length() == int(hit["r"], 16).bit_length() == 446


def test_search_workers_deterministic(reg, capsys):
    outs = []
    for w in ("1", "2"):
        code, out, _ = run(capsys, "search", "--family", "BLS12", "--seed-range=-2000..2000",
                           "--workers", w, "--no-save", "--format", "csv")
        assert code == 0
        outs.append([line.split(",")[:3] for line in out.splitlines()])
    assert outs[0] == outs[1]


def test_pairing_ops(reg, capsys):
    code, out, _ = run(capsys, "pairing", "--p", "59", "--r", "5", "--op", "weil",
                       "--format", "json")
    assert code == 0
    assert "bilinear" in out
    code, out, _ = run(capsys, "pairing", "--p", "59", "--r", "5", "--op", "mov",
                       "--secret", "3", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["recovered"] == rec["planted"] == 3


def test_security_tables(reg, capsys):
    code, out, _ = run(capsys, "security", "recommend", "--bits", "192", "--format", "csv")
    assert code == 0
    fams = {r["family"] for r in csv.DictReader(io.StringIO(out))}
    assert {"BN", "BLS12", "KSS16", "KSS18", "BLS24"} <= fams
    code, out, _ = run(capsys, "security", "bands")
    assert code == 0 and "3000-5000" in out


def test_protocols(reg, capsys):
    code, out, _ = run(capsys, "protocol", "ibe", "--p", "59", "--r", "5", "--msg", "hi",
                       "--format", "json")
    assert code == 0 and json.loads(out)["roundtrip"]
    code, out, _ = run(capsys, "protocol", "joux", "--format", "json")
    assert code == 0 and json.loads(out)["equal"]
    code, out, _ = run(capsys, "protocol", "bls", "--tamper", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["accepted"] and not rec["tampered_accepted"]
    assert run(capsys, "protocol", "ibe", "--p", "103", "--r", "97", "--curve", "0,5")[0] == 1


def test_construct(reg, capsys):
    code, out, _ = run(capsys, "construct", "mnt", "--k", "6", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert any(r["p"] == 5 and r["r"] == 7 and r["k"] == 6 for r in rows)
    code, out, _ = run(capsys, "construct", "pell", "--d", "2", "--n", "1", "--bound", "100",
                       "--format", "csv")
    assert code == 0 and "99" in out
    code, _, _ = run(capsys, "construct", "cocks-pinch", "--k", "6", "--r-bits", "32",
                     "--rng-seed", "3")
    assert code == 0


def test_registry_export_import_identical(reg, tmp_path, capsys):
    assert run(capsys, "search", "--family", "BN", "--seed-range", "1..10")[0] == 0
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert run(capsys, "registry", "export", "--out", str(a))[0] == 0
    other = tmp_path / "other.json"
    assert run(capsys, "registry", "import", str(a), "--registry", str(other))[0] == 0
    assert run(capsys, "registry", "export", "--out", str(b), "--registry", str(other))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_registry_rejects_corruption(reg, tmp_path, capsys):
    assert run(capsys, "search", "--family", "BN", "--seed-range", "1..1")[0] == 0
    doc = json.loads(reg.read_text())
    doc["entries"][0]["p"] = "0x69"
    reg.write_text(json.dumps(doc))
    code, _, err = run(capsys, "registry", "list")
    assert code == 1 and "p prime check failed" in err


def test_figures(reg, tmp_path, capsys):
    figs = tmp_path / "figs"
    assert run(capsys, "security", "bands", "--figure-dir", str(figs))[0] == 0
    assert run(capsys, "pairing", "--p", "59", "--r", "5", "--figure-dir", str(figs))[0] == 0
    assert sorted(p.suffix for p in figs.iterdir()) == [".png", ".png"]


def test_env_overrides(reg, monkeypatch, capsys):
    monkeypatch.setenv("PFCURVES_FORMAT", "json")
    code, out, _ = run(capsys, "security", "rate", "--family", "BN", "--seed", "2^110+2^36+1")
    assert code == 0 and json.loads(out)["claimed_bits"] == 132
