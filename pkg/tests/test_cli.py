import json
import time

import pytest

from oddcat import cli, suites
from oddcat.cache import CODE_VERSION, DiskCache, decode_word_table, encode_word_table, resolve_dir
from oddcat.oddnilhecke import SignedWordTable
from oddcat.report import SCHEMA, VerificationRecord, to_json, to_markdown


def run_cli(capsys, *args):
    code = cli.main(list(args))
    return code, capsys.readouterr().out


def records_without_timing(text):
    doc = json.loads(text)
    for r in doc["records"]:
        r.pop("wall_time", None)
    return doc


# ---------------------------------------------------------------- runs

def test_all_trivial_size(capsys, tmp_path):
    code, out = run_cli(capsys, "verify", "all", "--n", "1", "--cache-dir", str(tmp_path))
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == SCHEMA
    assert doc["summary"]["fail"] == 0
    assert {r["suite"] for r in doc["records"]} == set(suites.SUITES)
    assert all(r["citation"] for r in doc["records"])


def test_onh_n3(capsys, tmp_path):
    code, out = run_cli(capsys, "verify", "onh", "--n", "3", "--degree-bound", "14", "--cache-dir", str(tmp_path))
    doc = json.loads(out)
    assert code == 0
    rel = [r for r in doc["records"] if r["check"] == "relations"]
    assert rel and rel[0]["status"] == "pass" and rel[0]["params"] == {"D": 14, "n": 3}


def test_complex_n4_k2(capsys, tmp_path):
    code, out = run_cli(capsys, "verify", "complex", "--n", "4", "--k", "2", "--degree-bound", "20",
                        "--cache-dir", str(tmp_path))
    doc = json.loads(out)
    assert code == 0
    assert {r["check"] for r in doc["records"]} >= {"exact-z", "exact-undeformed-snf", "exact-combinatorial"}


def test_specialize_flag(capsys, tmp_path):
    code, out = run_cli(capsys, "verify", "complex", "--n", "3", "--k", "1", "--specialize", "d0",
                        "--cache-dir", str(tmp_path))
    doc = json.loads(out)
    assert code == 0
    assert doc["records"][0]["witness"]["specialize"] == "d0"


def test_json_deterministic(capsys, tmp_path):
    args = ("verify", "sym", "--n", "3", "--no-timing", "--cache-dir", str(tmp_path))
    _, a = run_cli(capsys, *args)
    _, b = run_cli(capsys, *args)
    assert a == b


def test_markdown_groups_by_section(capsys, tmp_path):
    code, out = run_cli(capsys, "verify", "all", "--n", "1", "--format", "markdown", "--cache-dir", str(tmp_path))
    assert code == 0
    assert out.startswith("# oddcat verify all")
    assert out.count("\n## ") == len(suites.SUITES)
    assert "## Failures" not in out


def test_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense"])
    assert exc.value.code == 2
    with pytest.raises(ValueError):
        suites.run("nonsense", suites.Config())


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out = run_cli(capsys, "verify", "grdim", "--n", "1", "-o", str(target), "--cache-dir", str(tmp_path))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["suite"] == "grdim"


def test_unwritable_output_reported(capsys, tmp_path):
    code = cli.main(["verify", "grdim", "--n", "1", "-o", str(tmp_path / "missing" / "r.json"),
                     "--cache-dir", str(tmp_path)])
    err = capsys.readouterr().err
    assert code == 2 and "missing" in err


# ---------------------------------------------------------------- failures

def _failing(cfg):
    return [VerificationRecord("grdim", "Graded dimensions", "forced", "deliberate failure", {"n": 0}, "fail", {"why": 1})]


def test_single_failure_exit_code(capsys, monkeypatch, tmp_path):
    monkeypatch.setitem(suites.RUNNERS, "grdim", _failing)
    code, out = run_cli(capsys, "verify", "grdim", "--format", "markdown", "--cache-dir", str(tmp_path))
    assert code == 1
    assert "## Failures" in out and "grdim/forced" in out


def test_empty_report_valid():
    doc = json.loads(to_json([], "all", CODE_VERSION))
    assert doc["records"] == [] and doc["summary"] == {"fail": 0, "pass": 0, "skipped": 0}
    assert to_markdown([], "all", CODE_VERSION).startswith("# oddcat verify all")


def test_record_requires_citation():
    with pytest.raises(ValueError):
        VerificationRecord("onh", "s", "c", "", {}, "pass")
    with pytest.raises(ValueError):
        VerificationRecord("onh", "s", "c", "x", {}, "maybe")


def test_record_round_trip():
    r = VerificationRecord("onh", "s", "c", "label", {"n": 2}, "pass", {"a": (1, 2)}, 0.5)
    back = VerificationRecord.from_dict(json.loads(json.dumps(r.to_dict())))
    assert back.to_dict() == r.to_dict()


# ---------------------------------------------------------------- cache

def test_cold_and_warm_runs_identical(capsys, tmp_path):
    args = ("verify", "onh", "--n", "4", "--degree-bound", "6", "--cache-dir", str(tmp_path))
    _, cold = run_cli(capsys, *args)
    assert list(tmp_path.glob("signed_words-n4-*.json"))
    _, warm = run_cli(capsys, *args)
    assert records_without_timing(cold) == records_without_timing(warm)


def test_sym_cold_and_warm_identical(capsys, tmp_path):
    args = ("verify", "sym", "--n", "4", "--cache-dir", str(tmp_path))
    _, cold = run_cli(capsys, *args)
    assert list(tmp_path.glob("schur_h-n4-*.json"))
    _, warm = run_cli(capsys, *args)
    assert records_without_timing(cold) == records_without_timing(warm)


def test_corrupt_cache_rebuilt(capsys, tmp_path):
    args = ("verify", "onh", "--n", "3", "--degree-bound", "6", "--cache-dir", str(tmp_path))
    _, first = run_cli(capsys, *args)
    (path,) = tmp_path.glob("signed_words-n3-*.json")
    good = path.read_bytes()
    path.write_bytes(b"{not json")
    code, second = run_cli(capsys, *args)
    assert code == 0
    assert path.read_bytes() == good
    assert records_without_timing(first) == records_without_timing(second)


def test_foreign_header_ignored(tmp_path):
    c = DiskCache(tmp_path)
    c.path("signed_words", 2).write_text(json.dumps({"header": {"module": "other"}, "data": {}}))
    assert c.load("signed_words", 2) is None


def test_version_bump_invalidates(tmp_path):
    old = DiskCache(tmp_path, version="0.0.1")
    old.store("schur_h", 3, {"0": {}})
    new = DiskCache(tmp_path, version="9.9.9")
    assert new.load("schur_h", 3) is None
    assert old.load("schur_h", 3) == {"0": {}}
    # a renamed file with the old header is still rejected
    new.path("schur_h", 3).write_bytes(old.path("schur_h", 3).read_bytes())
    assert new.load("schur_h", 3) is None


def test_word_table_round_trip_byte_identical(tmp_path):
    tab = SignedWordTable(4)
    tab.fill()
    c = DiskCache(tmp_path)
    p = c.store("signed_words", 4, encode_word_table(tab.export()))
    first = p.read_bytes()
    fresh = SignedWordTable(4)
    fresh.load(decode_word_table(c.load("signed_words", 4)))
    assert fresh.export() == tab.export()
    c.store("signed_words", 4, encode_word_table(fresh.export()))
    assert p.read_bytes() == first


def test_cache_dir_resolution(monkeypatch, tmp_path):
    monkeypatch.setenv("ODDCAT_CACHE", str(tmp_path / "env"))
    assert resolve_dir(None) == tmp_path / "env"
    assert resolve_dir(tmp_path / "flag") == tmp_path / "flag"
    monkeypatch.delenv("ODDCAT_CACHE")
    assert resolve_dir(None).name == "oddcat"


def test_env_cache_used_by_cli(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("ODDCAT_CACHE", str(tmp_path))
    code, _ = run_cli(capsys, "verify", "onh", "--n", "2", "--degree-bound", "4")
    assert code == 0
    assert list(tmp_path.glob("signed_words-n2-*.json"))


def test_no_cache_flag(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ODDCAT_CACHE", str(tmp_path))
    code, _ = run_cli(capsys, "verify", "onh", "--n", "2", "--degree-bound", "4", "--no-cache")
    assert code == 0
    assert not list(tmp_path.iterdir())


@pytest.mark.slow
def test_full_n3_run_has_all_suites(capsys, tmp_path):
    t = time.perf_counter()
    code, out = run_cli(capsys, "verify", "all", "--n", "3", "--cache-dir", str(tmp_path))
    doc = json.loads(out)
    assert code == 0
    assert len({r["suite"] for r in doc["records"]}) >= 10
    assert time.perf_counter() - t < 300
