"""Command-line surface: eval/connect examples, the verify report
contract, exit codes, and determinism."""

import json

import pytest

from qsk.cli import SuiteConfig, build_parser, main, report_to_json, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "--family", "cqu", "--n", "0",
                       "--x", "0.5", "--beta", "0.4", "--q", "0.5")
    assert code == 0 and "value = 1" in out
    code, out, _ = run(capsys, "eval", "--family", "qlag", "--n", "1",
                       "--x", "1", "--alpha", "0", "--q", "0.5")
    assert code == 0 and "value = 0" in out
    code, out, _ = run(capsys, "eval", "--family", "lql", "--n", "1",
                       "--x", "0.5", "--a", "0.5", "--q", "0.5")
    assert code == 0 and "0.333333333333333" in out


def test_eval_invalid_parameters_exit_2(capsys):
    code, _, err = run(capsys, "eval", "--family", "cqu", "--n", "1",
                       "--x", "0.5", "--beta", "1.4", "--q", "0.5")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "eval", "--family", "aw", "--n", "1",
                       "--x", "0.5", "--q", "0.5")
    assert code == 2  # missing a, b, c, d


def test_connect_identity_collapse(capsys):
    code, out, _ = run(capsys, "connect", "--family", "cqu", "--n", "3",
                       "--beta", "0.4", "--gamma", "0.4", "--q", "0.5")
    assert code == 0
    # single surviving entry (degree 3, coefficient 1)
    lead = [ln for ln in out.splitlines() if ln.strip().startswith("3")]
    assert any("1" in ln for ln in lead)
    assert "cumulative residual" in out
    final = out.strip().splitlines()[-1]
    assert float(final.split()[-1]) < 1e-10


def test_connect_parity_structure(capsys):
    code, out, _ = run(capsys, "connect", "--family", "cqu", "--n", "4",
                       "--beta", "0.3", "--gamma", "0.6", "--q", "0.5")
    assert code == 0
    degrees = [int(ln.split()[0]) for ln in out.splitlines()
               if ln.strip() and ln.strip()[0].isdigit()]
    assert degrees == [4, 2, 0]


def test_connect_invalid_exit_2(capsys):
    code, _, err = run(capsys, "connect", "--family", "qlag", "--n", "2",
                       "--alpha", "0.5", "--q", "0.5")
    assert code == 2 and "beta" in err


def test_list_identities(capsys):
    code, out, _ = run(capsys, "list-identities")
    assert code == 0
    for want in ("T2", "SRC_AW_14113", "C_AW", "C29", "unresolved-in-paper"):
        assert want in out


def test_verify_empty_tags(tmp_path, capsys):
    out_path = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "--tags", "", "--out", str(out_path))
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["records"] == []
    assert report["summary"]["total"] == 0


def test_verify_default_t3_passes_at_1e7(tmp_path, capsys):
    out_path = tmp_path / "t3.json"
    code, _, _ = run(capsys, "verify", "--tags", "T3", "--q-grid", "0.4,0.65",
                     "--points", "4", "--seed", "7", "--out", str(out_path))
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["schema_version"] == "qsk-report/1"
    assert report["summary"]["failed"] == 0
    for rec in report["records"]:
        assert rec["status"] == "pass"
        assert float(rec["rel_residual"]) < 1e-7


def test_verify_c29_flagged_never_fails(tmp_path, capsys):
    out_path = tmp_path / "c29.json"
    code, _, _ = run(capsys, "verify", "--tags", "C29", "--points", "2",
                     "--out", str(out_path))
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["summary"]["failed"] == 0
    assert all(r["status"] == "unresolved-in-paper" for r in report["records"])


def test_verify_determinism(tmp_path, capsys):
    args = ["verify", "--tags", "T3,T13,C33", "--q-grid", "0.5", "--points",
            "3", "--seed", "123"]
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, *args, "--out", str(p1))[0] == 0
    assert run(capsys, *args, "--out", str(p2))[0] == 0
    r1 = json.loads(p1.read_text())
    r2 = json.loads(p2.read_text())
    r1.pop("generated_at")
    r2.pop("generated_at")
    assert r1 == r2


def test_verify_unknown_tag_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--tags", "T99")
    assert code == 2 and "unknown tag" in err


def test_record_schema(tmp_path, capsys):
    out_path = tmp_path / "one.json"
    run(capsys, "verify", "--tags", "T13", "--points", "1", "--out", str(out_path))
    rec = json.loads(out_path.read_text())["records"][0]
    assert set(rec) == {
        "id", "kind", "q", "point", "point_hash", "lhs", "rhs",
        "abs_residual", "rel_residual", "n_terms_outer", "n_terms_inner",
        "in_domain", "status",
    }
    assert isinstance(rec["lhs"], list) and len(rec["lhs"]) == 2
    assert "e" in rec["rel_residual"]  # scientific notation
    for name, pair in rec["point"].items():
        assert name == name.lower()
        assert len(pair) == 2


def test_suite_config_validation():
    from qsk.errors import PreconditionViolation

    with pytest.raises(PreconditionViolation):
        SuiteConfig(tags=("T3",), q_grid=(1.5,))
    with pytest.raises(ValueError):
        SuiteConfig(tags=("NOPE",))
    with pytest.raises(ValueError):
        SuiteConfig(tags=("T3",), points_per_identity=0)


def test_run_suite_python_api():
    cfg = SuiteConfig(tags=("SRC_LQL_142011",), q_grid=(0.5,), seed=2,
                      points_per_identity=2)
    report = run_suite(cfg)
    assert report["summary"]["total"] == 2
    assert report["summary"]["failed"] == 0
    text = report_to_json(report)
    assert text.endswith("\n")
    json.loads(text)
