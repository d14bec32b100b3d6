"""End-to-end checks of the command line interface via main(argv)."""

import json

import pytest

from qborel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_classify_tsv(capsys):
    code, out, err = run(capsys, "classify", "--type", "A2", "--word", "1,2,1")
    assert code == 0
    assert err == ""
    lines = out.strip().splitlines()
    assert lines[0] == "# type A2\tword 1,2,1"
    assert lines[1].split("\t") == ["y_word", "theta_roots", "dim", "Lmax_basis"]
    body = [ln for ln in lines[2:] if ln and not ln.startswith("#")]
    assert len(body) == 3
    assert [ln.split("\t")[2] for ln in body] == ["0", "1", "1"]


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--type", "A2", "--word", "1,2,1",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["type"] == "A2"
    assert {r["dim"] for r in doc["rows"]} == {0, 1}
    assert len(doc["rows"]) == 3
    assert doc["totals"] == {"T_w": 3, "W_w": 3}


def test_classify_all_words(capsys):
    code, out, _ = run(capsys, "classify", "--type", "A1", "--word", "1",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 2


def test_classify_rejects_non_reduced(capsys):
    code, out, err = run(capsys, "classify", "--type", "A2", "--word", "1,1")
    assert code == 2
    assert "not reduced" in err


def test_verify_unknown_type(capsys):
    code, _, err = run(capsys, "verify", "--type", "Z9")
    assert code == 2
    assert "Z9" in err


def test_verify_ls_suite(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A2", "--suite", "ls")
    assert code == 0
    assert "3/3" in out
    assert all(ln.startswith(("PASS", "#")) for ln in out.strip().splitlines())


def test_verify_strata_suite_b2(capsys):
    code, out, _ = run(capsys, "verify", "--type", "B2", "--suite", "strata")
    assert code == 0
    assert "4/4" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--type", "A2", "--suite", "nope")
    assert code == 2
    assert "nope" in err


def test_ls_tsv(capsys):
    code, out, _ = run(capsys, "ls", "--type", "A2", "1", "2")
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(capsys, "ls", "--type", "A2", "1", "3")
    assert code == 0
    assert out.strip() == "(1)*E[2]"


def test_ls_bad_indices(capsys):
    code, _, err = run(capsys, "ls", "--type", "A2", "3", "1")
    assert code == 2
    assert err


def test_ls_json(capsys):
    code, out, _ = run(capsys, "ls", "--type", "A2", "1", "3",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["i"] == 1 and doc["j"] == 3
    assert doc["lhs"]["terms"][0]["exponents"] == [0, 1, 0]


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "--type", "B2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [r["height"] for r in doc["pos_roots"]] == [1, 1, 2, 3]
    assert doc["d"] == [1, 2]


def test_weyl_summary_and_detail(capsys):
    code, out, _ = run(capsys, "weyl", "--type", "A2", "--word", "all",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 6
    code, out, _ = run(capsys, "weyl", "--type", "A2", "--format", "json")
    doc = json.loads(out)
    assert doc["length"] == 3
    assert doc["num_reduced_words"] == 2


def test_strata_default_word(capsys):
    code, out, _ = run(capsys, "strata", "--type", "A2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["entries"]) == 1
    assert len(doc["entries"][0]["strata"]) == 3


def test_deterministic_output(capsys):
    _, out1, _ = run(capsys, "verify", "--type", "A2", "--suite", "strata")
    _, out2, _ = run(capsys, "verify", "--type", "A2", "--suite", "strata")
    assert out1 == out2


def test_missing_type(capsys):
    code, _, err = run(capsys, "classify")
    assert code == 2
    assert "--type" in err


def test_unknown_subcommand(capsys):
    code, _, _ = run(capsys, "frobnicate", "--type", "A2")
    assert code == 2


def test_cartan_file(tmp_path, capsys):
    p = tmp_path / "cartan.json"
    p.write_text(json.dumps([[2, -1], [-1, 2]]))
    code, out, _ = run(capsys, "roots", "--cartan-file", str(p),
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["pos_roots"]) == 3


def test_bad_word_parse(capsys):
    code, _, err = run(capsys, "weyl", "--type", "A2", "--word", "1,x")
    assert code == 2
    assert err
