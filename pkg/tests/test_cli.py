import csv
import io
import json

import pytest

from conjprob.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_kappa_table_small(capsys):
    code, out = run_cli(capsys, "kappa-sn", "--max", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].split()[:2] == ["1", "1/1"]
    assert lines[2].split()[:2] == ["2", "1/2"]


def test_kappa_table_13_scaled_column(capsys):
    code, out = run_cli(capsys, "kappa-sn", "--max", "13")
    assert code == 0
    last = out.strip().splitlines()[-1].split()
    assert last[0] == "13"
    assert last[3] == "314540139254371141/57360633200640000"


def test_kappa_cumulative(capsys):
    code, out = run_cli(capsys, "kappa-sn", "--max", "15", "--cumulative", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "kappa-sn"
    assert payload["entries"][-1]["cumulative"] == (
        "4675865182689145531283/1187508508836249600000"
    )


def test_kappa_ceiling_breach(capsys):
    code, _ = run_cli(capsys, "kappa-sn", "--max", "90")
    assert code == 1


def test_rho_table(capsys):
    code, out = run_cli(capsys, "rho-sn", "--max", "10", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = {e["n"]: e for e in payload["entries"]}
    assert rows[1]["rho"] == "1/1"
    assert rows[2]["rho"] == "1/1"
    assert rows[10]["n2_rho"] == "5805523/508032"


def test_rho_ceiling_breach(capsys):
    code, _ = run_cli(capsys, "rho-sn", "--max", "40")
    assert code == 1


def test_json_round_trips_byte_identical(capsys):
    code, out = run_cli(capsys, "kappa-sn", "--max", "8", "--format", "json")
    assert code == 0
    reparsed = json.dumps(json.loads(out), indent=2) + "\n"
    assert reparsed == out


def test_csv_format(capsys):
    code, out = run_cli(capsys, "kappa-sn", "--max", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5
    assert rows[0]["kappa"] == "1/1"
    # kappa(S_5): class sizes 24,30,20,20,15,10,1 give 2602/14400
    assert rows[4]["kappa"] == "1301/7200"


def test_group_catalog(capsys):
    code, out = run_cli(capsys, "group", "--catalog", "psl27", "--format", "json")
    assert code == 0
    entry = json.loads(out)["entries"][0]
    assert entry["kappa"] == "3247/14112"
    assert entry["centralizer_profile"] == "3 4 7 7 8 168"


def test_group_d8(capsys):
    code, out = run_cli(capsys, "group", "--catalog", "d8", "--format", "json")
    assert code == 0
    entry = json.loads(out)["entries"][0]
    assert entry["kappa"] == "7/32"
    assert entry["cp"] == "5/8"


def test_group_f21(capsys):
    code, out = run_cli(capsys, "group", "--catalog", "c7:c3", "--format", "json")
    assert code == 0
    entry = json.loads(out)["entries"][0]
    assert entry["kappa"] == "13/49"


def test_group_invariants_flag(capsys):
    code, out = run_cli(capsys, "group", "--catalog", "d18", "--invariants", "--format", "json")
    assert code == 0
    entry = json.loads(out)["entries"][0]
    assert entry["lower_gap"] == "pass"
    assert entry["upper_gap"] == "pass"
    assert entry["profile_case"] == "i"


def test_group_from_file(tmp_path, capsys):
    path = tmp_path / "group.txt"
    path.write_text("degree 5\n(1 2 3 4 5)\n(2 3 5 4)\n")
    code, out = run_cli(capsys, "group", "--file", str(path), "--format", "json")
    assert code == 0
    entry = json.loads(out)["entries"][0]
    assert entry["order"] == 20


def test_group_file_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("degree 3\n(1 9)\n")
    code, _ = run_cli(capsys, "group", "--file", str(path))
    assert code == 1


def test_group_unknown_catalog(capsys):
    code, _ = run_cli(capsys, "group", "--catalog", "nonsense123")
    assert code == 1


def test_verify_gaps_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "gaps", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    claims = {e["claim"]: e["status"] for e in payload["entries"]}
    assert claims["thm1"] == "pass"
    assert claims["thm3"] == "pass"
    assert claims["prop11"] == "pass"
    assert claims["thm2"] == "pass"


def test_verify_oracles_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "oracles", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert all(e["status"] == "pass" for e in payload["entries"])
    claims = [e["claim"] for e in payload["entries"]]
    assert "oracle.commute_matrix" in claims


def test_verify_frobenius_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "frobenius", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert all(e["status"] == "pass" for e in payload["entries"])


def test_verify_remarks_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "remarks", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    statuses = {e["claim"]: e["status"] for e in payload["entries"]}
    assert statuses["remarks.structure"] == "pass"
    assert statuses["remarks.rho_integer"] == "info"
    # every pass/fail entry carries both sides for auditability
    for entry in payload["entries"]:
        assert "lhs" in entry and "rhs" in entry


def test_verify_lemma19_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "lemma19", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [e["claim"] for e in payload["entries"]] == [
        "lemma19.i",
        "lemma19.ii",
        "lemma19.iii",
        "lemma19.iv",
        "lemma19.v",
    ]
    assert all(e["status"] == "pass" for e in payload["entries"])
