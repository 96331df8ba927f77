"""Command-line interface tests: exit codes, schemas, determinism."""

import json

from opnlab.cli import run


def out_of(capsys) -> str:
    return capsys.readouterr().out


# --------------------------------------------------------------- exit codes


def test_audit_exits_zero_without_strict(capsys):
    assert run(["audit", "5", "1", "9", "--format", "json"]) == 0
    report = json.loads(out_of(capsys))
    assert report["theorem1"]["condition_verdicts"] == [True, True, True, True]


def test_audit_strict_flags_violations(capsys):
    # (5,1,9) violates the k>1 lemma brackets, so strict mode exits 1
    assert run(["audit", "5", "1", "9", "--strict"]) == 1
    assert run(["audit", "5", "1", "9"]) == 0


def test_usage_errors_exit_2(capsys):
    assert run(["no-such-command"]) == 2
    assert run([]) == 2
    assert run(["scan-t4"]) == 2  # missing required flags
    assert run(["scan-t4", "--n-bound", "1e5", "--q-bound", "10"]) == 2  # float bound
    assert run(["audit", "13", "2", "9"]) == 2  # invalid candidate
    assert run(["bracket", "--Q", "4"]) == 2  # no Euler prime below 5


def test_budget_error_exits_3(monkeypatch, capsys):
    monkeypatch.setenv("OPNLAB_EFFORT", "10")
    semiprime = str((10**9 + 7) * (10**9 + 9))
    assert run(["audit", "5", "1", semiprime]) == 3


def test_effort_env_must_be_integer(monkeypatch):
    monkeypatch.setenv("OPNLAB_EFFORT", "1e9")
    assert run(["audit", "5", "1", "9"]) == 2


# ------------------------------------------------------------------- audit


def test_audit_json_schema(capsys):
    assert run(["audit", "5", "1", "9", "--format", "json"]) == 0
    report = json.loads(out_of(capsys))
    assert set(report) >= {"candidate", "flags", "theorem1", "chains", "case",
                           "corollaries", "lemmas"}
    assert report["candidate"] == {"q": "5", "k": "1", "n": "9"}
    assert isinstance(report["corollaries"], list)
    assert isinstance(report["lemmas"], list)
    assert report["case"]["theorem2_case"] == 1
    for check in report["corollaries"]:
        assert {"id", "lhs", "rhs", "verdict", "claimed", "holds"} <= set(check)


def test_audit_json_round_trip_preserves_big_integers(capsys):
    n = 3**40  # 20 digits, past exact float range
    assert run(["audit", "5", "1", str(n), "--format", "json"]) == 0
    text = out_of(capsys)
    report = json.loads(text)
    assert report["candidate"]["n"] == str(n)
    assert int(report["candidate"]["n"]) == n
    # re-serializing the parsed document reproduces the bytes
    assert json.dumps(report, indent=2) == text.rstrip("\n")


def test_audit_deterministic_output(capsys):
    argv = ["audit", "13", "1", "9", "--format", "json"]
    assert run(argv) == 0
    first = out_of(capsys)
    assert run(argv) == 0
    assert out_of(capsys) == first


def test_audit_csv_flattening(capsys):
    assert run(["audit", "5", "1", "9", "--format", "csv"]) == 0
    lines = out_of(capsys).strip().splitlines()
    header = lines[0].split(",")
    assert header == ["q", "k", "n", "section", "check_id", "lhs", "rhs",
                      "verdict", "claimed", "holds"]
    assert all(line.split(",")[0] == "5" for line in lines[1:])
    sections = {line.split(",")[3] for line in lines[1:]}
    assert sections == {"theorem1", "chains", "case", "corollaries", "lemmas"}


def test_audit_only_section(capsys):
    assert run(["audit", "5", "1", "9", "--only", "theorem1", "--format", "json"]) == 0
    report = json.loads(out_of(capsys))
    assert "theorem1" in report and "lemmas" not in report


def test_audit_jsonl(capsys):
    assert run(["audit", "5", "1", "9", "--format", "jsonl"]) == 0
    lines = [json.loads(l) for l in out_of(capsys).strip().splitlines()]
    assert all(l["candidate"]["n"] == "9" for l in lines)
    assert any(l["id"] == "t1.qk_lt_n" for l in lines)


# ---------------------------------------------------------------- constants


def test_constants_json_schema_and_verified(capsys):
    assert run(["constants", "--format", "json"]) == 0
    rows = json.loads(out_of(capsys))
    assert len(rows) == 11
    for row in rows:
        assert {"name", "terms", "printed", "enclosure", "verified"} <= set(row)
        assert row["verified"] is True
        lo, hi = row["enclosure"]
        assert isinstance(lo, str) and isinstance(hi, str)
        for term in row["terms"]:
            assert {"coeff", "base", "root"} <= set(term)


# ------------------------------------------------------- bracket / theorems


def test_bracket_output(capsys):
    assert run(["bracket", "--Q", "13", "--format", "json"]) == 0
    data = json.loads(out_of(capsys))
    assert data["iq_lower"]["frac"] == "14/13"
    assert data["in_upper"]["frac"] == "13/7"


def test_theorem5_case_a_primes(capsys):
    assert run(["theorem5", "--format", "json"]) == 0
    data = json.loads(out_of(capsys))
    assert data["case_a_low_branch_primes"] == ["5", "13", "17", "29", "37", "41"]
    assert data["rows"][0]["case_a"] == "7/5"


def test_theorem6_q5_contradiction(capsys):
    assert run(["theorem6", "--q", "5", "--format", "json"]) == 0
    data = json.loads(out_of(capsys))
    assert data["contradictory"] is True
    assert data["shifts"] == []
    assert data["bracket"] == ["2", "1"]
    assert data["message"] == "q = 5 excluded under Theorem 6 hypothesis"
    assert run(["theorem6", "--q", "5"]) == 0
    assert "excluded under Theorem 6" in out_of(capsys)


def test_theorem6_q13(capsys):
    assert run(["theorem6", "--q", "13", "--format", "json"]) == 0
    data = json.loads(out_of(capsys))
    assert data["shifts"] == ["3", "7"] and data["contradictory"] is False


# -------------------------------------------------------------------- scans


def test_scan_t4_jsonl(capsys):
    assert run(["scan-t4", "--n-bound", "10", "--q-bound", "97",
                "--parity", "all", "--format", "jsonl"]) == 0
    rows = [json.loads(l) for l in out_of(capsys).strip().splitlines()]
    assert {"n": "6", "q": "5", "param": "5", "lhs": "60", "rhs": "60"} in rows


def test_scan_t6_csv(capsys):
    assert run(["scan-t6", "--n-bound", "100", "--q-bound", "97",
                "--format", "csv"]) == 0
    lines = out_of(capsys).strip().splitlines()
    assert lines[0] == "n,q,param,lhs,rhs"
    assert any(line.startswith("9,37,15,") for line in lines)


def test_scan_ratio(capsys):
    assert run(["scan-ratio", "--target", "13/9", "--bound", "100",
                "--format", "json"]) == 0
    data = json.loads(out_of(capsys))
    assert data["solutions"] == ["9"]


def test_scan_shard_and_checkpoint(tmp_path, capsys):
    ckpt = tmp_path / "ckpt.json"
    argv = ["scan-t6", "--n-bound", "100", "--q-bound", "97", "--format", "jsonl",
            "--checkpoint", str(ckpt)]
    assert run(argv) == 0
    first = out_of(capsys).strip().splitlines()
    assert first
    data = json.loads(ckpt.read_text())
    assert data == {"shard": None, "n_done": 100}
    # resuming a finished scan emits nothing new
    assert run(argv + ["--resume"]) == 0
    assert out_of(capsys).strip() == ""
    # union of resumed halves equals the full scan
    ckpt2 = tmp_path / "half.json"
    from opnlab.search import save_checkpoint
    save_checkpoint(ckpt2, None, 50)
    argv2 = ["scan-t6", "--n-bound", "100", "--q-bound", "97", "--format", "jsonl",
             "--checkpoint", str(ckpt2), "--resume"]
    assert run(argv2) == 0
    second_half = out_of(capsys).strip().splitlines()
    argv3 = ["scan-t6", "--n-bound", "50", "--q-bound", "97", "--format", "jsonl"]
    assert run(argv3) == 0
    first_half = out_of(capsys).strip().splitlines()
    assert sorted(first_half + second_half) == sorted(first)


def test_scan_shard_flag(capsys):
    rows = []
    for i in range(3):
        assert run(["scan-t6", "--n-bound", "100", "--q-bound", "97",
                    "--shard", f"{i}/3", "--format", "jsonl"]) == 0
        rows += out_of(capsys).strip().splitlines()
    assert run(["scan-t6", "--n-bound", "100", "--q-bound", "97",
                "--format", "jsonl"]) == 0
    full = out_of(capsys).strip().splitlines()
    assert sorted(rows) == sorted(full)
    assert run(["scan-t6", "--n-bound", "10", "--q-bound", "5",
                "--shard", "3/3"]) == 2  # index out of range


# -------------------------------------------------------------------- sieve


def test_sieve_json(capsys):
    assert run(["sieve", "--bound", "10000", "--samples", "100",
                "--format", "json"]) == 0
    data = json.loads(out_of(capsys))
    assert data["perfect"] == ["6", "28", "496", "8128"]
    assert data["odd_perfect_count"] == 0
    assert data["samples_checked"] == 100


def test_sieve_memory_guard(capsys):
    assert run(["sieve", "--bound", "1000000001"]) == 3


# -------------------------------------------------------------------- chain


def test_chain_jsonl_stream(capsys):
    assert run(["chain", "--q", "5", "--k", "1", "--depth", "3",
                "--bound", "1000000000000", "--format", "jsonl"]) == 0
    rows = [json.loads(l) for l in out_of(capsys).strip().splitlines()]
    paths = {r["path"] for r in rows}
    assert "5^1" in paths
    assert "5^1>3^2>13^2>61^2" in paths
    root_row = next(r for r in rows if r["path"] == "5^1")
    assert root_row["sigma"] == "6"


def test_chain_json_tree(capsys):
    assert run(["chain", "--q", "13", "--k", "1", "--depth", "1",
                "--bound", "1000000", "--format", "json"]) == 0
    tree = json.loads(out_of(capsys))
    assert tree["prime"] == "13" and tree["sigma"] == "14"
    assert {ch["prime"] for ch in tree["children"]} == {"7"}


def test_chain_exponent_flag(capsys):
    assert run(["chain", "--q", "5", "--k", "1", "--depth", "1",
                "--bound", "1000000", "--exponents", "2", "--format", "json"]) == 0
    tree = json.loads(out_of(capsys))
    assert [ch["exponent"] for ch in tree["children"]] == [2]
    assert run(["chain", "--q", "5", "--k", "1", "--depth", "1",
                "--bound", "10", "--exponents", "3"]) == 2
