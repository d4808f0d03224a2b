import json

import pytest

from turangood import VerificationReport
from turangood.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_human_output(self, capsys):
        code, out, _ = invoke(capsys, "count", "--forest", "3", "--parts", "2,3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines == ["forest: 3", "parts: 3,2", "injective_homs: 18",
                         "aut: 2", "copies: 9"]

    def test_turan_shorthand(self, capsys):
        code, out, _ = invoke(capsys, "count", "--forest", "2", "--turan", "7/3")
        assert code == 0
        assert "copies: 16" in out

    def test_json_output(self, capsys):
        code, out, _ = invoke(capsys, "count", "--forest", "2,2",
                              "--parts", "2,2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"forest": "2,2", "parts": [2, 2],
                           "injective_homs": 16, "aut": 8, "copies": 2}

    def test_csv_output(self, capsys):
        code, out, _ = invoke(capsys, "count", "--forest", "3",
                              "--parts", "2,3", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "forest,parts,injective_homs,aut,copies"
        assert lines[1] == '3,"3,2",18,2,9'

    def test_bad_forest_exits_2(self, capsys):
        code, _, err = invoke(capsys, "count", "--forest", "x", "--parts", "2,3")
        assert code == 2
        assert "error" in err

    def test_missing_host_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "count", "--forest", "3")
        assert code == 2

    def test_both_hosts_exit_2(self, capsys):
        code, _, _ = invoke(capsys, "count", "--forest", "3",
                            "--parts", "2,3", "--turan", "5/2")
        assert code == 2


class TestVerify:
    def test_multipartite_max_sweep(self, capsys):
        code, out, _ = invoke(capsys, "verify", "multipartite-max",
                              "--forest", "3,2", "--n", "12", "--k", "3",
                              "--format", "json")
        assert code == 0
        reports = json.loads(out)
        assert len(reports) == 1
        assert reports[0]["verdict"] == "holds"

    def test_conjecture(self, capsys):
        code, out, _ = invoke(capsys, "verify", "conjecture", "--forest", "4",
                              "--n", "6", "--k", "2", "--format", "json")
        assert code == 0
        reports = json.loads(out)
        assert reports[0]["verdict"] == "holds"
        assert reports[0]["instances_checked"] == 1 << 15

    def test_balance(self, capsys):
        code, out, _ = invoke(capsys, "verify", "balance", "--forest", "3",
                              "--parts", "1,4")
        assert code == 0
        assert "verdict: holds" in out

    def test_identity_claims_sweep_orders(self, capsys):
        code, out, _ = invoke(capsys, "verify", "odd-identity", "--forest", "5,3",
                              "--n", "8..9", "--format", "json")
        assert code == 0
        reports = json.loads(out)
        assert [r["params"]["order"] for r in reports] == [3, 5]
        assert all(r["verdict"] == "holds" for r in reports)
        assert all("ratio" in r for r in reports)

    def test_even_identity_default_window(self, capsys):
        code, out, _ = invoke(capsys, "verify", "even-identity", "--forest", "4",
                              "--format", "json")
        assert code == 0
        reports = json.loads(out)
        assert reports[0]["params"]["n_range"] == [4, 5, 6, 7, 8]

    def test_isolated_identity(self, capsys):
        code, out, _ = invoke(capsys, "verify", "isolated-identity",
                              "--forest", "2,1", "--n", "4..5", "--format", "json")
        assert code == 0

    def test_range_sweep_multiple_reports(self, capsys):
        code, out, _ = invoke(capsys, "verify", "multipartite-max", "--forest", "2",
                              "--n", "4..6", "--k", "2..3", "--format", "json")
        assert code == 0
        reports = json.loads(out)
        assert [(r["params"]["k"], r["params"]["n"]) for r in reports] == [
            (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)]

    def test_unknown_claim_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "verify", "nonsense", "--forest", "2")
        assert code == 2

    def test_missing_required_flags_exit_2(self, capsys):
        code, _, _ = invoke(capsys, "verify", "conjecture", "--forest", "2")
        assert code == 2
        code, _, _ = invoke(capsys, "verify", "balance", "--forest", "2")
        assert code == 2

    def test_identity_on_inapplicable_forest_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "verify", "odd-identity", "--forest", "2")
        assert code == 2

    def test_counterexample_exits_1(self, capsys, monkeypatch):
        fake = VerificationReport(
            "conjecture", {"forest": "2", "n": 5, "k": 2}, "counterexample",
            counterexample={"max_count": 7, "turan_count": 6, "witnesses": []},
            instances_checked=1024)
        monkeypatch.setattr("turangood.verify.verify_conjecture",
                            lambda *a, **kw: fake)
        code, out, _ = invoke(capsys, "verify", "conjecture", "--forest", "2",
                              "--n", "5", "--k", "2", "--format", "json")
        assert code == 1
        reports = json.loads(out)
        assert reports[0]["counterexample"]["max_count"] == 7

    def test_cap_hard_limit(self, capsys):
        code, _, err = invoke(capsys, "verify", "conjecture", "--forest", "2",
                              "--n", "9", "--k", "2", "--cap", "9")
        assert code == 2


class TestTable:
    def test_squares_over_four(self, capsys):
        code, out, _ = invoke(capsys, "table", "--forest", "2", "--k", "2",
                              "--n", "1..6")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,k,forest,count"
        counts = [int(line.split(",")[-1]) for line in lines[1:]]
        assert counts == [0, 1, 2, 4, 6, 9]

    def test_isolated_vertex(self, capsys):
        code, out, _ = invoke(capsys, "table", "--forest", "1", "--k", "3",
                              "--n", "1..3")
        assert code == 0
        counts = [int(line.split(",")[-1]) for line in out.strip().splitlines()[1:]]
        assert counts == [1, 2, 3]

    def test_single_n(self, capsys):
        code, out, _ = invoke(capsys, "table", "--forest", "3", "--k", "2",
                              "--n", "5..5")
        assert code == 0
        assert out.strip().splitlines()[1] == '5,2,3,9'

    def test_json_rows(self, capsys):
        from conftest import brute_copies_multipartite
        assert brute_copies_multipartite((3, 2), (3, 2)) == 6
        assert brute_copies_multipartite((3, 2), (3, 3)) == 36
        code, out, _ = invoke(capsys, "table", "--forest", "3,2", "--k", "2",
                              "--n", "5..6", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert rows == [{"n": 5, "k": 2, "forest": "3,2", "count": 6},
                        {"n": 6, "k": 2, "forest": "3,2", "count": 36}]

    def test_forest_field_quoted_in_csv(self, capsys):
        code, out, _ = invoke(capsys, "table", "--forest", "3,2", "--k", "2",
                              "--n", "5..5")
        assert code == 0
        assert out.strip().splitlines()[1].split(",", 2)[2].startswith('"3,2"')

    def test_empty_range_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "table", "--forest", "2", "--k", "2",
                            "--n", "6..1")
        assert code == 2

    def test_bad_k_exits_2(self, capsys):
        code, _, _ = invoke(capsys, "table", "--forest", "2", "--k", "0",
                            "--n", "1..3")
        assert code == 2


class TestEnvironmentOverrides:
    def test_format_from_env(self, capsys, monkeypatch):
        monkeypatch.setenv("TURANGOOD_FORMAT", "json")
        code, out, _ = invoke(capsys, "count", "--forest", "3", "--parts", "2,3")
        assert code == 0
        assert json.loads(out)["copies"] == 9

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("TURANGOOD_FORMAT", "json")
        code, out, _ = invoke(capsys, "count", "--forest", "3", "--parts", "2,3",
                              "--format", "human")
        assert code == 0
        assert out.startswith("forest: 3")

    def test_witnesses_from_env(self, capsys, monkeypatch):
        monkeypatch.setenv("TURANGOOD_WITNESSES", "2")
        code, out, _ = invoke(capsys, "verify", "conjecture", "--forest", "2",
                              "--n", "4", "--k", "2", "--format", "json")
        assert code == 0


class TestDeterminism:
    def test_byte_identical_across_runs_and_workers(self, capsys):
        outputs = []
        for workers in ("1", "2", "4", "1"):
            code, out, _ = invoke(capsys, "verify", "conjecture", "--forest", "3,2",
                                  "--n", "5..6", "--k", "2", "--format", "json",
                                  "--workers", workers)
            assert code == 0
            outputs.append(out)
        assert len(set(outputs)) == 1
