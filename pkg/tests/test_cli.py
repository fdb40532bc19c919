import json

from binomial_moments import moments
from binomial_moments.cli import main
from binomial_moments.moments import CorollaryEntry


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_oracle_value(self, capsys):
        code, out, err = run(capsys, "eval", "A", "2", "3", "oracle")
        assert code == 0
        assert out.strip() == "48"
        assert "method=oracle" in err

    def test_theorem_value(self, capsys):
        code, out, err = run(capsys, "eval", "B", "6", "5", "theorem")
        assert code == 0
        assert out.strip() == "0"

    def test_rational_output(self, capsys):
        code, out, _ = run(capsys, "eval", "C", "0", "2", "corollary")
        assert code == 0
        assert out.strip() == "6"
        code, out, _ = run(capsys, "eval", "C", "2", "5", "oracle")
        assert out.strip() == "-15/7"

    def test_open_case_exit_code(self, capsys):
        code, out, err = run(capsys, "eval", "D", "0", "5", "theorem")
        assert code == 3
        assert "open" in err

    def test_usage_errors(self, capsys):
        assert run(capsys, "eval", "E", "2", "3")[0] == 2  # bad family
        assert run(capsys, "eval", "A", "2", "0")[0] == 2  # bad n
        assert run(capsys, "eval", "A", "0", "5", "theorem")[0] == 2  # guard
        assert run(capsys, "eval", "A", "2", "3", "magic")[0] == 2  # bad method
        assert run(capsys, "eval", "C", "9", "4", "corollary")[0] == 2  # below guard

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "value.txt"
        code, out, _ = run(capsys, "eval", "D", "1", "2", "--out", str(path))
        assert code == 0
        assert out == ""
        assert path.read_text() == "9\n"


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--m-max", "3", "--n-max", "6", "--seed", "1")
        assert code == 0
        report = json.loads(out)
        assert report["all_pass"] is True
        names = {c["name"] for c in report["checks"]}
        assert "oracle-vs-theorem-grid" in names
        assert "variant-evidence-c-odd-sigma-argument" in names
        assert "variant-evidence-d-odd-sign-placement" in names
        assert "variant-evidence-c-even-global-sign" in names
        for check in report["checks"]:
            if check["name"].startswith("variant-evidence"):
                assert len(check["details"]["witnesses"]) >= 2
                assert check["status"] == "pass"

    def test_family_filter(self, capsys):
        code, out, _ = run(capsys, "verify", "--families", "B", "--m-max", "3", "--n-max", "3")
        assert code == 0
        report = json.loads(out)
        names = [c["name"] for c in report["checks"]]
        assert "b-even-vanishing" in names
        assert "variant-evidence-c-odd-sigma-argument" not in names
        corr = next(c for c in report["checks"] if c["name"] == "oracle-vs-corollary-table")
        assert corr["cases"] > 0  # includes the chi(n=1) line at m=2

    def test_deterministic_output(self, capsys):
        args = ("verify", "--m-max", "2", "--n-max", "5", "--seed", "9")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_corrupted_table_fails_with_witness(self, capsys, monkeypatch):
        broken = CorollaryEntry(1, lambda n: moments.central_binomial(n), "corrupted")
        monkeypatch.setitem(moments.COROLLARIES, ("A", 2), broken)
        code, out, err = run(capsys, "verify", "--families", "A", "--m-max", "2", "--n-max", "4")
        assert code == 1
        report = json.loads(out)
        assert report["all_pass"] is False
        corr = next(c for c in report["checks"] if c["name"] == "oracle-vs-corollary-table")
        assert corr["status"] == "fail"
        witness = corr["witness"]
        assert witness["family"] == "A" and witness["m"] == 2
        assert {"n", "lhs", "rhs"} <= set(witness)
        assert "oracle-vs-corollary-table" in err

    def test_invalid_config(self, capsys):
        assert run(capsys, "verify", "--families", "Q")[0] == 2
        assert run(capsys, "verify", "--n-max", "0")[0] == 2
        assert run(capsys, "verify", "--jobs", "0")[0] == 2

    def test_jobs_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("MOMENTS_JOBS", "4")
        assert run(capsys, "verify", "--m-max", "1", "--n-max", "2")[0] == 0
        monkeypatch.setenv("MOMENTS_JOBS", "zero")
        assert run(capsys, "verify", "--m-max", "1", "--n-max", "2")[0] == 2


class TestDiscover:
    def test_rediscovers_printed_line(self, capsys):
        code, out, _ = run(capsys, "discover", "A", "even", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["matches_printed"] is True
        assert payload["candidate"]["status"] == "verified"

    def test_c_odd_line_with_guard(self, capsys):
        code, out, _ = run(capsys, "discover", "C", "odd", "2")
        payload = json.loads(out)
        assert code == 0
        assert payload["matches_printed"] is True
        assert payload["note"] == "valid for n > 3"

    def test_open_case_search(self, capsys):
        code, out, _ = run(
            capsys, "discover", "D", "even", "1", "--max-degree", "1", "--max-roots", "1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["mode"] == "open-case-search"
        assert payload["attempted"] == len(payload["candidates"]) + payload["skipped_singular"]
        assert payload["verified_count"] == 0
        assert all(c["status"] == "refuted" for c in payload["candidates"])

    def test_usage(self, capsys):
        assert run(capsys, "discover", "A", "sideways", "1")[0] == 2
        assert run(capsys, "discover", "A", "even", "-1")[0] == 2


class TestTable:
    def test_csv_values(self, capsys):
        code, out, _ = run(
            capsys, "table", "--families", "A", "--m-max", "4", "--n-max", "6", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "family,m,n,value"
        # all three methods exist for A at m = 1..4 (m = 0 has no closed form)
        assert len(lines) == 1 + 4 * 6
        assert "A,2,3,48" in lines

    def test_json_records(self, capsys):
        code, out, _ = run(
            capsys, "table", "--families", "C", "--m-max", "2", "--n-max", "4", "--format", "json"
        )
        assert code == 0
        records = json.loads(out)
        assert {"family", "m", "n", "method", "value", "note"} == set(records[0])
        hits = [r for r in records if (r["m"], r["n"]) == (2, 2)]
        assert {r["value"] for r in hits} == {"3"}
        assert {r["method"] for r in hits} == {"oracle", "theorem", "corollary"}

    def test_oracle_only_covers_everything(self, capsys):
        code, out, _ = run(
            capsys,
            "table",
            "--families",
            "D",
            "--m-max",
            "2",
            "--n-max",
            "3",
            "--methods",
            "oracle",
        )
        lines = out.strip().splitlines()
        assert len(lines) == 1 + 3 * 3

    def test_latex_corollaries_one_tabular_per_family(self, capsys):
        code, out, _ = run(capsys, "table", "--format", "latex", "--corollaries", "--m-max", "10")
        assert code == 0
        assert out.count(r"\begin{tabular}") == 4
        assert out.count(r"\end{tabular}") == 4
        assert r"2^{2n-2}n" in out

    def test_markdown_and_csv_corollaries(self, capsys):
        code, out, _ = run(capsys, "table", "--format", "markdown", "--corollaries")
        assert code == 0
        assert out.startswith("| family |")
        code, out, _ = run(capsys, "table", "--format", "csv", "--corollaries", "--families", "B")
        rows = out.strip().splitlines()
        assert rows[0] == "family,m,min_n,formula"
        assert any(r.startswith("B,2,1") for r in rows)

    def test_determinism(self, capsys):
        args = ("table", "--families", "B", "--m-max", "3", "--n-max", "5", "--format", "json")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "table.csv"
        code, out, _ = run(capsys, "table", "--families", "A", "--m-max", "1", "--n-max", "2", "--out", str(path))
        assert code == 0 and out == ""
        assert path.read_text().startswith("family,m,n,value")
