"""Command-line contract: formats, exit codes, cache wiring, round trips."""

import csv
import io
import json
import subprocess

from genocchi.cache import save_bernoulli_cache
from genocchi.cli import (
    main,
    render_reports_csv,
    render_reports_json,
)
from genocchi.special import bernoulli_table
from genocchi.verify import TheoremId, run_grid


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.reader(io.StringIO(text)))


def canonical_reports_from_csv(text):
    """Fold the two row kinds of the verify CSV back into report dicts."""
    rows = parse_csv(text)
    assert rows[0][0] == "kind"
    header = rows[0]
    reports = []
    for row in rows[1:]:
        fields = dict(zip(header, row))
        if fields["kind"] == "report":
            reports.append({
                "theorem": fields["theorem"],
                "n_range": [int(fields["n_min"]), int(fields["n_max"])],
                "a_range": None if fields["a_min"] == "" else
                           [int(fields["a_min"]), int(fields["a_max"])],
                "checked": int(fields["checked"]),
                "failure_count": int(fields["failure_count"]),
                "elapsed_s": float(fields["elapsed_s"]),
                "notes": json.loads(fields["notes"]),
                "failures": [],
            })
        else:
            assert fields["kind"] == "failure"
            reports[-1]["failures"].append({
                "n": int(fields["n"]),
                "a": None if fields["a"] == "" else int(fields["a"]),
                "observed": fields["observed"],
                "expected": fields["expected"],
            })
    return reports


class TestBernoulliCommand:
    def test_csv_output(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "bernoulli", "--n-max", "4",
            "--cache-path", str(tmp_path / "b.json"),
        )
        assert code == 0
        assert parse_csv(out) == [
            ["index", "numerator", "denominator"],
            ["0", "1", "1"],
            ["1", "-1", "2"],
            ["2", "1", "6"],
            ["3", "0", "1"],
            ["4", "-1", "30"],
        ]

    def test_json_output_uses_decimal_strings(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "bernoulli", "--n-max", "12", "--format", "json",
            "--cache-path", str(tmp_path / "b.json"),
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["max_index"] == 12
        assert payload["values"][4] == {"num": "-1", "den": "30"}
        assert payload["values"][12] == {"num": "-691", "den": "2730"}
        assert all(isinstance(v["num"], str) for v in payload["values"])

    def test_index_zero_only(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "bernoulli", "--n-max", "0",
            "--cache-path", str(tmp_path / "b.json"),
        )
        assert code == 0
        assert parse_csv(out) == [["index", "numerator", "denominator"], ["0", "1", "1"]]

    def test_cache_is_created_and_reused(self, capsys, tmp_path):
        path = tmp_path / "b.json"
        assert run_cli(capsys, "bernoulli", "--n-max", "8", "--cache-path", str(path))[0] == 0
        stamp = path.read_text()
        assert run_cli(capsys, "bernoulli", "--n-max", "6", "--cache-path", str(path))[0] == 0
        assert path.read_text() == stamp

    def test_env_var_names_the_cache(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "env-cache.json"
        monkeypatch.setenv("GENOCCHI_CACHE", str(path))
        code, _, _ = run_cli(capsys, "bernoulli", "--n-max", "4")
        assert code == 0
        assert path.exists()

    def test_corrupt_cache_exits_two_and_names_the_file(self, capsys, tmp_path):
        path = tmp_path / "b.json"
        save_bernoulli_cache(path, bernoulli_table(10))
        raw = json.loads(path.read_text())
        raw["entries"][2]["num"] = "7"
        path.write_text(json.dumps(raw))
        code, _, err = run_cli(capsys, "bernoulli", "--n-max", "5", "--cache-path", str(path))
        assert code == 2
        assert str(path) in err and "entry" in err

    def test_negative_n_max_exits_two(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "bernoulli", "--n-max", "-3",
            "--cache-path", str(tmp_path / "b.json"),
        )
        assert code == 2 and "n-max" in err


class TestGenocchiCommand:
    def test_csv_default_base(self, capsys):
        code, out, _ = run_cli(capsys, "genocchi", "--n-max", "4")
        assert code == 0
        assert parse_csv(out) == [
            ["n", "value"], ["0", "0"], ["1", "1"], ["2", "-1"], ["3", "0"], ["4", "1"],
        ]

    def test_csv_base_three(self, capsys):
        code, out, _ = run_cli(capsys, "genocchi", "--n-max", "6", "--a", "3")
        assert code == 0
        assert [row[1] for row in parse_csv(out)[1:]] == ["0", "1", "-2", "1", "4", "-5", "-26"]

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "genocchi", "--n-max", "8", "--a", "5", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "a": 5,
            "n_max": 8,
            "values": ["0", "1", "-4", "6", "16", "-74", "-264", "1946", "9056"],
        }

    def test_order_override(self, capsys):
        code, out, _ = run_cli(capsys, "genocchi", "--n-max", "4", "--a", "3", "--order", "12")
        assert code == 0
        assert [row[1] for row in parse_csv(out)[1:]] == ["0", "1", "-2", "1", "4"]

    def test_bad_base_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "genocchi", "--n-max", "4", "--a", "1")
        assert code == 2 and "--a" in err

    def test_order_below_n_max_exits_two(self, capsys):
        code, _, _ = run_cli(capsys, "genocchi", "--n-max", "10", "--a", "3", "--order", "4")
        assert code == 2


class TestVerifyCommand:
    def test_clean_run_exits_zero(self, capsys):
        code, out, err = run_cli(capsys, "verify", "theorem1", "--n-max", "20", "--a-max", "5")
        assert code == 0
        reports = canonical_reports_from_csv(out)
        assert len(reports) == 1
        assert reports[0]["checked"] == 20 * 4
        assert reports[0]["failure_count"] == 0
        assert "theorem1" in err  # progress goes to stderr

    def test_mutation_exits_one_and_localizes(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "theorem2",
            "--n-max", "10", "--a-max", "4", "--mutate", "5,4",
        )
        assert code == 1
        reports = canonical_reports_from_csv(out)
        assert reports[0]["failure_count"] == 1
        assert reports[0]["failures"][0]["n"] == 5
        assert reports[0]["failures"][0]["a"] == 4
        assert "FAIL" in err

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "odd_genocchi", "--n-max", "12", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["theorem"] == "odd_genocchi"
        assert payload[0]["a_range"] is None
        assert payload[0]["checked"] == 6

    def test_all_statements_on_a_small_grid(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "verify", "all", "--n-max", "12", "--a-max", "4",
            "--cache-path", str(tmp_path / "b.json"),
        )
        assert code == 0
        reports = canonical_reports_from_csv(out)
        assert [r["theorem"] for r in reports] == [t.value for t in TheoremId]
        assert all(r["failure_count"] == 0 for r in reports)

    def test_jobs_flag_changes_nothing_but_elapsed(self, capsys, tmp_path):
        argv = ["verify", "theorem1", "--n-max", "15", "--a-max", "4", "--format", "json"]
        code1, out1, _ = run_cli(capsys, *argv)
        code2, out2, _ = run_cli(capsys, *argv, "--jobs", "2")
        assert code1 == code2 == 0
        one, two = json.loads(out1), json.loads(out2)
        for r in one + two:
            del r["elapsed_s"]
        assert one == two

    def test_unknown_statement_exits_two(self, capsys):
        assert run_cli(capsys, "verify", "nosuch")[0] == 2

    def test_malformed_mutate_exits_two(self, capsys):
        assert run_cli(capsys, "verify", "theorem2", "--mutate", "5")[0] == 2
        assert run_cli(capsys, "verify", "theorem2", "--mutate", "x,y")[0] == 2

    def test_mutate_with_all_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "verify", "all", "--mutate", "5,4")
        assert code == 2 and "single" in err

    def test_mutate_outside_grid_exits_two(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "theorem2", "--n-max", "10", "--a-max", "4",
            "--mutate", "5,9",
        )
        assert code == 2 and "outside" in err

    def test_missing_subcommand_exits_two(self, capsys):
        assert run_cli(capsys)[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0


class TestRoundTrips:
    def test_csv_and_json_verify_encodings_parse_identically(self):
        reports = [
            run_grid(TheoremId.THEOREM2, (2, 10), (2, 4), mutate=(5, 4)),
            run_grid(TheoremId.THEOREM1, (1, 12), (2, 4)),
            run_grid(TheoremId.ODD_GENOCCHI, (2, 12), None),
        ]
        from_csv = canonical_reports_from_csv(render_reports_csv(reports))
        from_json = json.loads(render_reports_json(reports))
        assert from_csv == from_json

    def test_bernoulli_encodings_parse_identically(self, capsys, tmp_path):
        cache = str(tmp_path / "b.json")
        _, out_csv, _ = run_cli(capsys, "bernoulli", "--n-max", "20", "--cache-path", cache)
        _, out_json, _ = run_cli(
            capsys, "bernoulli", "--n-max", "20", "--format", "json", "--cache-path", cache,
        )
        rows = parse_csv(out_csv)[1:]
        via_csv = [(int(r[0]), int(r[1]), int(r[2])) for r in rows]
        payload = json.loads(out_json)
        via_json = [
            (i, int(v["num"]), int(v["den"])) for i, v in enumerate(payload["values"])
        ]
        assert via_csv == via_json

    def test_genocchi_encodings_parse_identically(self, capsys):
        _, out_csv, _ = run_cli(capsys, "genocchi", "--n-max", "10", "--a", "7")
        _, out_json, _ = run_cli(
            capsys, "genocchi", "--n-max", "10", "--a", "7", "--format", "json",
        )
        via_csv = [int(r[1]) for r in parse_csv(out_csv)[1:]]
        via_json = [int(v) for v in json.loads(out_json)["values"]]
        assert via_csv == via_json


class TestConsoleScript:
    def test_entry_point_runs(self):
        proc = subprocess.run(["genocchi", "--help"], capture_output=True, text=True)
        assert proc.returncode == 0
        assert "verify" in proc.stdout
