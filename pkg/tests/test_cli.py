"""Command line behavior: arguments, formats, exit codes."""

import csv
import io
import json

import pytest

from ptosc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def csv_rows(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def round12(x):
    return float(format(float(x), ".12g"))


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["spectrum", "--family", "momentum", "--W", "10",
             "--strategy", "manual"],
            ["spectrum", "--family", "momentum", "--W", "10",
             "--strategy", "sum", "--w", "3"],
            ["spectrum", "--family", "momentum", "--W", "10",
             "--strategy", "sum", "--N", "10", "--count", "40"],
            ["spectrum", "--family", "momentum", "--W", "10", "--R", "1",
             "--strategy", "sum"],
            ["spectrum", "--family", "momentum", "--strategy", "sum"],
            ["spectrum", "--family", "coordinate", "--R", "8",
             "--strategy", "diff"],
            ["spectrum", "--family", "momentum", "--W", "10",
             "--strategy", "diff"],
            ["sweep", "--family", "momentum", "--W", "10", "--axis", "R",
             "--values", "1,2", "--strategy", "sum"],
            ["sweep", "--family", "momentum", "--W", "10", "--L", "3",
             "--axis", "L", "--values", "1,2", "--strategy", "sum"],
            ["sweep", "--family", "momentum", "--axis", "L",
             "--values", "1,2", "--strategy", "sum"],
            ["sweep", "--family", "momentum", "--W", "10", "--axis", "L",
             "--values", " ", "--strategy", "sum"],
            ["sweep", "--family", "momentum", "--W", "10", "--axis", "L",
             "--values", "1,zap", "--strategy", "sum"],
            ["converge", "--family", "momentum", "--W", "1",
             "--strategy", "manual", "--w", "1", "--N1", "3"],
        ],
    )
    def test_exit_code_two(self, capsys, argv):
        code, _, err = run_cli(capsys, *argv)
        assert code == 2
        assert "error:" in err

    def test_unknown_choice_is_usage_error(self, capsys):
        code, _, _ = run_cli(
            capsys, "spectrum", "--family", "momentum", "--W", "10",
            "--strategy", "bogus",
        )
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "--help")
        assert code == 0


class TestSpectrumCommand:
    def test_unit_oscillator_text(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--family", "momentum", "--W", "1",
            "--L", "0", "--strategy", "manual", "--w", "1",
            "--N", "30", "--count", "5",
        )
        assert code == 0
        assert "verdict: all-real-positive" in out
        for line, expected in zip(
            [l for l in out.splitlines() if l.strip().startswith(("0", "1",
                                                                  "2", "3",
                                                                  "4"))],
            [1.0, 3.0, 5.0, 7.0, 9.0],
        ):
            assert float(line.split()[1]) == pytest.approx(expected,
                                                           abs=1e-9)

    def test_momentum_variational_reports_a_verdict(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--family", "momentum", "--W", "10",
            "--L", "5.4", "--strategy", "variational",
        )
        assert code == 0
        assert "verdict:" in out

    def test_csv_schema_and_pair_tags(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--family", "coordinate", "--L", "10",
            "--R", "8", "--strategy", "variational", "--format", "csv",
        )
        assert code == 0
        rows = csv_rows(out)
        assert list(rows[0].keys()) == [
            "family", "W", "L", "R", "strategy", "w", "N", "index",
            "re", "im", "class", "verdict",
        ]
        assert len(rows) == 40
        assert all(r["verdict"] == "broken" for r in rows)
        assert all(r["W"] == "" for r in rows)
        pair_rows = [r for r in rows if r["class"].startswith("pair:")]
        assert pair_rows, "expected at least one tagged conjugate pair"
        tags = {}
        for r in pair_rows:
            tags.setdefault(r["class"], []).append(float(r["im"]))
        # members are conjugate to the classifier's tolerance, which is
        # relative to the magnitude, not to machine precision
        for tag, ims in tags.items():
            assert len(ims) == 2
            assert ims[0] * ims[1] < 0
            assert abs(ims[0] + ims[1]) <= 1e-3

    def test_csv_json_payload_parity(self, capsys):
        argv = [
            "spectrum", "--family", "coordinate", "--L", "10", "--R", "8",
            "--strategy", "variational",
        ]
        code, out_csv, _ = run_cli(capsys, *argv, "--format", "csv")
        assert code == 0
        code, out_json, _ = run_cli(capsys, *argv, "--format", "json")
        assert code == 0
        rows_csv = csv_rows(out_csv)
        rows_json = json.load(io.StringIO(out_json))["data"]["rows"]
        assert len(rows_csv) == len(rows_json)
        for rc, rj in zip(rows_csv, rows_json):
            for key, cell in rc.items():
                value = rj[key]
                if cell == "":
                    assert value is None
                elif isinstance(value, (int, float)):
                    assert round12(cell) == round12(value)
                else:
                    assert cell == str(value)

    def test_sort_real_reorders_display(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--family", "coordinate", "--L", "10",
            "--R", "8", "--strategy", "variational", "--sort", "real",
            "--format", "csv",
        )
        assert code == 0
        rows = csv_rows(out)
        res = [float(r["re"]) for r in rows]
        assert res == sorted(res)
        # the trailing rows hold the largest-real-part pair; its members
        # carry opposite-sign imaginary parts
        last_two = rows[-2:]
        assert last_two[0]["class"] == last_two[1]["class"]
        assert float(last_two[0]["im"]) * float(last_two[1]["im"]) < 0

    def test_dump_matrix_writes_nonzeros(self, capsys, tmp_path):
        path = tmp_path / "h.csv"
        code, _, _ = run_cli(
            capsys, "spectrum", "--family", "momentum", "--W", "10",
            "--L", "5.4", "--strategy", "sum", "--N", "12",
            "--count", "12", "--dump-matrix", str(path),
        )
        assert code == 0
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["row", "col", "re", "im"]
        assert all(int(c) <= int(r) for r, c, _, _ in rows[1:])


class TestTableCommands:
    def test_table2_all_blocks_pass(self, capsys):
        code, out, _ = run_cli(capsys, "table2")
        assert code == 0
        assert "table2: 4/4 blocks pass" in out

    def test_table1_block1_mismatch_sets_exit_code(self, capsys):
        # the recomputed leading window disagrees with the stored
        # variational listing (README: known discrepancy), so the
        # command must report the comparison failure
        code, out, _ = run_cli(capsys, "table1")
        assert code == 1
        assert "table1: 3/4 blocks pass" in out
        block1 = out.split("table1 block 2")[0]
        assert "FAIL" in block1

    def test_table1_csv_rows_carry_status(self, capsys):
        code, out, _ = run_cli(capsys, "table1", "--format", "csv")
        assert code == 1
        rows = csv_rows(out)
        assert {r["status"] for r in rows} == {"pass", "fail"}
        failing_blocks = {r["block"] for r in rows if r["status"] == "fail"}
        assert failing_blocks == {"1"}

    def test_table2_json_reports_all_pass(self, capsys):
        code, out, _ = run_cli(capsys, "table2", "--format", "json")
        assert code == 0
        payload = json.load(io.StringIO(out))
        assert payload["data"]["all_pass"] is True
        assert payload["header"]["command"] == "table2"

    def test_table1_json_payload_is_deterministic(self, capsys):
        code, first, _ = run_cli(capsys, "table1", "--format", "json")
        assert code == 1
        code, second, _ = run_cli(capsys, "table1", "--format", "json")
        assert code == 1
        assert first == second


class TestSweepCommand:
    def test_rows_track_grid_and_rejections(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--family", "momentum", "--W", "10",
            "--axis", "L", "--values", "0,6,10", "--strategy",
            "variational", "--N", "40", "--count", "12", "--format", "csv",
        )
        assert code == 0
        rows = csv_rows(out)
        assert len(rows) == 3
        assert [r["value"] for r in rows] == ["0", "6", "10"]
        assert rows[0]["verdict"] == "all-real-positive"
        assert rows[0]["status"] == "ok"
        assert rows[2]["verdict"] == ""
        assert rows[2]["w"] == ""
        assert rows[2]["status"].startswith("rejected:")

    def test_text_mode_prints_one_line_per_point(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--family", "coordinate", "--L", "10",
            "--axis", "R", "--values", "0,8", "--strategy", "diff",
            "--N", "30", "--count", "8",
        )
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert len(lines) == 4  # banner, header, two points


class TestConvergeCommand:
    def test_unit_oscillator_statistics(self, capsys):
        code, out, _ = run_cli(
            capsys, "converge", "--family", "momentum", "--W", "1",
            "--L", "0", "--strategy", "manual", "--w", "1",
        )
        assert code == 0
        assert "stable leading run: 50 of 50" in out

    def test_csv_marks_stable_prefix(self, capsys):
        code, out, _ = run_cli(
            capsys, "converge", "--family", "momentum", "--W", "10",
            "--L", "5.4", "--strategy", "variational", "--format", "csv",
        )
        assert code == 0
        rows = csv_rows(out)
        assert len(rows) == 50
        flags = [r["stable"] for r in rows]
        first_no = flags.index("no")
        assert all(f == "yes" for f in flags[:first_no])
        assert all(f == "no" for f in flags[first_no:])


class TestCheckCommand:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run_cli(capsys, "check")
        assert code == 0
        assert "6/6 checks pass" in out

    def test_json_rows_carry_names(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--format", "json")
        assert code == 0
        payload = json.load(io.StringIO(out))
        names = {r["name"] for r in payload["data"]["rows"]}
        assert "commutator-defect" in names
        assert "assembly-equivalence" in names
        assert payload["data"]["passed"] == payload["data"]["total"] == 6
