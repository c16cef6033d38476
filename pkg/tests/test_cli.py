"""Command-line surface: formats, determinism, exit codes."""

import io
import json
import math
from fractions import Fraction

import pytest

from gammazeta import cli
from gammazeta import verify as verify_mod


def run_cli(argv):
    """Invoke main() with stdout captured; returns (exit_code, text)."""
    import contextlib

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def csv_table(text):
    lines = text.strip().split("\n")
    assert lines[0] == "row,col,value"
    rows = {}
    for line in lines[1:]:
        n, k, v = line.split(",")
        rows.setdefault(int(n), {})[int(k)] = int(v)
    return [
        [cells[k] for k in sorted(cells)]
        for _, cells in sorted(rows.items())
    ]


class TestComplexFlagParsing:
    def test_plain_real_is_exact(self):
        value = cli.parse_complex_flag("0.75")
        assert isinstance(value, Fraction)
        assert value == Fraction(3, 4)

    def test_real_imag_pair(self):
        assert cli.parse_complex_flag("1.5,-2") == complex(1.5, -2.0)

    def test_zero_imag_collapses_to_exact(self):
        assert cli.parse_complex_flag("2,0") == Fraction(2)

    def test_rejects_garbage(self):
        for bad in ("abc", "1;2", "1,2,3", "1+2j", "1/2"):
            with pytest.raises(cli.UsageError):
                cli.parse_complex_flag(bad)

    def test_scientific_notation_accepted(self):
        assert cli.parse_complex_flag("1e-3") == Fraction(1, 1000)


class TestTables:
    def test_c_table_matches_printed_rows(self):
        code, out = run_cli(["tables", "c", "--max", "5"])
        assert code == 0
        assert csv_table(out) == [
            [1],
            [0, 1],
            [0, 2, 3],
            [0, 6, 20, 15],
            [0, 24, 130, 210, 105],
            [0, 120, 924, 2380, 2520, 945],
        ]

    def test_eulerian_row_three(self):
        code, out = run_cli(["tables", "eulerian", "--max", "3"])
        assert code == 0
        assert csv_table(out)[3] == [1, 4, 1]

    def test_json_round_trip_and_strings(self):
        code, out = run_cli(["tables", "a", "--max", "7", "--format", "json"])
        assert code == 0
        record = json.loads(out)
        assert record["schema_version"] == cli.SCHEMA_VERSION
        assert record["payload"]["rows"][7] == [
            "0", "1440", "0", "6272", "0", "2240", "0", "128"
        ]
        # bit-exact round trip
        assert json.loads(json.dumps(record)) == record

    def test_deterministic_output(self):
        one = run_cli(["tables", "b", "--max", "8", "--format", "json"])
        two = run_cli(["tables", "b", "--max", "8", "--format", "json"])
        assert one == two

    def test_cap_enforced(self):
        code, _ = run_cli(["tables", "c", "--max", "100"])
        assert code == cli.EXIT_USAGE
        code, _ = run_cli(["tables", "c", "--max", "100", "--cap", "128"])
        assert code == 0

    def test_unknown_family_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            run_cli(["tables", "fibonacci", "--max", "3"])
        assert exc.value.code == cli.EXIT_USAGE


class TestEval:
    def test_gamma_at_one(self):
        code, out = run_cli(["eval", "gamma", "--s", "1", "--terms", "100"])
        assert code == 0
        payload = json.loads(out)["payload"]
        assert payload["partial_sum"]["re"] == pytest.approx(1 - 1 / 101, abs=1e-14)
        assert payload["reference"]["re"] == pytest.approx(1.0, rel=1e-13)
        assert len(payload["term_magnitudes"]) == 100

    def test_gamma_at_zero_is_exact(self):
        code, out = run_cli(["eval", "gamma", "--s", "0", "--terms", "5"])
        payload = json.loads(out)["payload"]
        assert payload["partial_sum"]["re"] == 1.0
        assert payload["rel_error"] < 1e-15

    def test_zeta_at_two(self):
        code, out = run_cli(["eval", "zeta", "--s", "2", "--terms", "60"])
        assert code == 0
        payload = json.loads(out)["payload"]
        assert payload["reference"]["re"] == pytest.approx(math.pi**2 / 12, rel=1e-13)
        assert payload["rel_error"] < 0.05

    def test_recurrence_path_flag(self):
        _, direct = run_cli(["eval", "zeta", "--s", "0.75", "--terms", "40"])
        _, rec = run_cli(
            ["eval", "zeta", "--s", "0.75", "--terms", "40", "--path", "recurrence"]
        )
        d = json.loads(direct)["payload"]["partial_sum"]
        r = json.loads(rec)["payload"]["partial_sum"]
        assert d == r  # exact backends agree bit for bit

    def test_domain_error_exit_code(self):
        code, _ = run_cli(["eval", "zeta", "--s", "-1", "--terms", "5"])
        assert code == cli.EXIT_DOMAIN
        code, _ = run_cli(["eval", "gamma", "--s", "-3", "--terms", "5"])
        assert code == cli.EXIT_DOMAIN

    def test_usage_error_exit_codes(self):
        code, _ = run_cli(["eval", "gamma", "--s", "1", "--terms", "0"])
        assert code == cli.EXIT_USAGE
        code, _ = run_cli(["tables", "c", "--max", "-1"])
        assert code == cli.EXIT_USAGE
        code, _ = run_cli(["integral-check", "--s", "1", "--n", "-1"])
        assert code == cli.EXIT_USAGE


class TestConverge:
    def test_csv_shape_and_decay(self):
        code, out = run_cli(
            ["converge", "gamma", "--s", "1.5", "--max-terms", "200", "--stride", "50"]
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "terms,partial_sum_re,partial_sum_im,rel_error"
        rows = [line.split(",") for line in lines[1:]]
        assert [int(r[0]) for r in rows] == [50, 100, 150, 200]
        errors = [float(r[3]) for r in rows]
        assert errors == sorted(errors, reverse=True)

    def test_error_column_at_zero_argument(self):
        code, out = run_cli(
            ["converge", "gamma", "--s", "0", "--max-terms", "30", "--stride", "10"]
        )
        errors = [float(line.split(",")[3]) for line in out.strip().split("\n")[1:]]
        assert all(e <= 1e-15 for e in errors)

    def test_stride_validation(self):
        code, _ = run_cli(
            ["converge", "zeta", "--s", "1", "--max-terms", "5", "--stride", "9"]
        )
        assert code == cli.EXIT_USAGE

    def test_json_format(self):
        code, out = run_cli(
            ["converge", "zeta", "--s", "0.75", "--max-terms", "40", "--stride", "20",
             "--format", "json"]
        )
        record = json.loads(out)
        assert [s["terms"] for s in record["payload"]["samples"]] == [20, 40]


class TestVerify:
    def test_stirling_suite_passes(self):
        code, out = run_cli(["verify", "stirling", "--depth", "10"])
        assert code == 0
        lines = out.strip().split("\n")
        assert all(line.startswith("PASS ") for line in lines)
        assert len(lines) == len(verify_mod.SUITES["stirling"])

    def test_json_format(self):
        code, out = run_cli(["verify", "bell", "--depth", "6", "--format", "json"])
        assert code == 0
        record = json.loads(out)
        assert all(c["status"] == "pass" for c in record["payload"]["checks"])

    def test_failure_exit_code(self, monkeypatch):
        def failing(depth, rng):
            return "synthetic failure"

        monkeypatch.setitem(
            verify_mod.SUITES, "stirling", [("always_fails", failing)]
        )
        code, out = run_cli(["verify", "stirling", "--depth", "4"])
        assert code == cli.EXIT_VERIFY_FAILED
        assert "FAIL stirling:always_fails: synthetic failure" in out

    def test_seed_changes_are_accepted(self):
        code, _ = run_cli(["verify", "oracle", "--depth", "4", "--seed", "7"])
        assert code == 0

    def test_threaded_run_matches_serial(self):
        serial = verify_mod.run_suite("bell", 6, threads=1)
        threaded = verify_mod.run_suite("bell", 6, threads=4)
        assert [(r.name, r.passed) for r in serial] == [
            (r.name, r.passed) for r in threaded
        ]

    def test_threads_env_override(self, monkeypatch):
        monkeypatch.setenv("THREADS", "2")
        code, _ = run_cli(["verify", "stirling", "--depth", "6"])
        assert code == 0


class TestIntegralCheck:
    def test_log_two_identity(self):
        code, out = run_cli(["integral-check", "--s", "1", "--n", "0"])
        assert code == 0
        payload = json.loads(out)["payload"]
        assert payload["rel_discrepancy"] < 1e-10
        assert payload["rhs"]["re"] == pytest.approx(math.log(2), rel=1e-13)
        assert payload["quadrature"]["converged"] is True

    def test_higher_order(self):
        code, out = run_cli(["integral-check", "--s", "0.75", "--n", "4"])
        payload = json.loads(out)["payload"]
        assert payload["rel_discrepancy"] < 1e-8

    def test_budget_exit_code(self):
        code, _ = run_cli(["integral-check", "--s", "0.75", "--n", "4",
                           "--budget", "50"])
        assert code == cli.EXIT_BUDGET

    def test_n_cap(self):
        code, _ = run_cli(["integral-check", "--s", "1", "--n", "13"])
        assert code == cli.EXIT_USAGE
