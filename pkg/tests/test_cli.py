"""End-to-end CLI tests: output formats and the exit-code contract.

Exit codes: 0 success/all-pass, 1 verified mismatch or counterexample,
2 usage error.
"""

import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

import deficit_takagi.cli as cli_module
from deficit_takagi.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, env=None):
    return runner.invoke(main, list(args), env=env, catch_exceptions=False)


class TestCompute:
    def test_all_methods_match(self, runner):
        result = invoke(runner, "compute", "5", "--method", "all")
        assert result.exit_code == 0
        assert result.output.strip() == "3 3 3 3 3 MATCH"

    def test_default_method(self, runner):
        result = invoke(runner, "compute", "0")
        assert result.exit_code == 0
        assert result.output.strip() == "0"

    def test_large_power_recurrence(self, runner):
        result = invoke(runner, "compute", "1048576", "--method", "recurrence")
        assert result.exit_code == 0
        assert result.output.strip() == "1048556"

    def test_out_of_range_is_usage_error(self, runner):
        assert invoke(runner, "compute", "-1").exit_code == 2
        assert invoke(runner, "compute", str((1 << 60) + 1)).exit_code == 2

    def test_cost_guard(self, runner, monkeypatch):
        monkeypatch.setattr(cli_module, "COST_GUARD", 10)
        assert invoke(runner, "compute", "12", "--method", "naive").exit_code == 2
        assert invoke(runner, "compute", "12", "--method", "all").exit_code == 2
        forced = invoke(runner, "compute", "12", "--method", "naive", "--force")
        assert forced.exit_code == 0
        assert forced.output.strip() == "7"

    def test_unknown_method(self, runner):
        assert invoke(runner, "compute", "5", "--method", "magic").exit_code == 2


class TestRange:
    def test_bfile(self, runner):
        result = invoke(runner, "range", "0", "5")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert len(lines) == 6
        assert lines[0] == "0 0"
        assert lines[-1] == "5 3"

    def test_single_term(self, runner):
        result = invoke(runner, "range", "1", "1")
        assert result.output.strip() == "1 1"

    def test_byte_identical_across_methods(self, runner):
        outputs = {
            method: invoke(runner, "range", "0", "80", "--method", method).output
            for method in ("naive", "sets", "recurrence", "lemma2", "takagi")
        }
        assert len(set(outputs.values())) == 1

    def test_csv(self, runner):
        result = invoke(runner, "range", "0", "2", "--format", "csv")
        assert result.output == "n,value\n0,0\n1,1\n2,1\n"

    def test_json(self, runner):
        result = invoke(runner, "range", "3", "5", "--format", "json")
        assert json.loads(result.output) == [[3, 3], [4, 2], [5, 3]]

    def test_out_file(self, runner, tmp_path):
        target = tmp_path / "terms.txt"
        result = invoke(runner, "range", "0", "5", "--out", str(target))
        assert result.exit_code == 0
        assert target.read_text().splitlines()[-1] == "5 3"

    def test_unwritable_out(self, runner, tmp_path):
        target = tmp_path / "missing-dir" / "terms.txt"
        assert invoke(runner, "range", "0", "5", "--out", str(target)).exit_code == 2

    def test_reversed_range(self, runner):
        assert invoke(runner, "range", "5", "2").exit_code == 2

    def test_all_not_allowed(self, runner):
        assert invoke(runner, "range", "0", "5", "--method", "all").exit_code == 2


class TestTakagi:
    def test_dyadic(self, runner):
        result = invoke(runner, "takagi", "1", "--exp", "2")
        assert result.output.strip() == "1/2"

    def test_rational(self, runner):
        result = invoke(runner, "takagi", "2", "3")
        assert result.output.strip() == "2/3"

    def test_zero(self, runner):
        result = invoke(runner, "takagi", "0", "--exp", "0")
        assert result.output.strip() == "0"

    def test_enclosure(self, runner):
        from fractions import Fraction

        result = invoke(runner, "takagi", "2", "3", "--enclose", "20")
        assert result.exit_code == 0
        lo, hi = result.output.strip().strip("[]").split(", ")
        assert Fraction(lo) <= Fraction(2, 3) <= Fraction(hi)
        assert Fraction(hi) - Fraction(lo) == Fraction(1, 1 << 19)

    def test_out_of_unit_interval(self, runner):
        assert invoke(runner, "takagi", "2", "1").exit_code == 2
        assert invoke(runner, "takagi", "5", "--exp", "2").exit_code == 2

    def test_denominator_choices(self, runner):
        assert invoke(runner, "takagi", "1").exit_code == 2  # neither den nor exp
        assert invoke(runner, "takagi", "1", "4", "--exp", "2").exit_code == 2  # both
        assert invoke(runner, "takagi", "1", "0").exit_code == 2  # zero denominator


class TestVerify:
    def test_single_identity_passes(self, runner):
        result = invoke(runner, "verify", "oeis6", "--kmax", "10")
        assert result.exit_code == 0
        assert "PASS" in result.output

    def test_unknown_identity(self, runner):
        assert invoke(runner, "verify", "bogus").exit_code == 2

    def test_corrupted_exits_1(self, runner):
        result = invoke(runner, "verify", "oeis6", "--kmax", "3", "--corrupt")
        assert result.exit_code == 1
        assert "FAIL" in result.output

    def test_all_ci_profile(self, runner):
        result = invoke(runner, "verify", "all",
                        env={"DEFICIT_TAKAGI_PROFILE": "ci"})
        assert result.exit_code == 0
        assert result.output.count("PASS") == 26

    def test_json_round_trip(self, runner):
        result = invoke(runner, "verify", "oeis6", "--kmax", "3", "--format", "json")
        decoded = json.loads(result.output)
        assert list(decoded) == ["id", "ranges", "cases", "pass", "counterexamples"]
        assert json.dumps(decoded, indent=2) == result.output.strip()

    def test_json_all(self, runner):
        result = invoke(runner, "verify", "all", "--kmax", "2", "--mmax", "1",
                        "--format", "json")
        decoded = json.loads(result.output)
        assert [entry["id"] for entry in decoded][:2] == ["lemma1", "lemma3"]

    def test_empty_sweep_warns(self, runner):
        # stderr is mixed into output by the test runner
        result = invoke(runner, "verify", "lemma1", "--kmax", "0")
        assert result.exit_code == 0
        assert "empty sweep" in result.output


class TestSpecial:
    def test_a026644(self, runner):
        result = invoke(runner, "special", "a026644", "--count", "3")
        assert result.output.strip() == "2 4 10"

    def test_a000975(self, runner):
        result = invoke(runner, "special", "a000975", "--count", "3")
        assert result.output.strip() == "1 2 5"

    def test_limit_variant(self, runner):
        result = invoke(runner, "special", "a026644", "--limit", "50")
        assert result.output.strip() == "2 4 10 20 42"

    def test_power4(self, runner):
        result = invoke(runner, "special", "power4", "--mmax", "1")
        assert result.output.strip() == "(1,1) (6,4)"

    def test_minima(self, runner):
        result = invoke(runner, "special", "minima", "--kmax", "3")
        assert result.output.splitlines() == ["1 2 1", "2 4 2", "3 10 5"]

    def test_unknown_sequence(self, runner):
        assert invoke(runner, "special", "fibonacci").exit_code == 2

    def test_out_of_range_kmax(self, runner):
        assert invoke(runner, "special", "minima", "--kmax", "30").exit_code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "deficit_takagi", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "compute" in proc.stdout
