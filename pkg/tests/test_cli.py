"""Command-line behaviour: tables, suite exit codes, exports, determinism."""

import json

import pytest
from click.testing import CliRunner

from idemarith.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


class TestTable:
    def test_mobius_csv(self, runner):
        result = runner.invoke(main, ["table", "mobius", "--range", "1..6"])
        assert result.exit_code == 0
        assert result.output == "n,value\n1,1\n2,-1\n3,-1\n4,0\n5,-1\n6,1\n"

    def test_ramanujan_parametrized(self, runner):
        result = runner.invoke(main, ["table", "ramanujan:6", "--range", "1..6"])
        values = [line.split(",")[1] for line in result.output.splitlines()[1:]]
        assert values == ["1", "-1", "-2", "-1", "1", "2"]

    def test_nu_negative_power_renders_fractions(self, runner):
        result = runner.invoke(main, ["table", "nu:-1", "--range", "1..4"])
        values = [line.split(",")[1] for line in result.output.splitlines()[1:]]
        assert values == ["1", "1/2", "1/3", "1/4"]

    def test_json_format(self, runner):
        result = runner.invoke(
            main, ["table", "totient", "--range", "1..4", "--format", "json"]
        )
        payload = json.loads(result.output)
        assert payload["values"] == {"1": "1", "2": "1", "3": "2", "4": "2"}

    def test_deterministic_output(self, runner):
        args = ["table", "jordan:2", "--range", "1..30", "--format", "json"]
        first = runner.invoke(main, args).output
        second = runner.invoke(main, args).output
        assert first == second

    def test_out_writes_file(self, runner, tmp_path):
        path = tmp_path / "table.csv"
        result = runner.invoke(
            main, ["table", "tau", "--range", "1..3", "--out", str(path)]
        )
        assert result.exit_code == 0
        assert path.read_text() == "n,value\n1,1\n2,2\n3,2\n"

    def test_unknown_function_is_usage_error(self, runner):
        result = runner.invoke(main, ["table", "sigma"])
        assert result.exit_code == 2

    def test_bad_range_is_usage_error(self, runner):
        result = runner.invoke(main, ["table", "mobius", "--range", "5..2"])
        assert result.exit_code == 2


class TestCheck:
    def test_product_law_passes(self, runner):
        result = runner.invoke(
            main, ["check", "product-law", "--n-max", "8", "--dim", "60"]
        )
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["pass"] is True
        assert report["suite"] == "product-law"
        assert all(c["pass"] for c in report["checks"])

    def test_axioms_zero_tolerance_fails(self, runner):
        # the dft-float cross-check carries ~1e-16 noise, so tol 0 must fail
        result = runner.invoke(
            main,
            ["check", "axioms", "--n-max", "6", "--dim", "24", "--tolerance", "0"],
        )
        assert result.exit_code == 1
        assert json.loads(result.output)["pass"] is False

    def test_errata_reported_but_never_fail(self, runner):
        result = runner.invoke(
            main, ["check", "analytic", "--n-max", "12", "--dim", "64"]
        )
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["errata"]
        assert all("id" in e for e in report["errata"])

    def test_unknown_suite_is_usage_error(self, runner):
        result = runner.invoke(main, ["check", "nonsense"])
        assert result.exit_code == 2

    def test_negative_tolerance_is_usage_error(self, runner):
        result = runner.invoke(
            main, ["check", "ramanujan", "--tolerance", "-1"]
        )
        assert result.exit_code == 2

    def test_report_to_file(self, runner, tmp_path):
        path = tmp_path / "report.json"
        result = runner.invoke(
            main,
            ["check", "transforms", "--n-max", "8", "--dim", "48", "--out", str(path)],
        )
        assert result.exit_code == 0
        assert json.loads(path.read_text())["pass"] is True


class TestExport:
    def test_projection(self, runner):
        result = runner.invoke(main, ["export", "P:1:2", "--dim", "4"])
        payload = json.loads(result.output)
        assert payload["kind"] == "diag"
        assert payload["n"] == 4
        assert payload["offset"] == 0
        assert payload["entries"] == [[0, 0], [1, 0], [0, 0], [1, 0]]

    def test_t_selector(self, runner):
        result = runner.invoke(main, ["export", "T:3:0:6", "--dim", "6"])
        entries = json.loads(result.output)["entries"]
        assert [e[0] for e in entries] == [0, 0, 1, 0, 1, 0]

    def test_c_operator_offset_one(self, runner):
        result = runner.invoke(
            main, ["export", "C:0:4", "--dim", "4", "--offset", "1"]
        )
        payload = json.loads(result.output)
        assert payload["offset"] == 1
        assert [e[0] for e in payload["entries"]] == [0, -2, 0, 2]

    def test_s_operator_roots_of_unity(self, runner):
        result = runner.invoke(main, ["export", "S:4", "--dim", "4"])
        entries = json.loads(result.output)["entries"]
        assert entries[0] == [1, 0]
        assert abs(entries[1][1] - 1) < 1e-12  # eps_4^1 = i

    def test_dense_export(self, runner):
        result = runner.invoke(main, ["export", "theta", "--dim", "3"])
        payload = json.loads(result.output)
        assert payload["kind"] == "dense"
        assert payload["n"] == 3
        # row-major flat entries: theta[1][1] = 2 sits at index 4
        assert payload["entries"][4] == [2, 0]

    def test_iu_star_export(self, runner):
        result = runner.invoke(main, ["export", "IU*", "--dim", "4"])
        payload = json.loads(result.output)
        assert payload["kind"] == "dense"
        assert abs(payload["entries"][5][0] - 0.5) < 1e-12  # diagonal entry at m = 2

    def test_export_determinism(self, runner):
        args = ["export", "C:1:12", "--dim", "24"]
        assert runner.invoke(main, args).output == runner.invoke(main, args).output

    def test_r_not_dividing_n_is_usage_error(self, runner):
        result = runner.invoke(main, ["export", "T:4:0:6", "--dim", "12"])
        assert result.exit_code == 2

    def test_dim_smaller_than_level_is_usage_error(self, runner):
        result = runner.invoke(main, ["export", "P:0:8", "--dim", "4"])
        assert result.exit_code == 2

    def test_unknown_spec_is_usage_error(self, runner):
        result = runner.invoke(main, ["export", "Q:1:2", "--dim", "4"])
        assert result.exit_code == 2

    def test_env_var_sets_dim(self, runner):
        result = runner.invoke(
            main, ["export", "S:2"], env={"IDEMARITH_DIM": "6"}
        )
        assert json.loads(result.output)["n"] == 6
