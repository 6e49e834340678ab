"""
コマンドライン E2E テスト

実際の利用手順（ノルムの計算、検証スイートの実行、反例の再現、不一致レポート）を
CliRunner で実行し、出力と終了コードを確認します。
"""

import json
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.cli import main

TRIANGLE = '{"universe":3,"sets":[[0,1],[1,2],[0,2]]}'


@pytest.fixture
def runner():
    return CliRunner()


class TestNormCommands:
    """ノルム計算のシナリオ"""

    def test_norm0(self, runner):
        result = runner.invoke(main, ["norm0", "--family", "-"], input=TRIANGLE)
        assert result.exit_code == 0
        assert result.stdout == '{"norm":3}\n'

    def test_norm1_is_exact_ratio(self, runner):
        result = runner.invoke(main, ["norm1", "--F", "2", "--G", "4", "--set", "[0, 1]"])
        assert result.exit_code == 0
        assert json.loads(result.stdout) == {"norm": "2/3"}

    def test_norm2_with_witness(self, runner):
        result = runner.invoke(
            main, ["norm2", "--n", "1", "--G", "4", "--family", "-", "--witness"],
            input='{"universe":4,"sets":[[0,1],[2,3]]}',
        )
        assert result.exit_code == 0
        assert json.loads(result.stdout) == {"norm": 2, "witness": [0, 2]}

    def test_norm2_emits_witness_by_default(self, runner):
        result = runner.invoke(
            main, ["norm2", "--n", "1", "--G", "4", "--family", "-"],
            input='{"universe":4,"sets":[[0,1],[2,3]]}',
        )
        assert result.exit_code == 0
        assert json.loads(result.stdout) == {"norm": 2, "witness": [0, 2]}
        bare = runner.invoke(
            main, ["norm2", "--n", "1", "--G", "4", "--family", "-", "--no-witness"],
            input='{"universe":4,"sets":[[0,1],[2,3]]}',
        )
        assert json.loads(bare.stdout) == {"norm": 2}

    def test_universe_zero_is_input_error(self, runner):
        result = runner.invoke(main, ["norm0", "--family", "-"], input='{"universe":0,"sets":[]}')
        assert result.exit_code == 2

    def test_norm3_triangle(self, runner):
        """三角形は 3 部分に分かれ ‖·‖₃ = 2"""
        result = runner.invoke(main, ["norm3", "--family", "-", "--witness", "--oracle-check"], input=TRIANGLE)
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["norm"] == 2
        assert payload["partition"] == [[0], [1], [2]]
        assert payload["oracle_agrees"] is True

        result = runner.invoke(main, ["norm3", "--family", "-", "--witness"], input=TRIANGLE)
        assert result.stdout == '{"norm":2,"partition":[[0],[1],[2]]}\n'
        print("✅ norm3 三角形シナリオ成功")

    def test_norm4_with_witness(self, runner):
        result = runner.invoke(
            main, ["norm4", "--functions", "-", "--witness"],
            input='{"N":2,"functions":["10","01","11"]}',
        )
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["norm"] == 3
        assert payload["witness"]["k"] == 2

    def test_csv_output(self, runner):
        result = runner.invoke(main, ["--format", "csv", "norm0", "--family", "-"], input=TRIANGLE)
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["norm", "3"]


class TestHallCommands:
    """hall サブコマンド"""

    def test_hn_and_HN(self, runner):
        pfns = '{"N":4,"pfns":[{"0":0,"1":0},{"2":0,"3":0}]}'
        result = runner.invoke(main, ["hall", "hn", "--pfns", "-"], input=pfns)
        assert json.loads(result.stdout) == {"hn": 3}
        result = runner.invoke(main, ["hall", "HN", "--pfns", "-"], input=pfns)
        assert json.loads(result.stdout) == {"HN": 3}

    def test_delta_and_D(self, runner):
        result = runner.invoke(main, ["hall", "delta", "--functions", "-"], input='{"N":2,"functions":["00"]}')
        assert result.exit_code == 0
        assert result.stdout == '{"N":2,"pfns":[{"0":1},{"1":1}]}\n'

        result = runner.invoke(main, ["hall", "D", "--pfns", "-"], input='{"N":2,"pfns":[{"0":0}]}')
        assert result.stdout == '{"N":2,"functions":["10","11"]}\n'


class TestVerification:
    """検証スイートと終了コード"""

    def test_verify_passes(self, runner):
        result = runner.invoke(main, ["--seed", "3", "verify", "--suite", "setcore.restrict_laws", "--cases", "20"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["suite"] == "setcore.restrict_laws"
        assert payload["cases"] == 20
        assert payload["violations"] == []

    def test_verify_multiple_suites_csv(self, runner):
        result = runner.invoke(main, [
            "--format", "csv", "verify",
            "--suite", "comb.pascal", "--suite", "exclusion.union_bound",
            "--G", "4", "--param", "max_c=8",
        ])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0].startswith("suite,seed,cases")
        assert len(lines) == 3

    def test_verify_theorem_suite_by_name(self, runner):
        """定理名の別名でも L/R 分割の最小値スイートが通る"""
        result = runner.invoke(main, [
            "verify", "--suite", "hall.thm6.30", "--N", "6", "--seed", "1", "--cases", "1000",
        ])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["suite"] == "hall.lr_min"
        assert payload["seed"] == 1
        assert payload["cases"] == 1000
        assert payload["violations"] == []

    def test_verify_options_override_group(self, runner):
        args = ["verify", "--suite", "setcore.restrict_laws", "--cases", "20"]
        result = runner.invoke(main, ["--seed", "9", *args, "--seed", "3"])
        assert json.loads(result.stdout)["seed"] == 3
        result = runner.invoke(main, ["--budget", "100", *args, "--budget", "5"])
        assert result.exit_code == 3
        assert json.loads(result.stdout)["cases"] == 5

    def test_jobs_do_not_change_output(self, runner):
        args = ["verify", "--suite", "hall.roundtrip", "--N", "2"]
        single = runner.invoke(main, ["--jobs", "1", *args])
        parallel = runner.invoke(main, ["--jobs", "2", *args])
        assert single.exit_code == parallel.exit_code == 0
        assert single.stdout == parallel.stdout

    def test_unknown_suite_is_usage_error(self, runner):
        result = runner.invoke(main, ["verify", "--suite", "hall.nonexistent"])
        assert result.exit_code == 2

    def test_malformed_json_is_usage_error(self, runner):
        result = runner.invoke(main, ["norm0", "--family", "-"], input='{"universe":3,"sets":[[0,1]')
        assert result.exit_code == 2
        result = runner.invoke(main, ["norm0", "--family", "-"], input='{"universe":4,"sets":[[0,4]]}')
        assert result.exit_code == 2
        assert "element 4 ≥ universe" in result.output

    def test_domain_error_is_usage_error(self, runner):
        result = runner.invoke(main, ["norm1", "--F", "4", "--G", "4", "--set", "[]"])
        assert result.exit_code == 2

    def test_budget_truncation_exit_code(self, runner):
        """予算で打ち切られると終了コード 3"""
        result = runner.invoke(main, ["--budget", "5", "verify", "--suite", "setcore.restrict_laws", "--cases", "20"])
        assert result.exit_code == 3
        payload = json.loads(result.stdout)
        assert payload["wall_budget_exceeded"] is True
        assert payload["cases"] == 5

    def test_search_budget_exit_code(self, runner):
        family = json.dumps({"universe": 17, "sets": [[0, 16]]})
        result = runner.invoke(main, ["norm3", "--family", "-"], input=family)
        assert result.exit_code == 3

    def test_bad_budget_environment(self):
        result = CliRunner(env={"NORMFORGE_BUDGET": "many"}).invoke(main, ["suites"])
        assert result.exit_code == 2

    def test_environment_budget(self):
        result = CliRunner(env={"NORMFORGE_BUDGET": "4"}).invoke(
            main, ["verify", "--suite", "setcore.restrict_laws", "--cases", "20"]
        )
        assert result.exit_code == 3


class TestCounterexamples:
    """既知の反例・不一致の再現"""

    def test_refute_baju(self, runner):
        result = runner.invoke(main, ["refute-baju", "--n", "1", "--G", "8", "--k", "2"])
        assert result.exit_code == 1
        values = json.loads(result.stdout)["values"]
        assert values["ratio"] == "11/14"
        assert values["product"] == "3/14"
        assert values["refuted"] is True

    def test_pstar_scan(self, runner):
        result = runner.invoke(main, ["bridge", "pstar-scan", "--N", "2", "--budget", "16"])
        assert result.exit_code == 1
        payload = json.loads(result.stdout)
        assert payload["values"]["counterexample"]["n"] == 1
        assert payload["wall_budget_exceeded"] is False

    def test_kgon_discrepancy_is_not_failure(self, runner):
        result = runner.invoke(main, ["kgon", "--N", "4", "--k", "2"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["values"]["exact"] == 4
        assert payload["discrepancies"][0]["id"] == "kgon_formula"

    def test_bridge_subset(self, runner):
        result = runner.invoke(
            main, ["bridge", "subset", "--n", "1", "--N", "4", "--family", "-"],
            input='{"universe":4,"sets":[[0,1],[2,3]]}',
        )
        assert result.exit_code == 0
        assert json.loads(result.stdout)["values"]["norm2"] == 2


class TestReports:
    """一覧と不一致レポート"""

    def test_report_lists_catalog(self, runner):
        result = runner.invoke(main, ["report"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert len(payload["discrepancies"]) == 5
        assert payload["values"] == {"entries": 5}

    def test_report_csv(self, runner):
        result = runner.invoke(main, ["--format", "csv", "report"])
        lines = result.stdout.splitlines()
        assert lines[0] == "id,suite,occurrences,replay"
        assert len(lines) == 6

    def test_suites(self, runner):
        invariant_only = json.loads(runner.invoke(main, ["suites"]).stdout)
        everything = json.loads(runner.invoke(main, ["suites", "--all"]).stdout)
        assert len(invariant_only) == 50
        assert len(everything) == 54
        assert all(not row["supplementary"] for row in invariant_only)

    def test_scan_hall_size(self, runner):
        result = runner.invoke(main, ["scan", "hall-size", "--max-N", "2"])
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert [(row["N"], row["k"]) for row in rows] == [(1, 1), (2, 1), (2, 2)]
        assert all(row["min_size"] >= 1 for row in rows)

    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert "0.3.0" in result.output
