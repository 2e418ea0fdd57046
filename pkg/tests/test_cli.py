from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from ergofit.cli import main
from ergofit.model import save_dataset, save_spec, spec_to_json
from ergofit.presets import EXISTING_FIXED, PROPOSED_FIXED, synthetic_dataset


@pytest.fixture(scope="module")
def dataset_csv(tmp_path_factory):
    path = tmp_path_factory.mktemp("data") / "population.csv"
    save_dataset(synthetic_dataset(n_male=40, n_female=20, seed=13), path)
    return str(path)


@pytest.fixture()
def runner():
    return CliRunner()


class TestDescribe:
    def test_csv_has_22_rows(self, runner, dataset_csv):
        result = runner.invoke(main, ["describe", "--dataset", dataset_csv, "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("measure,gender,n,")
        assert len(lines) == 1 + 22

    def test_missing_dataset_exit_2(self, runner, tmp_path):
        result = runner.invoke(main, ["describe", "--dataset", str(tmp_path / "no.csv")])
        assert result.exit_code == 2
        assert "dataset not found" in result.output

    def test_single_gender_file(self, runner, tmp_path):
        path = tmp_path / "males.csv"
        save_dataset(synthetic_dataset(n_male=5, n_female=0, seed=1), path)
        result = runner.invoke(main, ["describe", "--dataset", str(path), "--format", "csv"])
        assert result.exit_code == 0
        assert len(result.output.strip().splitlines()) == 1 + 11

    def test_two_record_mixed_file(self, runner, tmp_path):
        # One record per gender: rows still appear, sd cells stay empty.
        path = tmp_path / "pair.csv"
        save_dataset(synthetic_dataset(n_male=1, n_female=1, seed=2), path)
        result = runner.invoke(main, ["describe", "--dataset", str(path), "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert len(lines) == 1 + 22
        first = lines[1].split(",")
        assert first[2] == "1" and first[6] == ""  # n=1, sd blank

    def test_deterministic(self, runner, dataset_csv):
        args = ["describe", "--dataset", dataset_csv, "--format", "json"]
        first = runner.invoke(main, args)
        second = runner.invoke(main, args)
        assert first.output == second.output

    def test_out_dir(self, runner, dataset_csv, tmp_path):
        out = tmp_path / "reports"
        result = runner.invoke(
            main,
            ["describe", "--dataset", dataset_csv, "--format", "csv", "--out", str(out)],
        )
        assert result.exit_code == 0
        assert (out / "describe.csv").exists()


class TestMismatch:
    def test_preset_spec_report(self, runner, dataset_csv):
        result = runner.invoke(
            main,
            ["mismatch", "--dataset", dataset_csv, "--spec", "existing-fixed", "--format", "csv"],
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert len(lines) == 1 + 22  # 11 criteria x 2 genders

    def test_two_specs_emit_delta(self, runner, dataset_csv):
        result = runner.invoke(
            main,
            [
                "mismatch", "--dataset", dataset_csv,
                "--spec", "existing-fixed", "--spec", "proposed-fixed",
                "--format", "csv",
            ],
        )
        assert result.exit_code == 0
        assert "delta_total_mismatch_pct" in result.output

    def test_spec_file(self, runner, dataset_csv, tmp_path):
        path = tmp_path / "spec.json"
        save_spec(EXISTING_FIXED, path)
        result = runner.invoke(
            main, ["mismatch", "--dataset", dataset_csv, "--spec", str(path)]
        )
        assert result.exit_code == 0

    def test_spec_missing_dimension(self, runner, dataset_csv, tmp_path):
        obj = spec_to_json(EXISTING_FIXED)
        del obj["UTH"]
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(obj), encoding="utf-8")
        result = runner.invoke(
            main, ["mismatch", "--dataset", dataset_csv, "--spec", str(path)]
        )
        assert result.exit_code == 2
        assert "missing dimension UTH" in result.output


class TestAnova:
    def test_preset_rows(self, runner):
        result = runner.invoke(main, ["anova", "--preset", "existing-fixed", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert len(lines) == 1 + 18
        first = lines[1].split(",")
        assert first[0] == "SH vs PH" and first[1] == "Male"
        assert float(first[2]) == pytest.approx(0.71, abs=0.01)
        assert float(first[5]) == pytest.approx(0.447, abs=0.005)
        assert first[6] == "Accept"

    def test_groups_file(self, runner, tmp_path):
        payload = {
            "rows": [
                {
                    "label": "identical",
                    "gender": "M",
                    "groups": [[1, 2, 3], [1, 2, 3]],
                }
            ]
        }
        path = tmp_path / "groups.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        result = runner.invoke(main, ["anova", "--groups", str(path), "--format", "csv"])
        assert result.exit_code == 0
        row = result.output.strip().splitlines()[1].split(",")
        assert float(row[2]) == 0.0
        assert row[6] == "Accept"

    def test_degenerate_groups_exit_1(self, runner, tmp_path):
        payload = {
            "rows": [{"label": "flat", "gender": "M", "groups": [[1, 1], [2, 2]]}]
        }
        path = tmp_path / "groups.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        result = runner.invoke(main, ["anova", "--groups", str(path)])
        assert result.exit_code == 1

    def test_requires_groups_or_preset(self, runner):
        result = runner.invoke(main, ["anova"])
        assert result.exit_code == 2


class TestPropose:
    def test_default_ruleset_matches_bundled_proposal(self, runner, dataset_csv):
        result = runner.invoke(
            main, ["propose", "--dataset", dataset_csv, "--name", "proposed-fixed"]
        )
        assert result.exit_code == 0
        assert json.loads(result.output) == spec_to_json(PROPOSED_FIXED)

    def test_rules_file(self, runner, dataset_csv, tmp_path):
        ruleset = {
            "base": "existing-fixed",
            "rules": [
                {"dimension": "SH", "constant": 430},
                {
                    "dimension": "SW",
                    "anchor": {"measure": "HB", "gender": "F", "percentile": 0.95},
                },
            ],
        }
        path = tmp_path / "rules.json"
        path.write_text(json.dumps(ruleset), encoding="utf-8")
        result = runner.invoke(
            main, ["propose", "--dataset", dataset_csv, "--rules", str(path)]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["SH"] == 430
        assert payload["TD"] == 749.3  # carried from the base preset


class TestOptimize:
    def test_runs_from_config(self, runner, dataset_csv, tmp_path):
        config = {
            "base": "existing-fixed",
            "grids": {"SW": {"lo": 380, "hi": 440, "step": 20}},
        }
        path = tmp_path / "opt.json"
        path.write_text(json.dumps(config), encoding="utf-8")
        result = runner.invoke(
            main, ["optimize", "--dataset", dataset_csv, "--config", str(path)]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert "objective" in payload
        assert payload["spec"]["SW"] in (380, 400, 420, 440)


class TestGuidelines:
    def test_constants(self, runner):
        result = runner.invoke(main, ["guidelines", "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["keyboard_zone_depth_mm"] == 394.0
        assert payload["keyboard_zone_length_mm"] == 1194.0
        assert payload["monitor_distance_mm"] == [500.0, 1000.0]
        assert payload["viewing_angle_deg"] == [15.0, 20.0]


class TestHistogram:
    def test_counts_sum_to_gender_size(self, runner, dataset_csv):
        result = runner.invoke(
            main,
            [
                "histogram", "--dataset", dataset_csv,
                "--bins", "20", "--measure", "PH", "--gender", "M", "--format", "csv",
            ],
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()[1:]
        assert len(lines) == 20
        assert sum(int(line.split(",")[-1]) for line in lines) == 40


class TestCorrelation:
    def test_matrix_shape(self, runner, dataset_csv):
        result = runner.invoke(
            main, ["correlation", "--dataset", dataset_csv, "--format", "csv"]
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert len(lines) == 1 + 11
