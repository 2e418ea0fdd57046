from __future__ import annotations

import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from ergofit import render
from ergofit.cli import main
from ergofit.fit import population_mismatch
from ergofit.model import FitConfig, save_dataset, spec_to_json
from ergofit.presets import EXISTING_ADJUSTABLE, synthetic_dataset
from ergofit.service import create_app

CFG = FitConfig()


@pytest.fixture(scope="module")
def dataset():
    return synthetic_dataset(n_male=40, n_female=20, seed=13)


@pytest.fixture(scope="module")
def client(dataset):
    return TestClient(create_app(dataset, CFG))


class TestHealth:
    def test_ok(self, client, dataset):
        response = client.get("/health")
        assert response.status_code == 200
        payload = response.json()
        assert payload["status"] == "ok"
        assert payload["records"] == len(dataset)


class TestStats:
    def test_json_rows(self, client, dataset):
        response = client.get("/api/stats")
        assert response.status_code == 200
        payload = response.json()
        assert len(payload["measures"]) == 22
        male_ph = next(
            row for row in payload["measures"]
            if row["measure"] == "PH" and row["gender"] == "Male"
        )
        assert male_ph["n"] == 40
        assert male_ph["min"] <= male_ph["mean"] <= male_ph["max"]

    def test_csv_negotiation_matches_renderer(self, client, dataset):
        response = client.get("/api/stats", headers={"accept": "text/csv"})
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/csv")
        assert response.text == render.describe_csv(render.describe_rows(dataset, CFG))


class TestCorrelation:
    def test_matrix(self, client):
        response = client.get("/api/correlation")
        payload = response.json()
        assert len(payload["labels"]) == 11
        for i in range(11):
            assert payload["values"][i][i] == 1.0


class TestMismatch:
    def test_json_report(self, client):
        response = client.post("/api/mismatch", json=spec_to_json(EXISTING_ADJUSTABLE))
        assert response.status_code == 200
        payload = response.json()
        assert len(payload["rows"]) == 22
        assert payload["spec"] == "existing-adjustable"

    def test_csv_is_byte_identical_to_cli(self, client, dataset, tmp_path):
        csv_path = tmp_path / "pop.csv"
        save_dataset(dataset, csv_path)
        cli = CliRunner().invoke(
            main,
            [
                "mismatch", "--dataset", str(csv_path),
                "--spec", "existing-adjustable", "--format", "csv",
            ],
        )
        assert cli.exit_code == 0
        response = client.post(
            "/api/mismatch",
            json=spec_to_json(EXISTING_ADJUSTABLE),
            headers={"accept": "text/csv"},
        )
        assert response.text == cli.output

    def test_negative_dimension_400(self, client):
        body = spec_to_json(EXISTING_ADJUSTABLE)
        body["SW"] = -1
        response = client.post("/api/mismatch", json=body)
        assert response.status_code == 400
        assert response.json()["error"] == "SW must be > 0"

    def test_missing_dimension_400(self, client):
        body = spec_to_json(EXISTING_ADJUSTABLE)
        del body["UTH"]
        response = client.post("/api/mismatch", json=body)
        assert response.status_code == 400
        assert "missing dimension UTH" in response.json()["error"]

    def test_malformed_body_400(self, client):
        response = client.post(
            "/api/mismatch",
            content=b"{not json",
            headers={"content-type": "application/json"},
        )
        assert response.status_code == 400
        assert "not valid JSON" in response.json()["error"]

    def test_deterministic(self, client):
        body = spec_to_json(EXISTING_ADJUSTABLE)
        first = client.post("/api/mismatch", json=body)
        second = client.post("/api/mismatch", json=body)
        assert first.content == second.content

    def test_matches_direct_evaluation(self, client, dataset):
        response = client.post("/api/mismatch", json=spec_to_json(EXISTING_ADJUSTABLE))
        report = population_mismatch(dataset, EXISTING_ADJUSTABLE, CFG)
        assert response.json() == json.loads(
            json.dumps(render.mismatch_json(report))
        )


class TestPropose:
    def test_ruleset_body(self, client):
        body = {
            "base": "existing-fixed",
            "name": "what-if",
            "rules": [
                {"dimension": "SH", "constant": 430},
                {"dimension": "SH2", "constant": 1},
            ],
        }
        body["rules"].pop()  # keep a single valid rule
        response = client.post("/api/propose", json=body)
        assert response.status_code == 200
        payload = response.json()
        assert payload["name"] == "what-if"
        assert payload["SH"] == 430
        assert payload["TL"] == 482.6

    def test_bad_rule_400(self, client):
        response = client.post(
            "/api/propose", json={"rules": [{"dimension": "SH"}]}
        )
        assert response.status_code == 400


class TestGuidelines:
    def test_constants(self, client):
        payload = client.get("/api/guidelines").json()
        assert payload["keyboard_zone_depth_mm"] == 394.0
        assert payload["monitor_distance_mm"] == [500.0, 1000.0]


def test_unknown_route_404(client):
    assert client.get("/api/nonsense").status_code == 404
