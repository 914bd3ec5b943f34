import io
import json
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from polarspec import __version__, save_table
from polarspec.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


@pytest.fixture(scope="module")
def spectrum32_text(table32):
    buf = io.StringIO()
    save_table(table32, buf)
    return buf.getvalue()


def _sequence(client, **payload):
    resp = client.post("/construct", json=payload)
    assert resp.status_code == 200
    return resp.json()["sequence_text"]


class TestHealth:
    def test_ok(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok", "version": __version__}


class TestSpectrumEndpoint:
    def test_emits_all_lengths(self, client):
        resp = client.post("/spectrum", json={"n": 3, "oracle_check": True})
        assert resp.status_code == 200
        files = resp.json()["files"]
        assert [f["filename"] for f in files] == [
            "polar_spectrum_N2.txt",
            "polar_spectrum_N4.txt",
            "polar_spectrum_N8.txt",
        ]
        assert files[0]["content"] == "polar-spectrum v1 N=2\n1 1 2\n2 2 1\nend 2\n"

    def test_known_line_n32(self, client):
        resp = client.post("/spectrum", json={"n": 5})
        content = resp.json()["files"][-1]["content"]
        assert "\n1 3 4960\n" in content

    def test_validation(self, client):
        assert client.post("/spectrum", json={"n": 0}).status_code == 422
        assert client.post("/spectrum", json={"n": 99}).status_code == 422


class TestConstructEndpoint:
    def test_bhattacharyya_bec(self, client):
        text = _sequence(client, n=1, metric="BHATTACHARYYA", channel="BEC", param=0.5)
        assert text == "polar-seq v1 N=2 metric=BHATTACHARYYA param=0.5\n2\n1\n"

    def test_pw_no_params(self, client):
        text = _sequence(client, n=2, metric="PW")
        assert text.splitlines()[0] == "polar-seq v1 N=4 metric=PW param=none"

    def test_ubw_needs_spectrum(self, client):
        resp = client.post("/construct", json={"n": 5, "metric": "UBW", "alpha_db": 4.0})
        assert resp.status_code == 400
        assert "spectrum" in resp.json()["detail"]

    def test_ubw_with_spectrum(self, client, spectrum32_text):
        text = _sequence(client, n=5, metric="UBW", alpha_db=4.0,
                         spectrum_text=spectrum32_text)
        order = [int(x) for x in text.splitlines()[1:]]
        assert order[:6] == [32, 31, 30, 28, 24, 16]

    def test_spectrum_length_mismatch(self, client, spectrum32_text):
        resp = client.post("/construct", json={
            "n": 4, "metric": "UBW", "alpha_db": 4.0, "spectrum_text": spectrum32_text,
        })
        assert resp.status_code == 400

    def test_unknown_metric(self, client):
        resp = client.post("/construct", json={"n": 2, "metric": "XYZ"})
        assert resp.status_code == 400

    def test_ga_requires_awgn_design(self, client):
        resp = client.post("/construct", json={
            "n": 2, "metric": "GA", "channel": "BEC", "param": 0.5,
        })
        assert resp.status_code == 400


class TestBoundsEndpoint:
    def test_n2_bec_union(self, client):
        seq = _sequence(client, n=1, metric="BHATTACHARYYA", channel="BEC", param=0.5)
        spectrum = client.post("/spectrum", json={"n": 1}).json()["files"][0]["content"]
        resp = client.post("/bounds", json={
            "n": 1, "k": 1, "kind": "union", "channel": "BEC",
            "sweep": [0.5], "sequence_text": seq, "spectrum_text": spectrum,
        })
        assert resp.status_code == 200
        points = resp.json()["points"]
        assert points == [{"point": 0.5, "value": 0.25}]

    def test_ub_equals_union_on_bec(self, client, spectrum32_text):
        seq = _sequence(client, n=5, metric="UBW", alpha_db=4.0,
                        spectrum_text=spectrum32_text)
        payload = {
            "n": 5, "k": 16, "channel": "BEC", "sweep": [0.1, 0.3],
            "sequence_text": seq, "spectrum_text": spectrum32_text,
        }
        union = client.post("/bounds", json=dict(payload, kind="union")).json()
        ub = client.post("/bounds", json=dict(payload, kind="ub")).json()
        for a, b in zip(union["points"], ub["points"]):
            assert a["value"] == pytest.approx(b["value"], rel=1e-12)

    def test_arikan_without_spectrum(self, client):
        seq = _sequence(client, n=1, metric="BHATTACHARYYA", channel="BEC", param=0.5)
        resp = client.post("/bounds", json={
            "n": 1, "k": 1, "kind": "arikan", "channel": "BEC",
            "sweep": [0.5], "sequence_text": seq,
        })
        assert resp.status_code == 200
        assert resp.json()["points"][0]["value"] == pytest.approx(0.25)

    def test_empty_sweep_rejected(self, client):
        seq = _sequence(client, n=1, metric="PW")
        resp = client.post("/bounds", json={
            "n": 1, "k": 1, "kind": "arikan", "channel": "BEC",
            "sweep": [], "sequence_text": seq,
        })
        assert resp.status_code == 400

    def test_sequence_length_mismatch(self, client):
        seq = _sequence(client, n=1, metric="PW")
        resp = client.post("/bounds", json={
            "n": 2, "k": 1, "kind": "arikan", "channel": "BEC",
            "sweep": [0.5], "sequence_text": seq,
        })
        assert resp.status_code == 400


class TestSimulateEndpoint:
    def test_round_trip_deterministic(self, client):
        config = json.dumps({
            "n": 3, "K": 4, "metric": "PW", "channel": "AWGN",
            "sweep": [2.0], "trials": 500, "seed": 3,
        })
        a = client.post("/simulate", json={"config_json": config})
        b = client.post("/simulate", json={"config_json": config})
        assert a.status_code == 200
        assert a.json()["results_text"] == b.json()["results_text"]
        row = json.loads(a.json()["results_text"].splitlines()[0])
        assert row["param_db"] == 2.0

    def test_missing_dependency(self, client):
        config = json.dumps({
            "n": 3, "K": 4, "metric": "UBW", "channel": "AWGN",
            "sweep": [2.0], "trials": 100, "seed": 3,
        })
        resp = client.post("/simulate", json={"config_json": config})
        assert resp.status_code == 400

    def test_bad_config(self, client):
        resp = client.post("/simulate", json={"config_json": "{}"})
        assert resp.status_code == 400


class TestVerifyEndpoint:
    def test_passes(self, client):
        resp = client.post("/verify", json={"n": 4})
        assert resp.status_code == 200
        data = resp.json()
        assert data["ok"] is True
        names = [c["name"] for c in data["checks"]]
        assert "duality" in names and "oracle" in names
