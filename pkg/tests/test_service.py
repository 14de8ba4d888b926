import pytest
from fastapi.testclient import TestClient

from lrhive.serialize import hive_to_json, tableau_to_json
from lrhive.service.app import app

from conftest import REF_H4, REF_K4, REF_S4, REF_T4


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


class TestCoeff:
    def test_golden(self, client):
        resp = client.post(
            "/coeff", json={"lambda": [8, 6, 5, 4], "mu": [6, 5, 2], "nu": [5, 4, 1]}
        )
        assert resp.status_code == 200
        assert resp.json()["coefficient"] == 5

    def test_rational_mode(self, client):
        resp = client.post(
            "/coeff",
            json={
                "lambda": [2, 0, -1, -2],
                "mu": [4, 3, 0, -2],
                "nu": [1, 0, -3, -4],
                "n": 4,
                "mode": "rational",
            },
        )
        assert resp.json()["coefficient"] == 5

    def test_malformed(self, client):
        resp = client.post("/coeff", json={"lambda": [1, 2], "mu": [1], "nu": [1]})
        assert resp.status_code == 422


class TestApply:
    def test_rho_round_trip(self, client):
        resp = client.post(
            "/apply", json={"map": "rho", "object": tableau_to_json(REF_T4), "n": 4}
        )
        assert resp.json()["result"] == tableau_to_json(REF_S4)
        back = client.post(
            "/apply", json={"map": "rho-inv", "object": resp.json()["result"], "n": 4}
        )
        assert back.json()["result"] == tableau_to_json(REF_T4)

    def test_rho_trace(self, client):
        resp = client.post(
            "/apply",
            json={"map": "rho", "object": tableau_to_json(REF_T4), "n": 4, "trace": True},
        )
        trace = resp.json()["trace"]
        assert trace[0]["r"] == 4 and trace[0]["terminating_rows"] == [1, 2, 3, 3]

    def test_sigma_and_trace(self, client):
        resp = client.post(
            "/apply", json={"map": "sigma", "object": hive_to_json(REF_H4), "trace": True}
        )
        body = resp.json()
        assert body["result"] == hive_to_json(REF_K4)
        first_step = body["trace"][0]
        assert [p["op"] for p in first_step] == ["ii", "ii", "ii", "ii"]
        assert [p["terminating_level"] for p in first_step] == [1, 2, 3, 3]

    def test_sigma_inv(self, client):
        resp = client.post("/apply", json={"map": "sigma-inv", "object": hive_to_json(REF_K4)})
        assert resp.json()["result"] == hive_to_json(REF_H4)

    def test_commutor_and_xi(self, client):
        resp = client.post(
            "/apply", json={"map": "commutor", "object": tableau_to_json(REF_T4), "n": 4}
        )
        assert resp.json()["result"] == tableau_to_json(REF_S4)
        y = {"outer": [2, 1], "inner": [], "rows": [[1, 1], [2]]}
        resp = client.post("/apply", json={"map": "xi", "object": y, "n": 2})
        assert resp.json()["result"]["rows"] == [[1, 2], [2]]

    def test_invalid_object(self, client):
        resp = client.post("/apply", json={"map": "rho", "object": {"rows": [[2]]}, "n": 1})
        assert resp.status_code == 422


class TestConvert:
    def test_round_trip(self, client):
        there = client.post(
            "/convert", json={"direction": "tableau-to-hive", "object": tableau_to_json(REF_T4), "n": 4}
        )
        assert there.json()["result"] == hive_to_json(REF_H4)
        back = client.post(
            "/convert", json={"direction": "hive-to-tableau", "object": there.json()["result"]}
        )
        assert back.json()["result"] == tableau_to_json(REF_T4)


class TestUSystem:
    def test_sigma(self, client):
        resp = client.post("/usystem", json={"op": "sigma", "u": "1;1,2;1,2,1"})
        assert resp.json()["u"] == "1;1,3;1,1,2"

    def test_dress(self, client):
        resp = client.post("/usystem", json={"op": "dress", "u": "1"})
        assert resp.json()["hive"]["lambda"] == [1, 1]

    def test_feasible(self, client):
        resp = client.post(
            "/usystem",
            json={"op": "feasible", "u": "1;1,2;1,2,1", "mu": [6, 5, 2, 0], "nu": [5, 4, 1, 0]},
        )
        body = resp.json()
        assert body["feasible"] is True and body["lambda"] == [8, 6, 5, 4]

    def test_feasible_needs_boundaries(self, client):
        resp = client.post("/usystem", json={"op": "feasible", "u": "1"})
        assert resp.status_code == 422


class TestRenderAndVerify:
    def test_render_ascii(self, client):
        resp = client.post("/render", json={"hive": hive_to_json(REF_H4)})
        assert "lambda: (8,6,5,4)" in resp.json()["text"]

    def test_render_rejects_invalid(self, client):
        bad = {"n": 2, "lambda": [2, 1], "mu": [1], "nu": [1], "u": [[0]]}
        resp = client.post("/render", json={"hive": bad})
        assert resp.status_code == 422

    def test_verify_small(self, client):
        resp = client.post(
            "/verify", json={"suite": "involution", "max_weight": 4, "max_n": 2}
        )
        body = resp.json()
        assert body["passed"] is True and body["triples_checked"] > 0

    def test_health(self, client):
        assert client.get("/health").json() == {"status": "ok"}
