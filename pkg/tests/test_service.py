import json

import pytest
from fastapi.testclient import TestClient

from domguard.graph import Graph, split_partition
from domguard.service import create_app


@pytest.fixture
def client():
    return TestClient(create_app())


def graph_obj(g):
    return json.loads(g.to_json())


P5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


class TestSessionLifecycle:
    def test_create_attack_delete(self, client):
        r = client.post("/api/session",
                        json={"graph": graph_obj(P5), "k": 3})
        assert r.status_code == 201
        body = r.json()
        sid = body["id"]
        assert body["k"] == 3 and len(body["config"]) == 3

        for target in (0, 4, 2, 1, 3):
            r = client.post(f"/api/session/{sid}/attack",
                            json={"vertex": target})
            assert r.status_code == 200
            assert target in r.json()["config"]

        r = client.get(f"/api/session/{sid}")
        assert r.status_code == 200
        assert len(r.json()["history"]) == 5

        assert client.delete(f"/api/session/{sid}").status_code == 200
        assert client.get(f"/api/session/{sid}").status_code == 404

    def test_infeasible_k_conflict(self, client):
        r = client.post("/api/session",
                        json={"graph": graph_obj(P5), "k": 2})
        assert r.status_code == 409

    def test_bad_inputs(self, client):
        assert client.post("/api/session", json={"graph": {"n": 2, "edges": [[0, 9]]},
                                                 "k": 1}).status_code == 400
        assert client.post("/api/session", json={"graph": graph_obj(P5),
                                                 "k": 0}).status_code == 400
        assert client.post("/api/session", json={"graph": graph_obj(P5), "k": 3,
                                                 "mode": "psychic"}).status_code == 400

    def test_attack_validation(self, client):
        sid = client.post("/api/session",
                          json={"graph": graph_obj(P5), "k": 3}).json()["id"]
        assert client.post(f"/api/session/{sid}/attack",
                           json={"vertex": "x"}).status_code == 400
        assert client.post(f"/api/session/{sid}/attack",
                           json={"vertex": 99}).status_code == 400
        assert client.post("/api/session/12345/attack",
                           json={"vertex": 0}).status_code == 404


class TestStrategyMode:
    def test_full_flow(self, client, rng):
        from domguard.families import random_2split
        from domguard.strategy import strategy_k14_2split

        g = random_2split(8, rng, require_claw=True)
        p = split_partition(g)
        s = strategy_k14_2split(g, p)
        r = client.post("/api/session",
                        json={"graph": graph_obj(g), "mode": "strategy",
                              "strategy": s.to_json()})
        assert r.status_code == 201
        sid = r.json()["id"]
        for _ in range(30):
            target = rng.randrange(g.n)
            r = client.post(f"/api/session/{sid}/attack",
                            json={"vertex": target})
            assert r.status_code == 200
            assert target in r.json()["config"]

    def test_missing_strategy(self, client):
        r = client.post("/api/session",
                        json={"graph": graph_obj(P5), "mode": "strategy"})
        assert r.status_code == 400


class TestAnalyze:
    def test_analyze(self, client):
        r = client.post("/api/analyze",
                        json={"graph": graph_obj(P5),
                              "params": ["gamma", "medn", "edn"]})
        assert r.status_code == 200
        vals = r.json()["values"]
        assert vals == {"gamma": 2, "medn": 3, "edn": 3}

    def test_analyze_rejects_bad_params(self, client):
        r = client.post("/api/analyze",
                        json={"graph": graph_obj(P5), "params": ["zeta"]})
        assert r.status_code == 400


class TestConcurrencyBasics:
    def test_sessions_are_independent(self, client):
        a = client.post("/api/session",
                        json={"graph": graph_obj(P5), "k": 3}).json()["id"]
        b = client.post("/api/session",
                        json={"graph": graph_obj(P5), "k": 4}).json()["id"]
        assert a != b
        client.post(f"/api/session/{a}/attack", json={"vertex": 0})
        hist_b = client.get(f"/api/session/{b}").json()["history"]
        assert hist_b == []
