import xml.etree.ElementTree as ET

import pytest
from fastapi.testclient import TestClient

from mappamundi.server import create_app


@pytest.fixture()
def client(engine):
    return TestClient(create_app(engine))


def create(client):
    resp = client.post("/sessions")
    assert resp.status_code == 200
    body = resp.json()
    assert isinstance(body["id"], str) and body["id"]
    return body["id"]


def test_create_session(client):
    assert create(client) != create(client)


def test_utterance_shape(client):
    sid = create(client)
    resp = client.post(f"/sessions/{sid}/utterance",
                       json={"text": "Beijing Bids for 2022 Winter Olympics"})
    assert resp.status_code == 200
    body = resp.json()
    assert set(body) == {"new_nodes", "scene"}
    assert isinstance(body["new_nodes"], list) and body["new_nodes"]
    scene = body["scene"]
    assert set(scene) == {"nodes", "edges", "viewport"}
    for node in scene["nodes"]:
        assert set(node) == {"id", "word", "category", "x", "y", "glyph", "depth"}
    for edge in scene["edges"]:
        assert set(edge) == {"from", "to", "relation", "similarity", "target_len"}
    assert set(scene["viewport"]) == {"x", "y", "w", "h"}


def test_empty_utterance_is_noop(client):
    sid = create(client)
    resp = client.post(f"/sessions/{sid}/utterance", json={"text": "   "})
    assert resp.status_code == 200
    assert resp.json()["new_nodes"] == []


def test_expand_shape(client):
    sid = create(client)
    body = client.post(f"/sessions/{sid}/utterance", json={"text": "winter"}).json()
    leaf = [n for n in body["scene"]["nodes"] if n["depth"] == 1][0]
    resp = client.post(f"/sessions/{sid}/expand", json={"node_id": leaf["id"]})
    assert resp.status_code == 200
    out = resp.json()
    assert set(out) == {"new_nodes", "scene"}
    assert all(isinstance(i, int) for i in out["new_nodes"])


def test_expand_count(client):
    sid = create(client)
    body = client.post(f"/sessions/{sid}/utterance", json={"text": "winter"}).json()
    root = [n for n in body["scene"]["nodes"] if n["depth"] == 0][0]
    # root already has its children; count bounds any further additions
    resp = client.post(f"/sessions/{sid}/expand",
                       json={"node_id": root["id"], "count": 1})
    assert resp.status_code == 200
    assert len(resp.json()["new_nodes"]) <= 1


def test_patch_config_shape(client):
    sid = create(client)
    resp = client.patch(f"/sessions/{sid}/config",
                        json={"quotas": {"SEMANTIC": 5}, "tau_high": 0.4})
    assert resp.status_code == 200
    body = resp.json()
    assert body["quotas"]["SEMANTIC"] == 5
    assert body["quotas"]["KG"] == 3
    assert body["tau_high"] == 0.4
    assert set(body) == {"quotas", "tau_low", "tau_high", "seed", "keyword_limit"}


def test_patch_config_invalid(client):
    sid = create(client)
    resp = client.patch(f"/sessions/{sid}/config", json={"tau_high": 0.1, "tau_low": 0.5})
    assert resp.status_code == 400
    body = resp.json()
    assert set(body) == {"error", "detail"}


def test_get_scene(client):
    sid = create(client)
    client.post(f"/sessions/{sid}/utterance", json={"text": "sea journey"})
    resp = client.get(f"/sessions/{sid}/scene")
    assert resp.status_code == 200
    assert resp.json()["nodes"]


def test_get_scene_svg(client):
    sid = create(client)
    client.post(f"/sessions/{sid}/utterance", json={"text": "sea journey"})
    resp = client.get(f"/sessions/{sid}/scene.svg")
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("image/svg+xml")
    root = ET.fromstring(resp.text)
    assert root.tag.endswith("svg")


def test_unknown_session_error_shape(client):
    for method, path, kwargs in [
        ("get", "/sessions/nope/scene", {}),
        ("get", "/sessions/nope/scene.svg", {}),
        ("post", "/sessions/nope/utterance", {"json": {"text": "x"}}),
        ("post", "/sessions/nope/expand", {"json": {"node_id": 0}}),
        ("patch", "/sessions/nope/config", {"json": {}}),
    ]:
        resp = getattr(client, method)(path, **kwargs)
        assert resp.status_code == 404
        body = resp.json()
        assert body["error"] == "not_found"
        assert isinstance(body["detail"], str)


def test_unknown_node_error_shape(client):
    sid = create(client)
    resp = client.post(f"/sessions/{sid}/expand", json={"node_id": 4242})
    assert resp.status_code == 404
    body = resp.json()
    assert set(body) == {"error", "detail"}


def test_scene_matches_engine_state(client, engine):
    sid = create(client)
    client.post(f"/sessions/{sid}/utterance", json={"text": "winter"})
    via_http = client.get(f"/sessions/{sid}/scene").json()
    assert via_http == engine.get_session(sid).scene()
