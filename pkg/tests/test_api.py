# tests/test_api.py
from fastapi.testclient import TestClient

from folpol.api.main import app

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["data"]["service"] == "folpol"


def test_catalog_filter():
    response = client.get("/catalog", params={"kind": "foliation"})
    body = response.json()
    assert response.status_code == 200
    assert body["meta"]["count"] == len(body["data"])
    assert {entry["kind"] for entry in body["data"]} == {"foliation"}


def test_commands():
    assert "brunella" in client.get("/commands").json()["data"]


def test_run_gsv():
    response = client.post("/run/gsv", json={"form": "x dy - y dx", "curves": ["x", "y"]})
    assert response.status_code == 200
    body = response.json()
    assert body["schema"] == "folpol/1"
    assert body["data"]["gsv"] == 0


def test_run_pencil_degree():
    response = client.post("/run/linsneto", json={"alpha": "3", "lines": [3]})
    data = response.json()["data"]
    assert data["pencil"]["d0"] == 21
    assert data["radial"][0]["closed_form"] == 3


def test_parse_error_is_400():
    response = client.post("/run/reduce", json={"form": "x dy + + y"})
    assert response.status_code == 400
    error = response.json()["error"]
    assert error["code"] == "PARSE_ERROR"


def test_unknown_command_is_400():
    response = client.post("/run/frobnicate", json={"form": "x dy"})
    assert response.status_code == 400
    assert response.json()["command"] == "frobnicate"


def test_mathematical_error_is_422():
    response = client.post("/run/linsneto", json={"alpha": "1"})
    assert response.status_code == 422
    assert response.json()["error"]["code"] == "EXCLUDED_PARAMETER"


def test_unknown_option_is_rejected():
    response = client.post("/run/reduce", json={"form": "x dy - y dx", "options": {"colour": "red"}})
    assert response.status_code == 422
