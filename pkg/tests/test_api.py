import pytest
from fastapi.testclient import TestClient

from core.config import settings
from main import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health_and_info(client):
    health = client.get("/health").json()
    assert health["status"] == "healthy"
    info = client.get("/api/v1/info").json()
    assert "rho" in info["maps"]
    assert "table1" in info["suites"]
    assert "drs" in info["sequences"]


def test_apply_map(client):
    response = client.post("/api/v1/maps/varrho", json={"input": "3,2,1,3"})
    assert response.status_code == 200
    assert response.json()["output"] == "3 1 2 5 4 6 9 7 8"


def test_map_errors(client):
    response = client.post("/api/v1/maps/rho-inv", json={"input": "3 1 2"})
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "DomainError"
    assert client.post("/api/v1/maps/unknown", json={"input": "1"}).status_code == 404
    assert client.post("/api/v1/maps/rho", json={"input": "a,b"}).status_code == 400


def test_check(client):
    body = client.post("/api/v1/check/double-simsun", json={"input": "3 5 1 4 2"}).json()
    assert body["value"] is True
    body = client.post("/api/v1/check/simsun", json={"input": "2 4 3 5 1"}).json()
    assert body["value"] is False
    assert body["detail"] == {"k": 4, "triple": [4, 3, 1]}
    body = client.post("/api/v1/check/every-4132-in-51342", json={"input": "4 1 3 2"}).json()
    assert body["detail"] == {"occurrence": [1, 2, 3, 4]}


def test_enumerate(client):
    body = client.get("/api/v1/enumerate", params={"n": 6, "cls": "double-simsun", "avoid": "123"}).json()
    assert body["items"] == ["5 6 3 4 1 2", "6 4 5 2 3 1"]
    assert body["count"] == 2
    assert client.get("/api/v1/enumerate", params={"n": 3, "avoid": "1x"}).status_code == 400
    assert client.get("/api/v1/enumerate", params={"n": -1}).status_code == 422


@pytest.mark.parametrize("cls", ["all", "simsun", "double-simsun"])
def test_enumerate_rejects_sizes_beyond_limit(client, cls):
    for n in (settings.SIMSUN_NMAX_LIMIT + 1, 12, 30):
        response = client.get("/api/v1/enumerate", params={"n": n, "cls": cls, "count_only": True})
        assert response.status_code == 400
        assert response.json()["detail"]["error"] == "DomainError"


def test_sequence(client):
    body = client.get("/api/v1/sequence/drs", params={"nmax": 6}).json()
    assert (body["offset"], body["values"]) == (1, [1, 2, 5, 15, 52, 204])
    assert client.get("/api/v1/sequence/lucas").status_code == 404
    assert client.get("/api/v1/sequence/drs", params={"nmax": 40}).status_code == 400
    body = client.get("/api/v1/sequence/rs", params={"nmax": 6}).json()
    assert (body["offset"], body["values"]) == (1, [1, 2, 5, 16, 61, 272])
    assert client.get("/api/v1/sequence/rs", params={"nmax": 40}).status_code == 400


def test_verify(client):
    body = client.post("/api/v1/verify/zeta-image", params={"nmax": 6}).json()
    assert body["passed"] is True
    assert body["reports"][0]["n_values"] == [1, 2, 3, 4, 5, 6]
    assert client.post("/api/v1/verify/missing", params={"nmax": 3}).status_code == 404
