"""HTTP service tests, exercising the same surfaces the CLI exposes."""

import pytest
from fastapi.testclient import TestClient

from monocurve.service import app

BIG = [11, 13, 15, 17, 19, 21, 23]


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_healthz(client):
    response = client.get("/healthz")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_pf(client):
    response = client.post("/pf", json={"sequence": BIG})
    assert response.status_code == 200
    body = response.json()
    assert body["pf_s1"] == [25, 27, 29, 31]
    assert body["pf_s2"] == [21]
    assert body["classification"]["arithmetic"] is True
    assert body["classification"]["b"] == 5


def test_displays_regenerate_from_exponents(client):
    from monocurve import DerivationGenerator, Target

    response = client.post("/derivations", json={"sequence": BIG})
    for g in response.json()["derivation_basis"]:
        rebuilt = DerivationGenerator(Target(g["target"]), g["t_exp"], g["u_exp"])
        assert rebuilt.display() == g["display"]


def test_derivations_golden(client):
    response = client.post("/derivations", json={"sequence": BIG, "method": "both"})
    assert response.status_code == 200
    body = response.json()
    assert body["mu"] == 7
    displays = {g["display"] for g in body["derivation_basis"]}
    assert displays == {
        "t d/dt",
        "t^26 u^44 d/dt",
        "t^28 u^42 d/dt",
        "t^30 u^40 d/dt",
        "t^32 u^38 d/dt",
        "u d/du",
        "t^48 u^22 d/du",
    }
    assert body["validation"]["closed_equals_brute"] is True
    assert body["validation"]["mu_match"] is True


def test_hk_both_paths(client):
    response = client.post(
        "/hk", json={"sequence": [7, 10, 13, 16, 19], "method": "both"}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["hk"] == {"num": 223, "den": 19, "decimal": pytest.approx(223 / 19)}
    assert body["hk_eto"]["num"] == 223
    assert body["paths_agree"] is True
    assert body["staircase"]["colength"] == 223


def test_hk_frobenius_power(client):
    response = client.post(
        "/hk",
        json={"sequence": [1, 2, 3], "frobenius_power": 4, "assume_cm": True},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["frobenius_power"]["colength"] == 31
    assert body["frobenius_power"]["q"] == 4


def test_apery(client):
    response = client.post("/apery", json={"sequence": [3, 5], "modulus": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["apery_set"] == [0, 5, 10]
    assert body["frobenius"] == 7


def test_validate_small(client):
    response = client.post("/validate", json={"family": "p1", "max_np": 12})
    assert response.status_code == 200
    body = response.json()
    assert body["ok"] is True
    assert all(check["ok"] for check in body["checks"])


def test_bad_input_is_400(client):
    response = client.post("/pf", json={"sequence": [6, 10]})
    assert response.status_code == 400
    assert "gcd" in response.json()["detail"]


def test_payload_shape_is_422(client):
    response = client.post("/pf", json={"sequence": []})
    assert response.status_code == 422


def test_cap_exceeded_is_422(client):
    response = client.post(
        "/derivations", json={"sequence": [5, 9], "method": "brute", "cap": 3}
    )
    assert response.status_code == 422
    assert "cap" in response.json()["detail"]
