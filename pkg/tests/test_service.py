import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from fdrbasis.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    body = client.get("/v1/health").json()
    assert body == {"status": "ok", "schema_version": "1"}


def test_enumerate_listing_and_count(client):
    body = client.post("/v1/enumerate", json={"n": 3}).json()
    assert body["schema_version"] == "1"
    assert body["total"] == 10
    assert "1,2,3" in body["partitions"]
    count_only = client.post(
        "/v1/enumerate", json={"n": 3, "count_only": True}
    ).json()
    assert count_only["partitions"] is None
    assert count_only["total"] == 10


def test_enumerate_bidegree_filter(client):
    body = client.post(
        "/v1/enumerate", json={"n": 4, "bidegree": [2, 1], "count_only": True}
    ).json()
    assert body["total"] == 6


def test_enumerate_psi(client):
    body = client.post(
        "/v1/enumerate", json={"n": 4, "noncrossing_only": False, "count_only": True}
    ).json()
    assert body["total"] > 35


def test_vector_endpoint_both_constructions(client):
    payload = {"pi": "1:t/2,5/3,4/6,8/7:x"}
    blockops = client.post("/v1/gpi", json=payload).json()
    product = client.post(
        "/v1/gpi", json={**payload, "construction": "product"}
    ).json()
    assert blockops["multivector"] == product["multivector"]
    assert blockops["n"] == 8
    assert blockops["bidegree"] == [3, 3]
    assert blockops["term_count"] == 4


def test_vector_endpoint_rejects_bad_partition(client):
    response = client.post("/v1/gpi", json={"pi": "1/2"})
    assert response.status_code == 422
    assert response.json()["kind"] == "invalid-input"


def test_straighten_endpoint_with_oracle(client):
    body = client.post(
        "/v1/straighten",
        json={"sigma": "(3 5 7 6)", "pi": "2,3/4,5/7:t/1,8,6", "oracle": True},
    ).json()
    assert body["oracle_checked"] and body["oracle_agrees"]
    assert [t["coeff"] for t in body["terms"]] == ["-1"] * 4
    assert body["terms"][0]["partition"] == "1,2,8/3,4/5,7/6:t"


def test_straighten_rewrite_limit_maps_to_422(client):
    response = client.post(
        "/v1/straighten",
        json={"sigma": "(3 5 7 6)", "pi": "2,3/4,5/7:t/1,8,6", "max_rewrites": 1},
    )
    assert response.status_code == 422
    assert response.json()["kind"] == "rewrite-limit"


def test_verify_basis_endpoint(client):
    body = client.post("/v1/verify-basis", json={"n": 4, "injectivity": True}).json()
    assert body["passed"]
    assert body["indexed_count"] == body["dim_total"] == 35
    assert body["injectivity"]["passed"]
    assert body["narayana"][1] == {"k": 2, "dim": 6, "narayana": 6, "ok": True}


def test_frobenius_endpoint(client):
    body = client.post("/v1/frobenius", json={"n": 4}).json()
    assert body["product_form_matches"]
    entries = {(e["i"], e["j"]): e for e in body["entries"]}
    assert entries[(0, 0)]["schur"] == "+1 s[3]"
    assert entries[(1, 1)]["dim"] == 8


def test_sieve_endpoint(client):
    body = client.post("/v1/sieve", json={"n": 5}).json()
    assert body["passed"]
    assert body["set_size"] == 42
    assert {inst["name"] for inst in body["instances"]} == {"fake-degree", "q-catalan"}
    for inst in body["instances"]:
        assert inst["fixed_counts"][0] == 42


def test_congruence_endpoint(client):
    body = client.post("/v1/congruence", json={"n": 6}).json()
    assert body["zero_mod_small"]
    assert body["residue_small"] == "0"
    assert not body["zero_mod_large"]


def test_report_endpoint(client):
    body = client.post("/v1/report", json={"n_max": 3}).json()
    assert body["all_passed"]
    assert len(body["criteria"]) == 12
    assert all(row["passed"] for row in body["criteria"])


def test_validation_errors_are_4xx(client):
    assert client.post("/v1/enumerate", json={"n": 1}).status_code == 422
    assert client.post("/v1/verify-basis", json={"n": 99}).status_code == 422
