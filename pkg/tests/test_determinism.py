"""Fixed inputs and seed must give byte-identical documents."""

import json
import warnings

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from fdrbasis.service import app


def _doc(client, path, payload):
    return json.dumps(client.post(path, json=payload).json(), sort_keys=True)


def test_service_documents_are_reproducible():
    with TestClient(app) as client:
        for path, payload in [
            ("/v1/enumerate", {"n": 5}),
            ("/v1/gpi", {"pi": "1:t/2,5/3,4/6,8/7:x"}),
            (
                "/v1/straighten",
                {"sigma": "(3 5 7 6)", "pi": "2,3/4,5/7:t/1,8,6", "oracle": True},
            ),
            ("/v1/verify-basis", {"n": 4}),
            ("/v1/frobenius", {"n": 5}),
            ("/v1/sieve", {"n": 5}),
            ("/v1/congruence", {"n": 7}),
        ]:
            assert _doc(client, path, payload) == _doc(client, path, payload), path


def test_report_reproducible_without_timings():
    with TestClient(app) as client:
        def stripped():
            doc = client.post("/v1/report", json={"n_max": 3, "seed": 7}).json()
            for row in doc["criteria"]:
                row.pop("seconds")
            return json.dumps(doc, sort_keys=True)

        assert stripped() == stripped()


def test_openapi_schema_builds():
    spec = app.openapi()
    paths = set(spec["paths"])
    assert {
        "/v1/enumerate",
        "/v1/gpi",
        "/v1/straighten",
        "/v1/verify-basis",
        "/v1/frobenius",
        "/v1/sieve",
        "/v1/congruence",
        "/v1/report",
        "/v1/health",
    } <= paths
