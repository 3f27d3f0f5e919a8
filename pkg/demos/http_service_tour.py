"""Tour of the HTTP API: session lifecycle plus stateless computation.

Runs the service in-process (no sockets) against a temporary event log.
The same requests work against ``ivalue serve`` over real HTTP.
"""

from __future__ import annotations

import tempfile

from fastapi.testclient import TestClient

from ivalue.service import create_app


def main() -> None:
    with tempfile.NamedTemporaryFile(suffix=".log") as log:
        client = TestClient(create_app(log.name))

        created = client.post("/sessions", json={"objects": ["l1", "l2", "l3", "l4"]})
        payload = created.json()["payload"]
        sid, rev = payload["session_id"], payload["revision"]
        print("created session", sid, "phase", payload["phase"])

        for slot, cards in enumerate([[3, 5], [0, 2], [1, 4]]):
            resp = client.put(
                f"/sessions/{sid}/cards/{slot}", json=cards, headers={"If-Match": str(rev)}
            )
            rev = resp.json()["payload"]["revision"]
        print("cards entered, revision", rev)

        diagnosis = client.get(f"/sessions/{sid}/diagnosis").json()["payload"]
        print("equal lengths:", diagnosis["equal_lengths"], "alpha:", round(diagnosis["alpha"], 4))

        stale = client.put(f"/sessions/{sid}/cards/0", json=[3, 5], headers={"If-Match": "0"})
        print("stale mutation status:", stale.status_code, stale.json()["error_name"])

        accepted = client.post(
            f"/sessions/{sid}/respond", json={"accept": True}, headers={"If-Match": str(rev)}
        )
        rev = accepted.json()["payload"]["revision"]
        final = client.post(f"/sessions/{sid}/finalize", headers={"If-Match": str(rev)})
        result = final.json()["payload"]["result"]
        print("normalization constant:", result["normalization_constant"])
        print("normalized scale:", result["normalized_scale"]["values"])

        check = client.post(
            "/compute/check",
            json={
                "document": {
                    "kind": "interval_matrix",
                    "payload": {"entries": result["full_table"]},
                    "version": 1,
                },
                "neutral": result["neutral"],
            },
        )
        print("final table consistent:", check.json()["payload"]["is_consistent"])


if __name__ == "__main__":
    main()
