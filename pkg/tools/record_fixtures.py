#!/usr/bin/env python3
"""Record API responses as fixtures for the frontend contract tests.

Runs the service in-process, uploads the demo feedback corpus, and saves
each analysis response verbatim under frontend/tests/fixtures/.
"""

from pathlib import Path

from fastapi.testclient import TestClient

from vietext.service.app import create_app
from vietext.service.config import ServiceConfig

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "frontend" / "tests" / "fixtures"


def save(name: str, content: bytes) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    (FIXTURES / name).write_bytes(content)
    print(f"wrote frontend/tests/fixtures/{name} ({len(content)} bytes)")


def main() -> None:
    client = TestClient(create_app(ServiceConfig()))
    session = client.post("/v1/sessions").json()["session_id"]
    csv_content = (ROOT / "demos" / "data" / "feedback.csv").read_text("utf-8")
    upload = client.post(f"/v1/sessions/{session}/documents",
                         json={"kind": "csv", "content": csv_content,
                               "text_column": "feedback"})
    save("upload.json", upload.content)

    def analyse(route: str, body, name: str) -> None:
        response = client.post(f"/v1/sessions/{session}/analyse/{route}", json=body)
        assert response.status_code == 200, (route, response.content)
        save(name, response.content)

    analyse("wordcloud", {"mode": "Frequency", "top_k": 20}, "wordcloud_frequency.json")
    analyse("wordcloud", {"mode": "Keyness", "top_k": 20}, "wordcloud_keyness.json")
    analyse("kwic", {"query": "học tập", "window": 3}, "kwic.json")
    analyse("tree", {"query": "học tập", "max_depth": 4}, "tree.json")
    analyse("tree", {"query": "học tập", "max_depth": 4,
                     "expand_path": ["phong phú"], "additional_depth": 3},
            "tree_expand.json")
    analyse("sentiment", {"classes": 5}, "sentiment.json")
    analyse("aspects", None, "aspects.json")
    analyse("summary/abstractive", {"aspect": "Academic"}, "abstractive.json")
    analyse("summary/extractive", {"target": 2}, "extractive.json")
    analyse("suggest", {"keyword": "học"}, "suggest.json")


if __name__ == "__main__":
    main()
