"""A walk through the HTTP API using an in-process test client.

For a real deployment run `vietext serve --config service.toml` and talk
to the same endpoints over the network.
"""

from pathlib import Path

from fastapi.testclient import TestClient

from vietext.service.app import create_app
from vietext.service.config import ServiceConfig

DATA = Path(__file__).parent / "data"

client = TestClient(create_app(ServiceConfig()))

# one session per analysis workspace; text lives only inside it
session = client.post("/v1/sessions").json()["session_id"]
print("session:", session)

csv_content = (DATA / "feedback.csv").read_text(encoding="utf-8")
uploaded = client.post(f"/v1/sessions/{session}/documents",
                       json={"kind": "csv", "content": csv_content,
                             "text_column": "feedback"}).json()
languages = [d["language"] for d in uploaded["documents"]]
print(f"uploaded {len(uploaded['documents'])} documents "
      f"({languages.count('Vietnamese')} Vietnamese, "
      f"{languages.count('English')} English)\n")

wordcloud = client.post(f"/v1/sessions/{session}/analyse/wordcloud",
                        json={"mode": "Keyness", "top_k": 5}).json()
print("keyness top-5:", [e["term"] for e in wordcloud])

lines = client.post(f"/v1/sessions/{session}/analyse/kwic",
                    json={"query": "học tập", "window": 3}).json()
print(f"kwic 'học tập': {len(lines)} lines")

tree = client.post(f"/v1/sessions/{session}/analyse/tree",
                   json={"query": "học tập", "max_depth": 2}).json()
print("tree root:", tree["token"], tree["count"],
      "children:", [c["token"] for c in tree["children"]])

sentiment = client.post(f"/v1/sessions/{session}/analyse/sentiment",
                        json={"classes": 5}).json()
print("sentiment counts:",
      {k: v for k, v in sentiment["distribution"]["counts"].items() if v})

aspects = client.post(f"/v1/sessions/{session}/analyse/aspects").json()
print("aspects:", [(a["aspect"], round(a["confidence"], 2)) for a in aspects])

summary = client.post(f"/v1/sessions/{session}/analyse/summary/abstractive",
                      json={"aspect": aspects[0]["aspect"]}).json()
print("\naspect-guided summary:", summary["text"][:120], "...")

suggestions = client.post(f"/v1/sessions/{session}/analyse/suggest",
                          json={"keyword": "học"}).json()
print("suggestions:", [s["term"] for s in suggestions])

client.delete(f"/v1/sessions/{session}")
print("\nafter delete:", client.get(f"/v1/sessions/{session}").status_code,
      "| live sessions:", client.get("/v1/diagnostics").json()["live_sessions"])
