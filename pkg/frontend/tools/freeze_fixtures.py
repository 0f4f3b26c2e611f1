"""Capture real service responses as test fixtures.

Run from the repository root with the Python package installed:

    python3 frontend/tools/freeze_fixtures.py

The UI tests assert against these frozen reports so they stay hermetic;
regenerate after any change to the report schema.
"""

import json
import pathlib

from fastapi.testclient import TestClient

from alt.data_files import tractatus_text
from alt.service import create_app

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def dump(name: str, doc: dict) -> None:
    path = OUT / name
    path.write_text(json.dumps(doc, ensure_ascii=False, indent=2) + "\n",
                    encoding="utf-8")
    print("wrote", path)


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    with TestClient(create_app()) as client:
        reference = tractatus_text()
        resp = client.post("/api/v1/analyze", json={
            "text": reference, "keywords": ["figura", "mundo"]})
        resp.raise_for_status()
        (OUT / "tractatus.txt").write_text(reference, encoding="utf-8")
        dump("tractatus_report.json", resp.json())

        marathon = " ".join(["casa"] * 46) + "."
        resp = client.post("/api/v1/analyze", json={"text": marathon})
        resp.raise_for_status()
        (OUT / "very_long.txt").write_text(marathon, encoding="utf-8")
        dump("very_long_report.json", resp.json())


if __name__ == "__main__":
    main()
