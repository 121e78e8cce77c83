import json
import os
import pathlib

import pytest


@pytest.fixture(scope="session")
def report_schema():
    path = os.environ.get("REMMATCH_SCHEMA")
    if not path:
        path = pathlib.Path(__file__).resolve().parents[2] / "schemas" / "report.schema.json"
    with open(path) as f:
        return json.load(f)
