import json
import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data" / "fixtures.json"


@pytest.fixture(scope="session")
def fixtures():
    """Oracle fixtures as {name: (float value, decimal string)}."""
    payload = json.loads(DATA.read_text(encoding="utf-8"))
    return {rec["name"]: (float(rec["value"]), rec["value"])
            for rec in payload["fixtures"]}
