import json
import pathlib

import pytest

THRESHOLDS_PATH = pathlib.Path(__file__).parent / "acceptance_thresholds.json"


@pytest.fixture(scope="session")
def thresholds():
    with open(THRESHOLDS_PATH) as fh:
        return json.load(fh)
