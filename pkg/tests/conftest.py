import json
import os

import pytest

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def gate_pair():
    """The checked-in three-square pair related by the horizontal shear."""
    with open(os.path.join(DATA_DIR, "shear_gate_pair.json"), "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return raw["first"], raw["second"]
