import json
import pathlib

import pytest

import multipres as mp

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def diamond_path() -> pathlib.Path:
    return FIXTURES / "diamond.json"


@pytest.fixture(scope="session")
def diamond_doc(diamond_path) -> dict:
    return json.loads(diamond_path.read_text())


@pytest.fixture
def diamond(diamond_path) -> mp.MultifilteredComplex:
    return mp.import_filtration(diamond_path)
