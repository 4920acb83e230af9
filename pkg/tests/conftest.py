import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def metrics_dir() -> Path:
    return FIXTURES / "metrics"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return FIXTURES / "corpus" / "src"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return FIXTURES / "golden"


@pytest.fixture(scope="session")
def expected_metrics() -> dict:
    return json.loads((FIXTURES / "metrics" / "expected_metrics.json").read_text())


@pytest.fixture(scope="session")
def expected_corpus() -> dict:
    return json.loads((FIXTURES / "corpus" / "expected_corpus.json").read_text())
