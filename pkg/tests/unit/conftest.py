from collections.abc import Callable
from pathlib import Path

import pytest

from src.labeled_simplicity.graph import parse_graph
from src.labeled_simplicity.models import LabeledGraph

FIXTURES_DIR = Path(__file__).resolve().parents[2] / "fixtures"


@pytest.fixture
def load_fixture() -> Callable[[str], LabeledGraph]:
    def _load(name: str) -> LabeledGraph:
        return parse_graph((FIXTURES_DIR / f"{name}.lg").read_text(encoding="utf-8"))

    return _load
