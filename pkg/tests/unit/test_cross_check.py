from collections.abc import Callable

import pytest

from src.labeled_simplicity.models import LabeledGraph
from src.labeled_simplicity.oracle import FuzzParams, cross_check, fuzz_graphs

Loader = Callable[[str], LabeledGraph]


def _check_stream(params: FuzzParams) -> list[str]:
    failures = []
    for index, g in enumerate(fuzz_graphs(params)):
        result = cross_check(g)
        failures.extend(f"{index}: {check.name} {check.reason}" for check in result.violations)
    return failures


@pytest.mark.parametrize("name", ["G1", "G2", "G3", "G4", "G5", "G6", "G8", "G9", "G10"])
def test_fixtures_pass_every_cross_check(load_fixture: Loader, name: str) -> None:
    result = cross_check(load_fixture(name))

    assert result.ok
    assert result.violations == ()


def test_non_trivial_labeling_skips_classical_checks(load_fixture: Loader) -> None:
    result = cross_check(load_fixture("G3"))

    skipped = {check.name for check in result.checks if check.skipped}
    assert skipped == {"trivial_labeling_condition_l", "trivial_labeling_simplicity"}


def test_outcomes_record_classical_conditions(load_fixture: Loader) -> None:
    result = cross_check(load_fixture("G5"))

    assert result.outcomes["condition_l"] is False
    assert result.outcomes["graph_cofinal"] is True
    assert result.outcomes["simple"] is False
    assert result.graph_text.startswith("vertices: v1 v2\n")


def test_bruteforce_agrees_on_random_graphs() -> None:
    assert _check_stream(FuzzParams(max_vertices=5, max_labels=3, count=200, seed=42)) == []


def test_trivial_labeling_reduces_to_classical_conditions() -> None:
    params = FuzzParams(max_vertices=6, max_labels=3, count=300, seed=43, trivial_labeling=True)

    assert _check_stream(params) == []


def test_main_theorem_on_random_graphs() -> None:
    assert _check_stream(FuzzParams(max_vertices=6, max_labels=3, count=500, seed=44)) == []
