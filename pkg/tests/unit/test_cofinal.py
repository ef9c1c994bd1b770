from collections.abc import Callable

import pytest

from src.labeled_simplicity.conditions import coverage_set, is_strongly_cofinal
from src.labeled_simplicity.conditions.cofinal import closure_automaton
from src.labeled_simplicity.lattice import stable_partition
from src.labeled_simplicity.models import LabeledGraph
from src.labeled_simplicity.verdict import CofinalWitness

Loader = Callable[[str], LabeledGraph]

FIXTURES = ("G1", "G2", "G3", "G4", "G5", "G6", "G8", "G9", "G10")


def test_coverage_set_excludes_the_atom_unless_asked(load_fixture: Loader) -> None:
    g = load_fixture("G9")
    atoms = stable_partition(g)

    assert g.names(coverage_set(g, atoms, 1)) == ["w"]
    assert g.names(coverage_set(g, atoms, 1, include_empty_word=True)) == ["x", "w"]
    assert coverage_set(g, atoms, 0) == g.full_set


def test_coverage_set_of_isolated_loop(load_fixture: Loader) -> None:
    g = load_fixture("G4")
    atoms = stable_partition(g)

    assert g.names(coverage_set(g, atoms, 0)) == ["u"]
    assert g.names(coverage_set(g, atoms, 1)) == ["w"]


def test_closure_automaton_is_seeded_by_single_letter_ranges(load_fixture: Loader) -> None:
    g = load_fixture("G9")

    automaton, seed_letters = closure_automaton(g)

    assert [g.names(state) for state in automaton.states] == [["u"], ["x"], ["w"]]
    assert seed_letters == {0: "a", 1: "b", 2: "c"}


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("G1", True),
        ("G2", True),
        ("G3", True),
        ("G4", False),
        ("G5", True),
        ("G6", False),
        ("G8", True),
        ("G9", False),
        ("G10", True),
    ],
)
def test_strong_cofinality_on_fixtures(load_fixture: Loader, name: str, expected: bool) -> None:
    g = load_fixture(name)

    verdict = is_strongly_cofinal(g, stable_partition(g))

    assert verdict.holds is expected
    assert (verdict.witness is None) is expected


def test_disconnected_islands_escape_each_other(load_fixture: Loader) -> None:
    g = load_fixture("G4")

    verdict = is_strongly_cofinal(g, stable_partition(g))

    assert verdict.witness == CofinalWitness(g.vertex_set(["u"]), ("b",), ("b",))


def test_transient_atom_escapes_its_own_coverage(load_fixture: Loader) -> None:
    g = load_fixture("G9")

    verdict = is_strongly_cofinal(g, stable_partition(g))

    assert g.names(verdict.witness.atom) == ["x"]
    assert verdict.witness.stem == ("a",)
    assert verdict.witness.cycle == ("a",)


def test_witness_ranges_stay_outside_the_coverage(load_fixture: Loader) -> None:
    for name in ("G4", "G6", "G9"):
        g = load_fixture(name)
        atoms = stable_partition(g)
        witness = is_strongly_cofinal(g, atoms).witness
        covered = coverage_set(g, atoms, atoms.atoms.index(witness.atom))
        word = witness.stem + witness.cycle * 4
        for n in range(1, len(word) + 1):
            reached = g.range_of(g.full_set, word[:n])
            assert reached
            assert not reached.issubset(covered)


def test_empty_word_in_coverage_never_changes_the_verdict(load_fixture: Loader) -> None:
    for name in FIXTURES:
        g = load_fixture(name)
        atoms = stable_partition(g)

        assert (
            is_strongly_cofinal(g, atoms).holds
            == is_strongly_cofinal(g, atoms, include_empty_word=True).holds
        )
