from collections.abc import Callable

import pytest

from src.labeled_simplicity.errors import CapExceededError
from src.labeled_simplicity.lattice import (
    LatticeElement,
    atom_image_table,
    generalized_vertex,
    is_minimal,
    is_weakly_left_resolving,
    lattice_elements,
    materialize_lattice,
    relative_range,
    stable_partition,
)
from src.labeled_simplicity.limits import AnalysisLimits
from src.labeled_simplicity.models import LabeledGraph

Loader = Callable[[str], LabeledGraph]


def _names(g: LabeledGraph, sets) -> list[list[str]]:
    return [g.names(vs) for vs in sets]


def test_generalized_vertex_level_one_merges_equal_incoming_letters(load_fixture: Loader) -> None:
    g = load_fixture("G3")

    assert g.names(generalized_vertex(g, "v2", 1)) == ["v2", "v3"]


def test_generalized_vertex_level_two_separates(load_fixture: Loader) -> None:
    g = load_fixture("G3")

    assert g.names(generalized_vertex(g, "v2", 2)) == ["v2"]


def test_generalized_vertex_single_vertex(load_fixture: Loader) -> None:
    g = load_fixture("G2")

    assert g.names(generalized_vertex(g, "v", 5)) == ["v"]


def test_generalized_vertex_rejects_unknown_vertex(load_fixture: Loader) -> None:
    g = load_fixture("G2")

    with pytest.raises(ValueError, match="unknown vertex 'q'"):
        generalized_vertex(g, "q", 1)


def test_generalized_vertex_rejects_zero_level(load_fixture: Loader) -> None:
    g = load_fixture("G2")

    with pytest.raises(ValueError, match="level must be >= 1"):
        generalized_vertex(g, "v", 0)


def test_stable_partition_cycle(load_fixture: Loader) -> None:
    g = load_fixture("G3")

    atoms = stable_partition(g)

    assert _names(g, atoms.atoms) == [["v1"], ["v2"], ["v3"]]
    assert atoms.stabilization_level == 2
    assert [_names(g, level) for level in atoms.level_history] == [
        [["v1"], ["v2", "v3"]],
        [["v1"], ["v2"], ["v3"]],
    ]


def test_stable_partition_trivial_labeling_is_immediate(load_fixture: Loader) -> None:
    g = load_fixture("G5")

    atoms = stable_partition(g)

    assert _names(g, atoms.atoms) == [["v1"], ["v2"]]
    assert atoms.stabilization_level == 1


def test_stable_partition_single_vertex(load_fixture: Loader) -> None:
    g = load_fixture("G2")

    atoms = stable_partition(g)

    assert _names(g, atoms.atoms) == [["v"]]
    assert atoms.stabilization_level == 1


def test_atom_table_invariants_on_fixtures(load_fixture: Loader) -> None:
    for name in ("G1", "G2", "G3", "G4", "G5", "G6", "G8", "G9", "G10"):
        g = load_fixture(name)
        atoms = stable_partition(g)

        covered = 0
        for atom in atoms.atoms:
            assert atom
            assert covered & atom.mask == 0
            covered |= atom.mask
        assert covered == g.full_set.mask

        for finer, coarser in zip(atoms.level_history[1:], atoms.level_history):
            assert all(any(cls.issubset(big) for big in coarser) for cls in finer)

        for v in g.vertices:
            level = atoms.stabilization_level
            assert generalized_vertex(g, v, level + 1) == generalized_vertex(g, v, level)

        table = atom_image_table(g, atoms)
        assert len(table) == len(atoms) * len(g.alphabet)


def test_closure_of_lattice_under_long_words(load_fixture: Loader) -> None:
    for name in ("G3", "G8", "G9", "G10"):
        g = load_fixture(name)
        atoms = stable_partition(g)
        words = [()]
        for _ in range(2 * len(atoms)):
            words = [w + (label,) for w in words for label in g.alphabet]
            for atom in atoms.atoms:
                for word in words:
                    assert atoms.element_of(relative_range(g, atom, word)) is not None


def test_lattice_elements_enumerates_all_unions(load_fixture: Loader) -> None:
    g3 = load_fixture("G3")
    assert len(list(lattice_elements(stable_partition(g3)))) == 8

    g4 = load_fixture("G4")
    atoms = stable_partition(g4)
    assert [g4.names(atoms.vertex_set(e)) for e in lattice_elements(atoms)] == [
        [],
        ["u"],
        ["w"],
        ["u", "w"],
    ]

    g2 = load_fixture("G2")
    assert list(lattice_elements(stable_partition(g2))) == [LatticeElement(0), LatticeElement(1)]


def test_lattice_enumerator_is_lazy_but_materialization_is_capped(load_fixture: Loader) -> None:
    g = load_fixture("G3")
    atoms = stable_partition(g)

    assert next(lattice_elements(atoms)) == LatticeElement(0)
    with pytest.raises(CapExceededError, match="atom_cap"):
        materialize_lattice(atoms, AnalysisLimits(atom_cap=2))


def test_relative_range_examples(load_fixture: Loader) -> None:
    g3 = load_fixture("G3")
    g1 = load_fixture("G1")

    assert g3.names(relative_range(g3, g3.vertex_set(["v1", "v2"]), ("a",))) == ["v2", "v3"]
    assert g1.names(relative_range(g1, g1.vertex_set(["v"]), ("a", "a"))) == ["v"]
    assert not relative_range(g3, g3.vertex_set(["v1"]), ("b",))


def test_relative_range_of_empty_word_is_identity(load_fixture: Loader) -> None:
    g = load_fixture("G3")
    base = g.vertex_set(["v1", "v3"])

    assert relative_range(g, base, ()) == base


def test_relative_range_rejects_foreign_symbol(load_fixture: Loader) -> None:
    g = load_fixture("G3")

    with pytest.raises(ValueError, match="symbol 'z' is not in the alphabet"):
        relative_range(g, g.vertex_set(["v1"]), ("a", "z"))


def test_is_weakly_left_resolving(load_fixture: Loader) -> None:
    for name in ("G1", "G3"):
        g = load_fixture(name)
        assert is_weakly_left_resolving(g, stable_partition(g)).holds

    g7 = load_fixture("G7")
    verdict = is_weakly_left_resolving(g7, stable_partition(g7))
    assert not verdict.holds
    assert g7.names(verdict.witness.first) == ["u"]
    assert g7.names(verdict.witness.second) == ["w"]
    assert verdict.witness.word == ("a",)


def test_is_minimal(load_fixture: Loader) -> None:
    g3 = load_fixture("G3")
    atoms = stable_partition(g3)

    assert is_minimal(atoms, atoms.element_of(g3.vertex_set(["v1"])))
    assert not is_minimal(atoms, atoms.element_of(g3.vertex_set(["v1", "v2"])))

    g2 = load_fixture("G2")
    assert is_minimal(stable_partition(g2), LatticeElement(1))

    with pytest.raises(ValueError, match="nonempty"):
        is_minimal(atoms, LatticeElement(0))
