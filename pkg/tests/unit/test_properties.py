"""Property-based tests for ranges, atoms and the resolving check."""

from __future__ import annotations

from itertools import product

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from src.labeled_simplicity.graph import build_graph
from src.labeled_simplicity.lattice import is_weakly_left_resolving, lattice_elements, stable_partition
from src.labeled_simplicity.models import Edge, LabeledGraph, VertexSet

PROPERTY_SETTINGS = settings(
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)

_LABELS = ("a", "b")


@st.composite
def _graphs(draw: st.DrawFn) -> LabeledGraph:
    vertex_count = draw(st.integers(min_value=1, max_value=4))
    vertices = [f"v{i}" for i in range(vertex_count)]
    possible = [Edge(s, label, t) for s in vertices for label in _LABELS for t in vertices]
    edges = draw(st.lists(st.sampled_from(possible), unique=True, max_size=10))
    # self-loops keep every vertex both emitting and receiving
    for v in vertices:
        if not any(e.source == v for e in edges) or not any(e.target == v for e in edges):
            loop = Edge(v, "a", v)
            if loop not in edges:
                edges.append(loop)
    return build_graph(vertices, edges)


def _words(alphabet: tuple[str, ...], max_len: int) -> list[tuple[str, ...]]:
    return [word for n in range(1, max_len + 1) for word in product(alphabet, repeat=n)]


def _subsets(g: LabeledGraph) -> st.SearchStrategy[VertexSet]:
    return st.integers(min_value=0, max_value=(1 << len(g.vertices)) - 1).map(VertexSet)


@PROPERTY_SETTINGS
@given(data=st.data())
def test_range_of_union_is_union_of_ranges(data: st.DataObject) -> None:
    g = data.draw(_graphs())
    first = data.draw(_subsets(g))
    second = data.draw(_subsets(g))
    word = data.draw(st.lists(st.sampled_from(g.alphabet), min_size=1, max_size=5).map(tuple))

    assert g.range_of(first | second, word) == g.range_of(first, word) | g.range_of(second, word)


@PROPERTY_SETTINGS
@given(data=st.data())
def test_range_of_concatenation_composes(data: st.DataObject) -> None:
    g = data.draw(_graphs())
    base = data.draw(_subsets(g))
    words = st.lists(st.sampled_from(g.alphabet), max_size=4).map(tuple)
    head = data.draw(words)
    tail = data.draw(words)

    assert g.range_of(base, head + tail) == g.range_of(g.range_of(base, head), tail)


@PROPERTY_SETTINGS
@given(_graphs())
def test_partition_refines_level_by_level(g: LabeledGraph) -> None:
    atoms = stable_partition(g)

    for finer, coarser in zip(atoms.level_history[1:], atoms.level_history):
        assert all(any(cls.issubset(big) for big in coarser) for cls in finer)
    assert all(any(atom.issubset(cls) for cls in atoms.level_history[0]) for atom in atoms.atoms)
    assert atoms.partition_at(atoms.stabilization_level + 1) == atoms.atoms


@PROPERTY_SETTINGS
@given(_graphs())
def test_resolving_graphs_are_closed_under_ranges(g: LabeledGraph) -> None:
    atoms = stable_partition(g)
    assume(is_weakly_left_resolving(g, atoms).holds)

    for atom in atoms.atoms:
        for word in _words(g.alphabet, min(2 * len(atoms), 5)):
            assert atoms.element_of(g.range_of(atom, word)) is not None


@PROPERTY_SETTINGS
@given(_graphs())
def test_atom_letter_check_matches_exhaustive_check(g: LabeledGraph) -> None:
    atoms = stable_partition(g)
    elements = [atoms.vertex_set(e) for e in lattice_elements(atoms)]
    words = _words(g.alphabet, 4)

    exhaustive = all(
        g.range_of(first, word) & g.range_of(second, word) == g.range_of(first & second, word)
        for first in elements
        for second in elements
        for word in words
    )

    assert is_weakly_left_resolving(g, atoms).holds == exhaustive
