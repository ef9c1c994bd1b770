from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import CapExceededError, GraphError
from .limits import DEFAULT_LIMITS, AnalysisLimits
from .models import LabeledGraph, VertexSet, iter_bits
from .verdict import ResolvingCounterexample, Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeElement:
    """A member of the accommodating lattice, stored as a bitmask over atom indices."""

    atom_mask: int = 0

    def __bool__(self) -> bool:
        return self.atom_mask != 0

    def __or__(self, other: LatticeElement) -> LatticeElement:
        return LatticeElement(self.atom_mask | other.atom_mask)

    def __and__(self, other: LatticeElement) -> LatticeElement:
        return LatticeElement(self.atom_mask & other.atom_mask)

    def __len__(self) -> int:
        return self.atom_mask.bit_count()

    def issubset(self, other: LatticeElement) -> bool:
        return self.atom_mask & ~other.atom_mask == 0

    def atom_indices(self) -> Iterator[int]:
        return iter_bits(self.atom_mask)

    def submasks(self) -> Iterator[LatticeElement]:
        sub = self.atom_mask
        while True:
            yield LatticeElement(sub)
            if sub == 0:
                return
            sub = (sub - 1) & self.atom_mask


@dataclass(frozen=True)
class AtomTable:
    atoms: tuple[VertexSet, ...]
    stabilization_level: int
    level_history: tuple[tuple[VertexSet, ...], ...]

    def __len__(self) -> int:
        return len(self.atoms)

    @cached_property
    def _atom_of_vertex(self) -> dict[int, int]:
        return {v: i for i, atom in enumerate(self.atoms) for v in atom}

    @property
    def full(self) -> LatticeElement:
        return LatticeElement((1 << len(self.atoms)) - 1)

    def atom_element(self, index: int) -> LatticeElement:
        return LatticeElement(1 << index)

    def vertex_set(self, element: LatticeElement) -> VertexSet:
        mask = 0
        for i in element.atom_indices():
            mask |= self.atoms[i].mask
        return VertexSet(mask)

    def element_of(self, vs: VertexSet) -> LatticeElement | None:
        """Return the lattice element denoting ``vs``, or None when ``vs`` is not a union of atoms."""
        atom_mask = 0
        for v in vs:
            atom_mask |= 1 << self._atom_of_vertex[v]
        element = LatticeElement(atom_mask)
        return element if self.vertex_set(element) == vs else None

    def partition_at(self, level: int) -> tuple[VertexSet, ...]:
        if level < 1:
            raise ValueError("level must be >= 1")
        if level >= self.stabilization_level:
            return self.atoms
        return self.level_history[level - 1]


def range_sets(g: LabeledGraph, limits: AnalysisLimits | None = None) -> dict[int, int]:
    """Map every nonempty r(alpha) to the length of its shortest word, by breadth-first search."""
    limits = limits or DEFAULT_LIMITS
    depth: dict[int, int] = {}
    queue: deque[VertexSet] = deque()

    def _visit(target: VertexSet, level: int) -> None:
        if not target or target.mask in depth:
            return
        if len(depth) >= limits.automaton_state_cap:
            raise CapExceededError("automaton_state_cap", limits.automaton_state_cap)
        depth[target.mask] = level
        queue.append(target)

    for label in g.alphabet:
        _visit(g.image(g.full_set, label), 1)
    while queue:
        current = queue.popleft()
        for label in g.out_labels(current):
            _visit(g.image(current, label), depth[current.mask] + 1)
    return depth


def _partition(vertex_count: int, masks: Iterable[int]) -> tuple[VertexSet, ...]:
    # vertices are equivalent when they lie in exactly the same ranges
    signature = [0] * vertex_count
    for k, mask in enumerate(masks):
        for v in iter_bits(mask):
            signature[v] |= 1 << k
    classes: dict[int, int] = {}
    for v, sig in enumerate(signature):
        classes[sig] = classes.get(sig, 0) | 1 << v
    return tuple(VertexSet(mask) for mask in classes.values())


def _partition_at_level(vertex_count: int, depths: dict[int, int], level: int) -> tuple[VertexSet, ...]:
    return _partition(vertex_count, (mask for mask, d in depths.items() if d <= level))


def generalized_vertex(
    g: LabeledGraph,
    v: str,
    level: int,
    limits: AnalysisLimits | None = None,
) -> VertexSet:
    if level < 1:
        raise ValueError("level must be >= 1")
    if v not in g.index:
        raise ValueError(f"unknown vertex {v!r}")
    vertex_index = g.index[v]
    for cls in _partition_at_level(len(g.vertices), range_sets(g, limits), level):
        if vertex_index in cls:
            return cls
    raise AssertionError("partition does not cover every vertex")


def stable_partition(g: LabeledGraph, limits: AnalysisLimits | None = None) -> AtomTable:
    depths = range_sets(g, limits)
    vertex_count = len(g.vertices)
    limit = _partition(vertex_count, depths)

    history: list[tuple[VertexSet, ...]] = []
    level = 1
    while True:
        current = _partition_at_level(vertex_count, depths, level)
        history.append(current)
        if current == limit:
            break
        level += 1

    logger.debug(
        "Stable partition atoms=%s level=%s range_sets=%s",
        len(limit),
        level,
        len(depths),
    )
    return AtomTable(atoms=limit, stabilization_level=level, level_history=tuple(history))


def ensure_lattice_cap(atoms: AtomTable, limits: AnalysisLimits | None = None) -> None:
    limits = limits or DEFAULT_LIMITS
    if len(atoms) > limits.atom_cap:
        raise CapExceededError("atom_cap", limits.atom_cap, len(atoms))


def lattice_elements(atoms: AtomTable) -> Iterator[LatticeElement]:
    for mask in range(1 << len(atoms)):
        yield LatticeElement(mask)


def materialize_lattice(atoms: AtomTable, limits: AnalysisLimits | None = None) -> list[LatticeElement]:
    ensure_lattice_cap(atoms, limits)
    return list(lattice_elements(atoms))


def relative_range(g: LabeledGraph, A: VertexSet, word: Sequence[str]) -> VertexSet:
    return g.range_of(A, word)


def atom_image_table(g: LabeledGraph, atoms: AtomTable) -> dict[tuple[int, str], LatticeElement]:
    table: dict[tuple[int, str], LatticeElement] = {}
    for i, atom in enumerate(atoms.atoms):
        for label in g.alphabet:
            element = atoms.element_of(g.image(atom, label))
            if element is None:
                raise GraphError(
                    f"range of atom {g.names(atom)} under {label!r} is not a union of atoms"
                )
            table[(i, label)] = element
    return table


def element_image(
    table: dict[tuple[int, str], LatticeElement],
    element: LatticeElement,
    label: str,
) -> LatticeElement:
    image = LatticeElement()
    for i in element.atom_indices():
        image = image | table[(i, label)]
    return image


def is_weakly_left_resolving(g: LabeledGraph, atoms: AtomTable) -> Verdict:
    # atoms are disjoint, so r(A & B, a) is empty and the law reduces to disjoint images
    for label in g.alphabet:
        images = [g.image(atom, label) for atom in atoms.atoms]
        for i in range(len(images)):
            for j in range(i + 1, len(images)):
                if images[i] & images[j]:
                    return Verdict(
                        False,
                        ResolvingCounterexample(atoms.atoms[i], atoms.atoms[j], (label,)),
                        reason=f"atoms {g.names(atoms.atoms[i])} and {g.names(atoms.atoms[j])} meet under {label}",
                    )
    return Verdict(True)


def is_minimal(atoms: AtomTable, element: LatticeElement) -> bool:
    if not element:
        raise ValueError("is_minimal requires a nonempty element")
    return len(element) == 1
