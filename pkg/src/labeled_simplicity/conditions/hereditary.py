from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from ..lattice import (
    AtomTable,
    LatticeElement,
    atom_image_table,
    element_image,
    ensure_lattice_cap,
)
from ..limits import AnalysisLimits
from ..models import LabeledGraph
from ..verdict import ProperHS, Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HSFamily:
    """A hereditary family: every lattice element below ``top``."""

    top: LatticeElement

    def __contains__(self, element: object) -> bool:
        return isinstance(element, LatticeElement) and element.issubset(self.top)

    def __len__(self) -> int:
        return 1 << len(self.top)

    def members(self) -> Iterator[LatticeElement]:
        return self.top.submasks()

    def is_full(self, atoms: AtomTable) -> bool:
        return self.top == atoms.full


def hereditary_closure(
    g: LabeledGraph,
    atoms: AtomTable,
    S: LatticeElement,
    table: dict[tuple[int, str], LatticeElement] | None = None,
) -> LatticeElement:
    """Top of the smallest family containing S closed under subsets, unions and relative ranges."""
    table = table if table is not None else atom_image_table(g, atoms)
    top = S
    frontier = S
    while frontier:
        grown = top
        for label in g.alphabet:
            grown = grown | element_image(table, frontier, label)
        frontier = LatticeElement(grown.atom_mask & ~top.atom_mask)
        top = grown
    return top


def hereditary_saturated_closure(
    g: LabeledGraph,
    atoms: AtomTable,
    S: LatticeElement,
    limits: AnalysisLimits | None = None,
) -> HSFamily:
    if not S:
        raise ValueError("hereditary_saturated_closure requires a nonempty element")
    ensure_lattice_cap(atoms, limits)
    table = atom_image_table(g, atoms)
    top = hereditary_closure(g, atoms, S, table)

    changed = True
    while changed:
        changed = False
        for i in range(len(atoms)):
            atom = atoms.atom_element(i)
            if atom.issubset(top):
                continue
            if all(table[(i, label)].issubset(top) for label in g.alphabet):
                top = hereditary_closure(g, atoms, top | atom, table)
                changed = True
    return HSFamily(top)


def has_proper_hereditary_saturated(
    g: LabeledGraph,
    atoms: AtomTable,
    limits: AnalysisLimits | None = None,
) -> Verdict:
    """Holds when some atom generates a hereditary saturated family short of the whole lattice."""
    ensure_lattice_cap(atoms, limits)
    for i in range(len(atoms)):
        family = hereditary_saturated_closure(g, atoms, atoms.atom_element(i), limits)
        if family.is_full(atoms):
            continue
        top = atoms.vertex_set(family.top)
        logger.debug("Proper hereditary saturated family top=%s", g.names(top))
        return Verdict(
            True,
            ProperHS(top, tuple(atoms.atoms[j] for j in family.top.atom_indices())),
            reason=f"family below {g.names(top)} is hereditary and saturated",
        )
    return Verdict(False)
