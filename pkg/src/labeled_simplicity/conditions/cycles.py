from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from ..automaton import forced_trajectory
from ..errors import CapExceededError
from ..lattice import AtomTable, LatticeElement, ensure_lattice_cap, lattice_elements
from ..limits import DEFAULT_LIMITS, AnalysisLimits
from ..models import LabeledGraph, VertexSet, Word
from ..verdict import CycleNoExit

logger = logging.getLogger(__name__)

EXIT_TYPE_I = "I"
EXIT_TYPE_II = "II"


@dataclass(frozen=True)
class LoopRecord:
    word: Word
    vertex_set: VertexSet
    exits: tuple[str, ...]

    @property
    def has_exit(self) -> bool:
        return bool(self.exits)


def _returning_power(
    g: LabeledGraph,
    atoms: AtomTable,
    element: LatticeElement,
    word: Word,
) -> Word | None:
    # forced images permute the atoms of the set; the power is the lcm of their return times
    returns: list[int] = []
    for i in element.atom_indices():
        atom = atoms.atoms[i]
        reached = g.range_of(atom, word)
        steps = 1
        while reached != atom and steps <= len(element):
            reached = g.range_of(reached, word)
            steps += 1
        if reached != atom:
            return None
        returns.append(steps)
    return word * math.lcm(*returns)


def _fixes_every_subset(
    g: LabeledGraph,
    atoms: AtomTable,
    element: LatticeElement,
    word: Word,
) -> bool:
    for sub in element.submasks():
        if not sub:
            continue
        member = atoms.vertex_set(sub)
        if g.range_of(member, word) != member:
            return False
    return True


def find_cycles_without_exit(
    g: LabeledGraph,
    atoms: AtomTable,
    limits: AnalysisLimits | None = None,
) -> list[CycleNoExit]:
    """All cycles without exit, one per set, in lattice enumeration order.

    A cycle without exit has a single-word language at its length, so its set lies on the
    cycle of some forced lasso; each set on such a cycle is tried with the lasso word rotated
    to start there.
    """
    ensure_lattice_cap(atoms, limits)
    found: list[CycleNoExit] = []
    seen: set[tuple[int, Word]] = set()

    for element in lattice_elements(atoms):
        if not element:
            continue
        trajectory = forced_trajectory(g, atoms.vertex_set(element), limits)
        if trajectory.shape != "lasso":
            continue
        letters = trajectory.cycle_word
        for offset, candidate in enumerate(trajectory.cycle_sets):
            candidate_element = atoms.element_of(candidate)
            if candidate_element is None:
                continue
            rotated = letters[offset:] + letters[:offset]
            word = _returning_power(g, atoms, candidate_element, rotated)
            if word is None or not _fixes_every_subset(g, atoms, candidate_element, word):
                continue
            key = (candidate.mask, word)
            if key in seen:
                continue
            seen.add(key)
            found.append(CycleNoExit(word, candidate))

    logger.debug("Cycles without exit count=%s", len(found))
    return found


def classify_loops(
    g: LabeledGraph,
    atoms: AtomTable,
    max_len: int,
    limits: AnalysisLimits | None = None,
) -> list[LoopRecord]:
    """Every loop (alpha, A) with |alpha| <= max_len, tagged with its exit types."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    limits = limits or DEFAULT_LIMITS
    if max_len > limits.loop_max_len_cap:
        raise CapExceededError("loop_max_len_cap", limits.loop_max_len_cap, max_len)
    ensure_lattice_cap(atoms, limits)
    records: list[LoopRecord] = []

    for element in lattice_elements(atoms):
        if not element:
            continue
        base = atoms.vertex_set(element)
        # (word, reached set, whether every step so far had a single out-letter)
        frontier: list[tuple[Word, VertexSet, bool]] = [((), base, True)]
        for _ in range(max_len):
            extended: list[tuple[Word, VertexSet, bool]] = []
            for word, reached, forced in frontier:
                labels = g.out_labels(reached)
                step_forced = forced and len(labels) == 1
                for label in labels:
                    target = g.image(reached, label)
                    next_word = word + (label,)
                    extended.append((next_word, target, step_forced))
                    if not base.issubset(target):
                        continue
                    exits: list[str] = []
                    if not step_forced:
                        exits.append(EXIT_TYPE_I)
                    if target != base:
                        exits.append(EXIT_TYPE_II)
                    records.append(LoopRecord(next_word, base, tuple(exits)))
            frontier = extended

    logger.debug("Loops max_len=%s count=%s", max_len, len(records))
    return records
