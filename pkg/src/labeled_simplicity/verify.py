"""Re-check serialized witnesses against the raw definitions.

Only relative ranges, labeled paths and the atom table are used here, never the automata the
analysis itself runs on. Every infinite claim is checked by sweeping until a (set, phase)
state repeats, which makes the finite sweep conclusive.
"""
from __future__ import annotations

import logging
from typing import Any

from .graph import labeled_paths
from .lattice import AtomTable, relative_range, stable_partition
from .limits import AnalysisLimits
from .models import LabeledGraph, VertexSet, Word, iter_bits, parse_word
from .report import AnalysisReport

logger = logging.getLogger(__name__)


def _word(g: LabeledGraph, text: str) -> Word:
    word = parse_word(text, g.alphabet)
    for label in word:
        if label not in g.alphabet:
            raise ValueError(f"symbol {label!r} is not in the alphabet")
    return word


def _in_lattice(atoms: AtomTable, vs: VertexSet) -> bool:
    return bool(vs) and atoms.element_of(vs) is not None


def _coverage(g: LabeledGraph, base: VertexSet) -> VertexSet:
    covered = 0
    frontier = [base]
    seen: set[int] = set()
    while frontier:
        current = frontier.pop()
        for label in g.alphabet:
            reached = relative_range(g, current, (label,))
            if reached and reached.mask not in seen:
                seen.add(reached.mask)
                covered |= reached.mask
                frontier.append(reached)
    return VertexSet(covered)


def verify_disagree_witness(g: LabeledGraph, atoms: AtomTable, witness: dict[str, Any]) -> list[str]:
    base = g.vertex_set(witness["set"])
    beta = _word(g, witness["word"])
    if not _in_lattice(atoms, base) or not beta:
        return ["disagreeable witness set is not a nonempty lattice element or its word is empty"]
    current = base
    seen: set[int] = set()
    while current.mask not in seen:
        seen.add(current.mask)
        if labeled_paths(g, current, len(beta)) != {beta}:
            return [f"disagreeable witness: paths from {g.names(current)} are not forced along the word"]
        current = relative_range(g, current, beta)
    return []


def verify_cofinal_witness(g: LabeledGraph, atoms: AtomTable, witness: dict[str, Any]) -> list[str]:
    atom = g.vertex_set(witness["atom"])
    stem = _word(g, witness["stem"])
    cycle = _word(g, witness["cycle"])
    if atom not in atoms.atoms:
        return ["strongly cofinal witness atom is not an atom"]
    if not stem or not cycle:
        return ["strongly cofinal witness has an empty stem or cycle"]
    covered = _coverage(g, atom)

    current = g.full_set
    for label in stem:
        current = relative_range(g, current, (label,))
        if not current or current.issubset(covered):
            return ["strongly cofinal witness: a stem prefix range is empty or covered"]
    seen: set[tuple[int, int]] = set()
    phase = 0
    while (current.mask, phase) not in seen:
        seen.add((current.mask, phase))
        current = relative_range(g, current, (cycle[phase],))
        phase = (phase + 1) % len(cycle)
        if not current or current.issubset(covered):
            return ["strongly cofinal witness: a cycle prefix range is empty or covered"]
    return []


def verify_cycle_witness(g: LabeledGraph, atoms: AtomTable, witness: dict[str, Any]) -> list[str]:
    base = g.vertex_set(witness["set"])
    word = _word(g, witness["word"])
    element = atoms.element_of(base)
    if element is None or not base or not word:
        return [f"cycle witness {witness} is not a nonempty lattice element with a word"]
    if labeled_paths(g, base, len(word)) != {word}:
        return [f"cycle witness {witness['word']} has a type I exit"]
    for sub in element.submasks():
        member = atoms.vertex_set(sub)
        if relative_range(g, member, word) != member:
            return [f"cycle witness {witness['word']} does not fix {g.names(member)}"]
    return []


def verify_family_witness(g: LabeledGraph, atoms: AtomTable, witness: dict[str, Any]) -> list[str]:
    top = g.vertex_set(witness["top"])
    listed = [g.vertex_set(names) for names in witness["atoms"]]
    if not _in_lattice(atoms, top) or top == g.full_set:
        return ["hereditary family top is not a proper nonempty lattice element"]
    if any(atom not in atoms.atoms or not atom.issubset(top) for atom in listed):
        return ["hereditary family lists a set that is not an atom below its top"]
    for atom in atoms.atoms:
        images_inside = all(
            relative_range(g, atom, (label,)).issubset(top) for label in g.alphabet
        )
        if atom.issubset(top) and not images_inside:
            return [f"hereditary family is not closed under ranges at {g.names(atom)}"]
        if not atom.issubset(top) and images_inside:
            return [f"hereditary family is not saturated at {g.names(atom)}"]
    return []


def verify_domain_witness(g: LabeledGraph, atoms: AtomTable, witness: dict[str, Any]) -> list[str]:
    word = _word(g, witness["word"])
    target = relative_range(g, g.full_set, word)
    for element in range(1 << len(atoms)):
        candidate = VertexSet(0)
        for i in iter_bits(element):
            candidate = candidate | atoms.atoms[i]
        if relative_range(g, candidate, word) == target:
            return [f"domain witness {witness['word']} has a domain {g.names(candidate)}"]
    return []


def verify_report(
    g: LabeledGraph,
    report: AnalysisReport,
    limits: AnalysisLimits | None = None,
) -> list[str]:
    atoms = stable_partition(g, limits)
    failures: list[str] = []
    witnesses = report.witnesses

    expectations = (
        ("disagreeable", not report.disagreeable, verify_disagree_witness),
        ("strongly_cofinal", not report.strongly_cofinal, verify_cofinal_witness),
        ("proper_hereditary_saturated", report.proper_hereditary_saturated, verify_family_witness),
        ("domain_condition", not report.domain_condition, verify_domain_witness),
    )
    for key, expected, check in expectations:
        witness = witnesses.get(key)
        if expected and witness is None:
            failures.append(f"{key}: verdict needs a witness but none was reported")
        elif not expected and witness is not None:
            failures.append(f"{key}: witness reported for a verdict that admits none")
        elif witness is not None:
            failures.extend(f"{key}: {failure}" for failure in check(g, atoms, witness))

    for cycle in report.cycles_without_exit:
        failures.extend(f"cycles_without_exit: {failure}" for failure in verify_cycle_witness(g, atoms, cycle))

    if failures:
        logger.error("Witness verification failed count=%s", len(failures))
    else:
        logger.info("Witness verification passed")
    return failures
