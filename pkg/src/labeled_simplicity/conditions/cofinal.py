from __future__ import annotations

import logging
from collections.abc import Sequence

import networkx as nx

from ..automaton import RangeAutomaton, build_range_automaton
from ..lattice import AtomTable
from ..limits import AnalysisLimits
from ..models import LabeledGraph, VertexSet, Word, format_word
from ..verdict import CofinalWitness, Verdict

logger = logging.getLogger(__name__)


def coverage_set(
    g: LabeledGraph,
    atoms: AtomTable,
    index: int,
    include_empty_word: bool = False,
    limits: AnalysisLimits | None = None,
) -> VertexSet:
    """Union of r(B, lambda) over all nonempty words lambda, for the atom B at ``index``."""
    atom = atoms.atoms[index]
    seeds = [image for label in g.alphabet if (image := g.image(atom, label))]
    covered = build_range_automaton(g, seeds, limits).union() if seeds else VertexSet()
    if include_empty_word:
        covered = covered | atom
    return covered


def closure_automaton(
    g: LabeledGraph,
    limits: AnalysisLimits | None = None,
) -> tuple[RangeAutomaton, dict[int, str]]:
    """Automaton whose infinite runs are the words in the closure of the infinite path language."""
    seeds: list[VertexSet] = []
    for label in g.alphabet:
        target = g.image(g.full_set, label)
        if target:
            seeds.append(target)
    automaton = build_range_automaton(g, seeds, limits)

    seed_letters: dict[int, str] = {}
    state_index = {state.mask: i for i, state in enumerate(automaton.states)}
    for label in g.alphabet:
        target = g.image(g.full_set, label)
        if target:
            seed_letters.setdefault(state_index[target.mask], label)
    return automaton, seed_letters


def _transition_letter(automaton: RangeAutomaton, alphabet: Sequence[str], source: int, target: int) -> str:
    for label in alphabet:
        if automaton.transitions.get((source, label)) == target:
            return label
    raise KeyError((source, target))


def _escaping_lasso(
    g: LabeledGraph,
    automaton: RangeAutomaton,
    graph: nx.MultiDiGraph,
    seed_letters: dict[int, str],
    allowed: list[int],
) -> tuple[Word, Word] | None:
    sub = graph.subgraph(allowed)
    allowed_set = set(allowed)
    for seed in automaton.seeds:
        if seed not in allowed_set:
            continue
        try:
            cycle_edges = nx.find_cycle(sub, source=seed)
        except nx.NetworkXNoCycle:
            continue
        entry = cycle_edges[0][0]
        path = nx.shortest_path(sub, seed, entry)
        stem = (seed_letters[seed],) + tuple(
            _transition_letter(automaton, g.alphabet, a, b) for a, b in zip(path, path[1:])
        )
        cycle = tuple(key for _, _, key in cycle_edges)
        return stem, cycle
    return None


def is_strongly_cofinal(
    g: LabeledGraph,
    atoms: AtomTable,
    limits: AnalysisLimits | None = None,
    include_empty_word: bool = False,
) -> Verdict:
    automaton, seed_letters = closure_automaton(g, limits)
    graph = automaton.as_multidigraph()

    for index, atom in enumerate(atoms.atoms):
        covered = coverage_set(g, atoms, index, include_empty_word, limits)
        allowed = [k for k, state in enumerate(automaton.states) if not state.issubset(covered)]
        if not allowed:
            continue
        lasso = _escaping_lasso(g, automaton, graph, seed_letters, allowed)
        if lasso is None:
            continue
        stem, cycle = lasso
        logger.debug(
            "Escaping run atom=%s covered=%s stem=%s cycle=%s",
            g.names(atom),
            g.names(covered),
            format_word(stem, g.alphabet),
            format_word(cycle, g.alphabet),
        )
        return Verdict(
            False,
            CofinalWitness(atom, stem, cycle),
            reason=f"ranges along {format_word(stem, g.alphabet)}({format_word(cycle, g.alphabet)})^w escape the coverage of {g.names(atom)}",
        )
    return Verdict(True)
