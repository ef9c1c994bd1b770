from __future__ import annotations

import logging

import networkx as nx

from ..automaton import build_range_automaton
from ..conditions.cofinal import closure_automaton
from ..errors import CapExceededError
from ..graph import extend_labeled_paths
from ..lattice import AtomTable, lattice_elements
from ..limits import DEFAULT_LIMITS, AnalysisLimits
from ..models import LabeledGraph, VertexSet, Word
from ..verdict import DisagreeWitness, Verdict

logger = logging.getLogger(__name__)


def _forced_word(g: LabeledGraph, A: VertexSet, max_len: int) -> Word:
    """Longest word w, |w| <= max_len, with L(A E^|w|) = {w}."""
    frontier: dict[Word, VertexSet] = {(): A}
    word: Word = ()
    for _ in range(max_len):
        frontier = extend_labeled_paths(g, frontier)
        if len(frontier) != 1:
            break
        (word,) = frontier
    return word


def disagreeable_bruteforce(
    g: LabeledGraph,
    atoms: AtomTable,
    limits: AnalysisLimits | None = None,
) -> Verdict:
    """Decide disagreeability straight from the definition over every lattice element.

    With s states reachable from A, a word beta with |beta| <= s that survives s + 1 powers
    revisits a range set, after which the language stays {beta^n} forever.
    """
    limits = limits or DEFAULT_LIMITS
    if len(atoms) > limits.bruteforce_atom_cap:
        raise CapExceededError("bruteforce_atom_cap", limits.bruteforce_atom_cap, len(atoms))

    for element in lattice_elements(atoms):
        if not element:
            continue
        A = atoms.vertex_set(element)
        s = len(build_range_automaton(g, [A], limits).states)
        forced = _forced_word(g, A, s * (s + 1))
        for k in range(1, s + 1):
            if k * (s + 1) > len(forced):
                break
            beta = forced[:k]
            if all(forced[: k * n] == beta * n for n in range(1, s + 2)):
                return Verdict(
                    False,
                    DisagreeWitness(A, beta),
                    reason=f"L(A E^(|beta| n)) = {{beta^n}} for A={g.names(A)}",
                )
    return Verdict(True)


def strongly_cofinal_bruteforce(
    g: LabeledGraph,
    atoms: AtomTable,
    limits: AnalysisLimits | None = None,
) -> Verdict:
    """Quantify directly over generalized vertices [v]_l for l up to the stabilization level."""
    automaton, _ = closure_automaton(g, limits)
    graph = automaton.as_multidigraph()

    classes: list[tuple[int, VertexSet]] = []
    seen: set[int] = set()
    for level in range(1, atoms.stabilization_level + 1):
        for cls in atoms.partition_at(level):
            if cls.mask not in seen:
                seen.add(cls.mask)
                classes.append((level, cls))

    for level, cls in classes:
        seeds = [image for label in g.alphabet if (image := g.image(cls, label))]
        covered = build_range_automaton(g, seeds, limits).union() if seeds else VertexSet()
        escaping = [k for k, state in enumerate(automaton.states) if not state.issubset(covered)]
        sub = graph.subgraph(escaping)
        reachable: set[int] = set()
        for seed in automaton.seeds:
            if seed in sub:
                reachable |= {seed} | nx.descendants(sub, seed)
        for component in nx.strongly_connected_components(sub.subgraph(reachable)):
            node = next(iter(component))
            if len(component) > 1 or sub.has_edge(node, node):
                names = g.names(cls)
                return Verdict(False, reason=f"an infinite run escapes the coverage of level-{level} class {names}")
    return Verdict(True)
