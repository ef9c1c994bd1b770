from __future__ import annotations

import logging
from collections import deque
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Literal

import networkx as nx

from .errors import CapExceededError
from .limits import DEFAULT_LIMITS, AnalysisLimits
from .models import LabeledGraph, VertexSet, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RangeAutomaton:
    """Deterministic subset automaton ``S --a--> r(S, a)`` over nonempty vertex sets."""

    states: tuple[VertexSet, ...]
    transitions: Mapping[tuple[int, str], int]
    seeds: tuple[int, ...]

    def successors(self, state_index: int, alphabet: Sequence[str]) -> list[tuple[str, int]]:
        return [
            (label, self.transitions[(state_index, label)])
            for label in alphabet
            if (state_index, label) in self.transitions
        ]

    def union(self) -> VertexSet:
        mask = 0
        for state in self.states:
            mask |= state.mask
        return VertexSet(mask)

    def as_multidigraph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(len(self.states)))
        for (source, label), target in self.transitions.items():
            graph.add_edge(source, target, key=label, label=label)
        return graph


def build_range_automaton(
    g: LabeledGraph,
    seeds: Sequence[VertexSet],
    limits: AnalysisLimits | None = None,
) -> RangeAutomaton:
    limits = limits or DEFAULT_LIMITS
    states: list[VertexSet] = []
    index: dict[int, int] = {}
    transitions: dict[tuple[int, str], int] = {}
    queue: deque[int] = deque()

    def _add(state: VertexSet) -> int:
        if state.mask in index:
            return index[state.mask]
        if len(states) >= limits.automaton_state_cap:
            raise CapExceededError("automaton_state_cap", limits.automaton_state_cap)
        index[state.mask] = len(states)
        states.append(state)
        queue.append(index[state.mask])
        return index[state.mask]

    seed_indices: list[int] = []
    for seed in seeds:
        if not seed:
            raise ValueError("range automaton seeds must be nonempty")
        seed_index = _add(seed)
        if seed_index not in seed_indices:
            seed_indices.append(seed_index)

    while queue:
        current = queue.popleft()
        for label in g.alphabet:
            target = g.image(states[current], label)
            if target:
                transitions[(current, label)] = _add(target)

    return RangeAutomaton(states=tuple(states), transitions=transitions, seeds=tuple(seed_indices))


@dataclass(frozen=True)
class ForcedTrajectory:
    sets: tuple[VertexSet, ...]
    letters: Word
    shape: Literal["finite", "lasso"]
    p: int | None = None
    q: int | None = None

    @property
    def cycle_sets(self) -> tuple[VertexSet, ...]:
        if self.shape != "lasso" or self.p is None:
            return ()
        return self.sets[self.p:]

    @property
    def cycle_word(self) -> Word:
        if self.shape != "lasso" or self.p is None:
            return ()
        return self.letters[self.p:]


def forced_trajectory(
    g: LabeledGraph,
    A0: VertexSet,
    limits: AnalysisLimits | None = None,
) -> ForcedTrajectory:
    """Follow the unique out-letter from ``A0`` until it branches or a set repeats."""
    if not A0:
        raise ValueError("forced_trajectory requires a nonempty set")
    limits = limits or DEFAULT_LIMITS
    sets = [A0]
    letters: list[str] = []
    seen = {A0.mask: 0}

    while True:
        current = sets[-1]
        labels = g.out_labels(current)
        if len(labels) != 1:
            return ForcedTrajectory(tuple(sets), tuple(letters), "finite")
        label = labels[0]
        following = g.image(current, label)
        letters.append(label)
        if following.mask in seen:
            p = seen[following.mask]
            return ForcedTrajectory(tuple(sets), tuple(letters), "lasso", p, len(sets) - p)
        if len(sets) >= limits.automaton_state_cap:
            raise CapExceededError("automaton_state_cap", limits.automaton_state_cap)
        seen[following.mask] = len(sets)
        sets.append(following)


def primitive_root(word: Sequence[str]) -> Word:
    word = tuple(word)
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def purely_periodic_forced_word(
    g: LabeledGraph,
    A0: VertexSet,
    limits: AnalysisLimits | None = None,
) -> tuple[VertexSet, Word] | None:
    trajectory = forced_trajectory(g, A0, limits)
    if trajectory.shape != "lasso" or trajectory.p is None:
        return None
    return trajectory.sets[trajectory.p], primitive_root(trajectory.cycle_word)


def _least_covering_prefix(values: Sequence[int], cycle_start: int) -> int:
    """Least N >= 1 such that every later value, including the repeating cycle, lies in the union of the first N."""
    # values[0] is index 1; the tail from cycle_start (1-based) repeats forever
    cycle_union = 0
    for mask in values[cycle_start - 1:]:
        cycle_union |= mask
    prefix_union = 0
    for n in range(1, len(values) + 1):
        prefix_union |= values[n - 1]
        tail_union = cycle_union
        for mask in values[n:]:
            tail_union |= mask
        if tail_union & ~prefix_union == 0:
            return n
    return len(values)


def range_stabilization(g: LabeledGraph, A0: VertexSet, beta: Sequence[str]) -> int:
    """Least N with r(A0, x[1..N+k]) inside the union of r(A0, x[1..j]), j <= N, for x = beta repeated forever."""
    if not A0:
        raise ValueError("range_stabilization requires a nonempty set")
    beta = tuple(beta)
    if not beta:
        raise ValueError("range_stabilization requires a nonempty word")
    period = len(beta)

    values: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    current = A0
    j = 0
    while True:
        j += 1
        current = g.image(current, beta[(j - 1) % period])
        if not current and j <= period:
            raise ValueError(f"word is not realizable from the set: range empty after {j} letters")
        key = (current.mask, j % period)
        if key in seen:
            return _least_covering_prefix(values, seen[key])
        seen[key] = j
        values.append(current.mask)


def power_stabilization(
    g: LabeledGraph,
    A0: VertexSet,
    beta: Sequence[str],
) -> tuple[int, VertexSet]:
    """Least N0 with r(A0, beta^(N0+k)) inside the union of r(A0, beta^j), j <= N0, plus that union."""
    if not A0:
        raise ValueError("power_stabilization requires a nonempty set")
    beta = tuple(beta)
    if not beta:
        raise ValueError("power_stabilization requires a nonempty word")

    values: list[int] = []
    seen: dict[int, int] = {}
    current = g.range_of(A0, beta)
    if not current:
        raise ValueError("word is not realizable from the set")
    j = 1
    while current.mask not in seen:
        seen[current.mask] = j
        values.append(current.mask)
        current = g.range_of(current, beta)
        j += 1

    n0 = _least_covering_prefix(values, seen[current.mask])
    union = 0
    for mask in values[:n0]:
        union |= mask
    return n0, VertexSet(union)
