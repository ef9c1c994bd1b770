from __future__ import annotations

import logging
import random
import string
from collections.abc import Iterator
from dataclasses import dataclass

from ..graph import build_graph
from ..lattice import is_weakly_left_resolving, stable_partition
from ..limits import AnalysisLimits
from ..models import Edge, LabeledGraph

logger = logging.getLogger(__name__)

_ATTEMPTS_PER_GRAPH = 50


@dataclass(frozen=True)
class FuzzParams:
    max_vertices: int
    max_labels: int
    edge_density: float = 0.3
    count: int = 1
    seed: int = 0
    trivial_labeling: bool = False

    def __post_init__(self) -> None:
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be >= 1")
        if self.max_labels < 1:
            raise ValueError("max_labels must be >= 1")
        if not 0.0 <= self.edge_density <= 1.0:
            raise ValueError("edge_density must be between 0 and 1")
        if self.count < 1:
            raise ValueError("count must be >= 1")


@dataclass
class FuzzStats:
    attempts: int = 0
    emitted: int = 0
    discarded_non_wlr: int = 0


def _label_names(count: int) -> list[str]:
    return list(string.ascii_lowercase[:count]) if count <= 26 else [f"l{i}" for i in range(count)]


def _random_graph(rng: random.Random, params: FuzzParams) -> LabeledGraph:
    vertex_count = rng.randint(1, params.max_vertices)
    label_count = rng.randint(1, params.max_labels)
    labels = _label_names(label_count)
    vertices = [f"v{i}" for i in range(vertex_count)]

    edges: list[Edge] = []
    for source in vertices:
        for target in vertices:
            if rng.random() < params.edge_density:
                edges.append(Edge(source, rng.choice(labels), target))

    out_degree = {v: 0 for v in vertices}
    in_degree = {v: 0 for v in vertices}
    for edge in edges:
        out_degree[edge.source] += 1
        in_degree[edge.target] += 1
    fresh = _label_names(label_count + 1)[-1]
    for v in vertices:
        # a self-loop repairs both a sink and a source at v
        if out_degree[v] == 0 or in_degree[v] == 0:
            edges.append(Edge(v, rng.choice(labels + [fresh]), v))

    if params.trivial_labeling:
        edges = [Edge(e.source, f"e{i + 1}", e.target) for i, e in enumerate(edges)]
    return build_graph(vertices, edges)


def fuzz_graphs(
    params: FuzzParams,
    stats: FuzzStats | None = None,
    limits: AnalysisLimits | None = None,
) -> Iterator[LabeledGraph]:
    """Random graphs without sinks or sources that are weakly left-resolving; deterministic per seed."""
    stats = stats if stats is not None else FuzzStats()
    rng = random.Random(params.seed)
    max_attempts = params.count * _ATTEMPTS_PER_GRAPH

    while stats.emitted < params.count and stats.attempts < max_attempts:
        stats.attempts += 1
        g = _random_graph(rng, params)
        atoms = stable_partition(g, limits)
        if not is_weakly_left_resolving(g, atoms).holds:
            stats.discarded_non_wlr += 1
            continue
        stats.emitted += 1
        yield g

    if stats.emitted < params.count:
        logger.warning(
            "Fuzz attempt budget exhausted emitted=%s requested=%s attempts=%s",
            stats.emitted,
            params.count,
            stats.attempts,
        )
