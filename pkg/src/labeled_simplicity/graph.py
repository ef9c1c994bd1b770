from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import GraphParseError
from .lattice import AtomTable, is_weakly_left_resolving
from .models import Edge, LabeledGraph, VertexSet, Word
from .verdict import ResolvingCounterexample

logger = logging.getLogger(__name__)


def build_graph(vertices: Iterable[str], edges: Iterable[Edge]) -> LabeledGraph:
    vertex_list = list(vertices)
    if not vertex_list:
        raise ValueError("graph must declare at least one vertex")
    seen_vertices: set[str] = set()
    for name in vertex_list:
        if name in seen_vertices:
            raise ValueError(f"duplicate vertex {name!r}")
        seen_vertices.add(name)

    edge_list = list(edges)
    seen_edges: set[Edge] = set()
    alphabet: list[str] = []
    for edge in edge_list:
        for endpoint in (edge.source, edge.target):
            if endpoint not in seen_vertices:
                raise ValueError(f"undeclared vertex {endpoint!r} in edge")
        if edge in seen_edges:
            raise ValueError(f"duplicate edge {edge.source} {edge.label} {edge.target}")
        seen_edges.add(edge)
        if edge.label not in alphabet:
            alphabet.append(edge.label)

    return LabeledGraph(
        vertices=tuple(vertex_list),
        edges=tuple(edge_list),
        alphabet=tuple(alphabet),
    )


def parse_graph(text: str) -> LabeledGraph:
    """Parse the line format: ``vertices: ...``, ``edge <src> <label> <dst>`` and ``#`` comments."""
    vertices: list[str] = []
    vertex_lines: dict[str, int] = {}
    edges: list[tuple[int, Edge]] = []
    edge_lines: dict[Edge, int] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if line.startswith("vertices:"):
            names = line[len("vertices:"):].split()
            if not names:
                raise GraphParseError("vertices line declares no vertices", line_no)
            for name in names:
                if name in vertex_lines:
                    raise GraphParseError(f"duplicate vertex {name!r}", line_no)
                vertex_lines[name] = line_no
                vertices.append(name)
            continue

        tokens = line.split()
        if tokens[0] == "edge":
            if len(tokens) != 4:
                raise GraphParseError("expected 'edge <src> <label> <dst>'", line_no)
            _, source, label, target = tokens
            if "." in label:
                raise GraphParseError(f"label {label!r} must not contain '.'", line_no)
            edge = Edge(source=source, label=label, target=target)
            if edge in edge_lines:
                raise GraphParseError(
                    f"duplicate edge {source} {label} {target} (first on line {edge_lines[edge]})",
                    line_no,
                )
            edge_lines[edge] = line_no
            edges.append((line_no, edge))
            continue

        raise GraphParseError(f"unrecognized declaration {tokens[0]!r}", line_no)

    if not vertices:
        raise GraphParseError("no vertices declared")

    for line_no, edge in edges:
        for endpoint in (edge.source, edge.target):
            if endpoint not in vertex_lines:
                raise GraphParseError(f"undeclared vertex {endpoint!r} in edge", line_no)

    return build_graph(vertices, (edge for _, edge in edges))


def format_graph(g: LabeledGraph) -> str:
    lines = [f"vertices: {' '.join(g.vertices)}"]
    lines.extend(f"edge {e.source} {e.label} {e.target}" for e in g.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    detail: str = "ok"
    counterexample: ResolvingCounterexample | None = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[ValidationCheck, ...]

    @property
    def in_scope(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> ValidationCheck:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def scope_message(self) -> str:
        failures = [check.detail for check in self.checks if not check.passed]
        return "; ".join(failures) if failures else "in scope"


def validate(g: LabeledGraph, atoms: AtomTable) -> ValidationReport:
    sinks = [v for v, degree in g.out_degrees().items() if degree == 0]
    sources = [v for v, degree in g.in_degrees().items() if degree == 0]
    wlr = is_weakly_left_resolving(g, atoms)

    checks = (
        ValidationCheck(
            "no_sinks",
            not sinks,
            "ok" if not sinks else f"has sinks: {' '.join(sinks)}",
        ),
        ValidationCheck(
            "no_sources",
            not sources,
            "ok" if not sources else f"has sources: {' '.join(sources)}",
        ),
        ValidationCheck(
            "weakly_left_resolving",
            wlr.holds,
            "ok" if wlr.holds else "not weakly left-resolving",
            wlr.witness if isinstance(wlr.witness, ResolvingCounterexample) else None,
        ),
        # finitely many vertices and edges make both automatic
        ValidationCheck("set_finite", True, "automatic for finite graphs"),
        ValidationCheck("receiver_set_finite", True, "automatic for finite graphs"),
    )
    report = ValidationReport(checks)
    if not report.in_scope:
        logger.info("Graph outside scope reason=%s", report.scope_message())
    return report


def extend_labeled_paths(
    g: LabeledGraph,
    frontier: Mapping[Word, VertexSet],
) -> dict[Word, VertexSet]:
    extended: dict[Word, VertexSet] = {}
    for word, reached in frontier.items():
        for label in g.out_labels(reached):
            extended[word + (label,)] = g.image(reached, label)
    return extended


def labeled_paths(g: LabeledGraph, A: VertexSet, n: int) -> set[Word]:
    if not A:
        raise ValueError("labeled_paths requires a nonempty vertex set")
    if n < 1:
        raise ValueError("path length must be >= 1")
    frontier: dict[Word, VertexSet] = {(): A}
    for _ in range(n):
        frontier = extend_labeled_paths(g, frontier)
    return set(frontier)
