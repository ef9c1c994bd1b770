from __future__ import annotations

import networkx as nx

from ..models import LabeledGraph


def underlying_graph(g: LabeledGraph) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(g.vertices)
    for edge in g.edges:
        graph.add_edge(edge.source, edge.target, key=edge.label)
    return graph


def _cyclic_components(graph: nx.MultiDiGraph) -> list[set[str]]:
    components = []
    for component in nx.strongly_connected_components(graph):
        node = next(iter(component))
        if len(component) > 1 or graph.has_edge(node, node):
            components.append(component)
    return components


def condition_L_graph(g: LabeledGraph) -> bool:
    """Every cycle of the underlying graph has an exit.

    A cycle without exit never leaves itself, so it is a whole strongly connected component
    in which every vertex emits exactly one edge.
    """
    graph = underlying_graph(g)
    for component in _cyclic_components(graph):
        if all(graph.out_degree(v) == 1 for v in component):
            return False
    return True


def graph_cofinal(g: LabeledGraph) -> bool:
    """Every vertex reaches every strongly connected component that carries an infinite path."""
    graph = underlying_graph(g)
    targets = [next(iter(component)) for component in _cyclic_components(graph)]
    for v in g.vertices:
        reachable = nx.descendants(graph, v) | {v}
        if any(t not in reachable for t in targets):
            return False
    return True
