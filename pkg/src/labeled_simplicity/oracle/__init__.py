from .bruteforce import disagreeable_bruteforce, strongly_cofinal_bruteforce
from .classical import condition_L_graph, graph_cofinal
from .cross_check import CheckResult, ConsistencyReport, cross_check
from .dump import ViolationLogger
from .fuzz import FuzzParams, FuzzStats, fuzz_graphs

__all__ = [
    "disagreeable_bruteforce",
    "strongly_cofinal_bruteforce",
    "condition_L_graph",
    "graph_cofinal",
    "CheckResult",
    "ConsistencyReport",
    "cross_check",
    "ViolationLogger",
    "FuzzParams",
    "FuzzStats",
    "fuzz_graphs",
]
