from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..conditions import classify_loops, simplicity_verdict
from ..errors import CapExceededError
from ..graph import format_graph, labeled_paths
from ..limits import DEFAULT_LIMITS, AnalysisLimits
from ..models import LabeledGraph
from .bruteforce import disagreeable_bruteforce, strongly_cofinal_bruteforce
from .classical import condition_L_graph, graph_cofinal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    reason: str = "ok"
    skipped: bool = False


@dataclass(frozen=True)
class ConsistencyReport:
    graph_text: str
    outcomes: dict[str, bool]
    checks: tuple[CheckResult, ...]
    observations: tuple[str, ...] = field(default_factory=tuple)

    @property
    def violations(self) -> tuple[CheckResult, ...]:
        return tuple(check for check in self.checks if not check.skipped and not check.passed)

    @property
    def ok(self) -> bool:
        return not self.violations


def _skipped(name: str, reason: str) -> CheckResult:
    return CheckResult(name, True, reason, skipped=True)


def cross_check(g: LabeledGraph, limits: AnalysisLimits | None = None) -> ConsistencyReport:
    limits = limits or DEFAULT_LIMITS
    report = simplicity_verdict(g, limits)
    atoms = report.atoms
    disagreeable = report.disagreeable.holds
    checks: list[CheckResult] = []

    try:
        brute = disagreeable_bruteforce(g, atoms, limits)
    except CapExceededError as exc:
        checks.append(_skipped("bruteforce_agreement", str(exc)))
    else:
        checks.append(
            CheckResult(
                "bruteforce_agreement",
                brute.holds == disagreeable,
                f"bruteforce={brute.holds} automaton={disagreeable}",
            )
        )

    cofinal_brute = strongly_cofinal_bruteforce(g, atoms, limits)
    checks.append(
        CheckResult(
            "strongly_cofinal_agreement",
            cofinal_brute.holds == report.strongly_cofinal.holds,
            f"generalized_vertices={cofinal_brute.holds} atoms={report.strongly_cofinal.holds}",
        )
    )

    max_len = min(2 * len(atoms), limits.loop_max_len_cap)
    exitless_loops = [loop for loop in classify_loops(g, atoms, max_len, limits) if not loop.has_exit]
    checks.append(
        CheckResult(
            "disagreeable_implies_loop_exits",
            not (disagreeable and exitless_loops),
            f"disagreeable={disagreeable} exitless_loops={len(exitless_loops)} max_len={max_len}",
        )
    )
    checks.append(
        CheckResult(
            "disagreeable_implies_no_exitless_cycle",
            not (disagreeable and report.cycles_without_exit),
            f"disagreeable={disagreeable} cycles={len(report.cycles_without_exit)}",
        )
    )

    bad_cycles = [
        cycle
        for cycle in report.cycles_without_exit
        if not cycle.vertex_set.issubset(g.range_of(cycle.vertex_set, cycle.word))
        or labeled_paths(g, cycle.vertex_set, len(cycle.word)) != {cycle.word}
    ]
    checks.append(
        CheckResult(
            "cycles_are_exitless_loops",
            not bad_cycles,
            f"bad_cycles={len(bad_cycles)}",
        )
    )

    if report.domain_condition.holds:
        checks.append(
            CheckResult(
                "main_theorem",
                report.simple == report.condition_c,
                f"simple={report.simple} condition_c={report.condition_c}",
            )
        )
    else:
        checks.append(_skipped("main_theorem", "domain condition fails"))

    condition_l = condition_L_graph(g)
    cofinal = graph_cofinal(g)
    if g.is_trivially_labeled:
        checks.append(
            CheckResult(
                "trivial_labeling_condition_l",
                disagreeable == condition_l,
                f"disagreeable={disagreeable} condition_l={condition_l}",
            )
        )
        checks.append(
            CheckResult(
                "trivial_labeling_simplicity",
                report.simple == (condition_l and cofinal),
                f"simple={report.simple} condition_l={condition_l} cofinal={cofinal}",
            )
        )
    else:
        checks.append(_skipped("trivial_labeling_condition_l", "labeling is not trivial"))
        checks.append(_skipped("trivial_labeling_simplicity", "labeling is not trivial"))

    observations: list[str] = []
    if report.condition_c and not report.simple:
        observations.append("condition_c_without_simple")

    outcomes = {
        "disagreeable": disagreeable,
        "strongly_cofinal": report.strongly_cofinal.holds,
        "cycles_without_exit": bool(report.cycles_without_exit),
        "proper_hereditary_saturated": report.proper_hereditary_saturated.holds,
        "domain_condition": report.domain_condition.holds,
        "simple": report.simple,
        "condition_c": report.condition_c,
        "condition_l": condition_l,
        "graph_cofinal": cofinal,
    }
    result = ConsistencyReport(format_graph(g), outcomes, tuple(checks), tuple(observations))
    for violation in result.violations:
        logger.error("Consistency violation check=%s reason=%s", violation.name, violation.reason)
    return result
