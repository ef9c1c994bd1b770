from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, fields
from typing import Any, Literal

from .conditions import LoopRecord, SimplicityReport, classify_loops, simplicity_verdict
from .limits import DEFAULT_LIMITS, AnalysisLimits
from .models import LabeledGraph, format_word
from .verdict import (
    CofinalWitness,
    CycleNoExit,
    DisagreeWitness,
    DomainFail,
    ProperHS,
    Verdict,
)

ReportFormat = Literal["json", "text"]


@dataclass(frozen=True)
class AnalysisReport:
    graph: dict[str, Any]
    atoms: dict[str, Any]
    validation: dict[str, Any]
    disagreeable: bool
    strongly_cofinal: bool
    cycles_without_exit: list[dict[str, Any]]
    proper_hereditary_saturated: bool
    domain_condition: bool
    simple: bool
    condition_c: bool
    consistent: bool
    witnesses: dict[str, Any]
    loops: dict[str, Any]
    timing: dict[str, float]

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AnalysisReport:
        missing = [f.name for f in fields(cls) if f.name not in data]
        if missing:
            raise ValueError(f"report is missing keys: {', '.join(missing)}")
        return cls(**{f.name: data[f.name] for f in fields(cls)})


def _cycle_dict(g: LabeledGraph, cycle: CycleNoExit) -> dict[str, Any]:
    return {"word": format_word(cycle.word, g.alphabet), "set": g.names(cycle.vertex_set)}


def _witness_dict(g: LabeledGraph, verdict: Verdict) -> dict[str, Any] | None:
    witness = verdict.witness
    if isinstance(witness, DisagreeWitness):
        return {"set": g.names(witness.vertex_set), "word": format_word(witness.word, g.alphabet)}
    if isinstance(witness, CofinalWitness):
        return {
            "atom": g.names(witness.atom),
            "stem": format_word(witness.stem, g.alphabet),
            "cycle": format_word(witness.cycle, g.alphabet),
        }
    if isinstance(witness, ProperHS):
        return {"top": g.names(witness.top), "atoms": [g.names(atom) for atom in witness.atoms]}
    if isinstance(witness, DomainFail):
        return {"word": format_word(witness.word, g.alphabet)}
    return None


def _loop_dict(g: LabeledGraph, loop: LoopRecord) -> dict[str, Any]:
    return {
        "word": format_word(loop.word, g.alphabet),
        "set": g.names(loop.vertex_set),
        "exits": list(loop.exits),
    }


def build_report(
    g: LabeledGraph,
    result: SimplicityReport,
    loops: list[LoopRecord],
    max_loop_len: int,
    elapsed_seconds: float,
) -> AnalysisReport:
    cycles = [_cycle_dict(g, cycle) for cycle in result.cycles_without_exit]
    return AnalysisReport(
        graph={
            "vertices": len(g.vertices),
            "edges": len(g.edges),
            "labels": len(g.alphabet),
            "trivially_labeled": g.is_trivially_labeled,
        },
        atoms={
            "atoms": [g.names(atom) for atom in result.atoms.atoms],
            "stabilization_level": result.atoms.stabilization_level,
        },
        validation={
            "in_scope": result.validation.in_scope,
            "checks": {check.name: check.passed for check in result.validation.checks},
        },
        disagreeable=result.disagreeable.holds,
        strongly_cofinal=result.strongly_cofinal.holds,
        cycles_without_exit=cycles,
        proper_hereditary_saturated=result.proper_hereditary_saturated.holds,
        domain_condition=result.domain_condition.holds,
        simple=result.simple,
        condition_c=result.condition_c,
        consistent=result.consistent,
        witnesses={
            "disagreeable": _witness_dict(g, result.disagreeable),
            "strongly_cofinal": _witness_dict(g, result.strongly_cofinal),
            "cycle_without_exit": cycles[0] if cycles else None,
            "proper_hereditary_saturated": _witness_dict(g, result.proper_hereditary_saturated),
            "domain_condition": _witness_dict(g, result.domain_condition),
        },
        loops={
            "max_len": max_loop_len,
            "records": [_loop_dict(g, loop) for loop in loops],
        },
        timing={"analysis_seconds": round(elapsed_seconds, 6)},
    )


def default_loop_len(atom_count: int, limits: AnalysisLimits) -> int:
    return max(1, min(2 * atom_count, limits.loop_max_len_cap))


def analyze(
    g: LabeledGraph,
    limits: AnalysisLimits | None = None,
    max_loop_len: int | None = None,
) -> AnalysisReport:
    limits = limits or DEFAULT_LIMITS
    started = time.perf_counter()
    result = simplicity_verdict(g, limits)
    loop_len = max_loop_len if max_loop_len is not None else default_loop_len(len(result.atoms), limits)
    loops = classify_loops(g, result.atoms, loop_len, limits)
    return build_report(g, result, loops, loop_len, time.perf_counter() - started)


def _set_text(names: list[str]) -> str:
    return "{" + ",".join(names) + "}"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_text(report: AnalysisReport) -> str:
    graph = report.graph
    witnesses = report.witnesses
    lines = [
        f"graph: {graph['vertices']} vertices, {graph['edges']} edges, {graph['labels']} labels"
        + (" (trivial labeling)" if graph["trivially_labeled"] else ""),
        f"atoms (level {report.atoms['stabilization_level']}): "
        + " ".join(_set_text(atom) for atom in report.atoms["atoms"]),
        "validation: " + ("in scope" if report.validation["in_scope"] else "outside theorem scope"),
    ]

    disagree = witnesses["disagreeable"]
    lines.append(
        f"disagreeable: {_yes(report.disagreeable)}"
        + (f"  witness: set={_set_text(disagree['set'])} word={disagree['word']}" if disagree else "")
    )
    cofinal = witnesses["strongly_cofinal"]
    lines.append(
        f"strongly cofinal: {_yes(report.strongly_cofinal)}"
        + (
            f"  witness: atom={_set_text(cofinal['atom'])} run={cofinal['stem']}({cofinal['cycle']})^w"
            if cofinal
            else ""
        )
    )
    cycles = ", ".join(f"{c['word']}@{_set_text(c['set'])}" for c in report.cycles_without_exit)
    lines.append(f"cycles without exit: {cycles or 'none'}")
    family = witnesses["proper_hereditary_saturated"]
    lines.append(
        f"proper hereditary saturated: {_yes(report.proper_hereditary_saturated)}"
        + (f"  witness: top={_set_text(family['top'])}" if family else "")
    )
    lines.append(f"domain condition: {_yes(report.domain_condition)}")
    lines.append(f"condition (c): {_yes(report.condition_c)}")
    lines.append(f"simple: {_yes(report.simple)}")
    lines.append(f"consistent: {_yes(report.consistent)}")

    loops = report.loops
    lines.append(f"loops (|word| <= {loops['max_len']}): {len(loops['records'])}")
    for loop in loops["records"]:
        exits = ",".join(loop["exits"]) or "no exit"
        lines.append(f"  {loop['word']}@{_set_text(loop['set'])}  exits: {exits}")
    lines.append(f"analysis time: {report.timing['analysis_seconds']:.3f}s")
    return "\n".join(lines)


def emit_report(report: AnalysisReport, fmt: ReportFormat = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2)
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unsupported report format: {fmt}")
