from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from dataclasses import asdict
from pathlib import Path

from .config import Config, load_config
from .errors import CapExceededError, GraphError, OutsideTheoremScopeError
from .graph import parse_graph
from .lattice import stable_partition
from .models import LabeledGraph
from .oracle import FuzzParams, FuzzStats, ViolationLogger, cross_check, fuzz_graphs
from .report import analyze, emit_report
from .verify import verify_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OUT_OF_SCOPE = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from exc
    if number < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return number


def _density(value: str) -> float:
    try:
        number = float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a number, got {value!r}") from exc
    if not 0.0 <= number <= 1.0:
        raise argparse.ArgumentTypeError("must be between 0 and 1")
    return number


def _read_graph(path: str) -> LabeledGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def run_analyze(args: argparse.Namespace, config: Config) -> int:
    limits = config.limits()
    try:
        g = _read_graph(args.file)
        report = analyze(g, limits, args.max_loop_len)
    except OutsideTheoremScopeError as exc:
        print(f"outside theorem scope ({exc.report.scope_message()})")
        return EXIT_OUT_OF_SCOPE
    except (OSError, GraphError, CapExceededError) as exc:
        logger.error("Analysis failed file=%s error=%s", args.file, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    print(emit_report(report, "json" if args.json else "text"))

    if args.verify_witness:
        failures = verify_report(g, report, limits)
        for failure in failures:
            print(f"witness check failed: {failure}", file=sys.stderr)
        if failures:
            return EXIT_ERROR
    return EXIT_OK


def run_atoms(args: argparse.Namespace, config: Config) -> int:
    try:
        g = _read_graph(args.file)
        atoms = stable_partition(g, config.limits())
    except (OSError, GraphError, CapExceededError) as exc:
        logger.error("Atom computation failed file=%s error=%s", args.file, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    print(f"stabilization level: {atoms.stabilization_level}")
    for atom in atoms.atoms:
        print("{" + ",".join(g.names(atom)) + "}")
    return EXIT_OK


def run_fuzz(args: argparse.Namespace, config: Config) -> int:
    limits = config.limits()
    params = FuzzParams(
        max_vertices=args.max_vertices,
        max_labels=args.max_labels,
        edge_density=args.edge_density if args.edge_density is not None else config.fuzz_edge_density,
        count=args.n,
        seed=args.seed,
        trivial_labeling=args.trivial_labeling,
    )
    out_dir = args.out or config.fuzz_out_dir

    stats = FuzzStats()
    outcome_counts: Counter[str] = Counter()
    skipped_counts: Counter[str] = Counter()
    observation_counts: Counter[str] = Counter()
    checked = 0
    capped = 0
    violations = 0
    dump: ViolationLogger | None = None

    for index, g in enumerate(fuzz_graphs(params, stats, limits)):
        try:
            result = cross_check(g, limits)
        except CapExceededError as exc:
            capped += 1
            logger.debug("Fuzz graph skipped index=%s reason=%s", index, exc)
            continue
        checked += 1
        outcome_counts.update(name for name, value in result.outcomes.items() if value)
        skipped_counts.update(check.name for check in result.checks if check.skipped)
        observation_counts.update(result.observations)

        if result.ok:
            continue
        violations += 1
        dump = dump or ViolationLogger(out_dir)
        graph_path = dump.dump_graph(f"violation_seed{params.seed}_{index}", result.graph_text)
        dump.append(
            {
                "seed": params.seed,
                "index": index,
                "graph_path": str(graph_path),
                "graph": result.graph_text,
                "violations": [asdict(check) for check in result.violations],
                "outcomes": result.outcomes,
            }
        )
        logger.error("Fuzz violation index=%s dumped=%s", index, graph_path)

    summary = {
        "requested": params.count,
        "checked": checked,
        "capped": capped,
        "attempts": stats.attempts,
        "discarded_non_wlr": stats.discarded_non_wlr,
        "violations": violations,
        "outcome_counts": dict(sorted(outcome_counts.items())),
        "skipped_checks": dict(sorted(skipped_counts.items())),
        "observations": dict(sorted(observation_counts.items())),
    }
    print(json.dumps(summary, indent=2))
    logger.info(
        "Fuzz finished checked=%s violations=%s discarded_non_wlr=%s",
        checked,
        violations,
        stats.discarded_non_wlr,
    )
    return EXIT_OK if violations == 0 else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="labeled-simplicity",
        description="Decide simplicity of the C*-algebra of a finite labeled graph",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    analyze_parser = subparsers.add_parser("analyze", help="Run every condition and report the verdict")
    analyze_parser.add_argument("file", help="Graph file in the line format")
    analyze_parser.add_argument("--json", action="store_true", help="Emit the structured JSON report")
    analyze_parser.add_argument(
        "--verify-witness",
        action="store_true",
        help="Re-check every witness against the raw definitions",
    )
    analyze_parser.add_argument(
        "--max-loop-len",
        type=_positive_int,
        default=None,
        help="Longest loop word to classify, at most LOOP_MAX_LEN_CAP (default: twice the atom count, capped)",
    )
    analyze_parser.set_defaults(handler=run_analyze)

    atoms_parser = subparsers.add_parser("atoms", help="Print the atoms and the stabilization level")
    atoms_parser.add_argument("file", help="Graph file in the line format")
    atoms_parser.set_defaults(handler=run_atoms)

    fuzz_parser = subparsers.add_parser("fuzz", help="Cross-check random graphs against the oracles")
    fuzz_parser.add_argument("--n", type=_positive_int, required=True, help="Number of graphs to check")
    fuzz_parser.add_argument("--max-vertices", type=_positive_int, required=True, help="Largest vertex count")
    fuzz_parser.add_argument("--max-labels", type=_positive_int, default=3, help="Largest alphabet size")
    fuzz_parser.add_argument("--seed", type=int, default=0, help="Random seed")
    fuzz_parser.add_argument("--out", default=None, help="Directory for violation dumps")
    fuzz_parser.add_argument("--edge-density", type=_density, default=None, help="Edge probability per vertex pair")
    fuzz_parser.add_argument(
        "--trivial-labeling",
        action="store_true",
        help="Give every edge its own label",
    )
    fuzz_parser.set_defaults(handler=run_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        config = load_config()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    logging.basicConfig(
        level=config.logging_level(),
        format="%(asctime)s %(levelname)s %(name)s - %(message)s",
        stream=sys.stderr,
    )

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    return args.handler(args, config)


if __name__ == "__main__":
    raise SystemExit(main())
