"""
Command-line entry point for the payload traffic-engineering engine.

    solve     optimize routing for a scenario and write the routing table
    run       simulate a scenario (solving inline when no routing table is given)
    sweep     run one scenario over a list of values of one dimension
    validate  check a scenario file
    preset    write a reference scenario file

Exit codes: 0 success, 2 parse error, 3 validation error, 4 infeasible,
5 runtime failure.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence
from dotenv import load_dotenv

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))
load_dotenv()

from config import LOG_LEVEL, RESULTS_DB_URL, WORKERS, REFERENCE_LAMBDAS_PPS
from src.database import ResultsDatabase
from src.parsers.routing_file import load_routing_table, save_routing_table, format_routing_table
from src.parsers.scenario_file import load_scenario, save_scenario, serialize_scenario
from src.pipeline.orchestrator import PipelineOrchestrator
from src.pipeline.reporting import (
    RUN_COLUMNS,
    SWEEP_COLUMNS,
    format_summary,
    reports_to_json,
    run_rows,
    sweep_row,
    to_csv,
)
from src.scenario.presets import baseline_single, reference_preset
from src.scenario.validation import validate
from src.schemas.models import SweepSpec
from src.utils.errors import ConfigParseError, Infeasible

logger = logging.getLogger("payload_te")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_INFEASIBLE = 4
EXIT_RUNTIME = 5


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the process exit code."""
    if isinstance(error, (ConfigParseError, OSError)):
        return EXIT_PARSE
    if isinstance(error, Infeasible):
        return EXIT_INFEASIBLE
    if isinstance(error, ValueError):
        return EXIT_VALIDATION
    return EXIT_RUNTIME


def _orchestrator(args) -> PipelineOrchestrator:
    db_url = getattr(args, "db", None) or RESULTS_DB_URL
    results_db = ResultsDatabase(db_url) if db_url else None
    return PipelineOrchestrator(results_db=results_db, workers=getattr(args, "workers", None) or WORKERS)


def _emit(text: str, out: Optional[str], append: bool = False) -> None:
    if out is None:
        print(text, end="")
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "a" if append else "w", encoding="utf-8") as f:
        f.write(text)
    print(f"\nResults saved to: {path}")


def cmd_solve(args) -> int:
    scenario = load_scenario(args.config)
    outcome = _orchestrator(args).solve(scenario)

    if args.out:
        save_routing_table(outcome.table, args.out)
        print(f"Routing table saved to: {args.out}")
    else:
        print(format_routing_table(outcome.table), end="")

    summary = outcome.summary
    if args.format == "json":
        print(summary.model_dump_json(indent=2))
    else:
        print("=" * 80)
        print(f"Solver report: {scenario.name}")
        print("=" * 80)
        print(f"z* (min residual): {summary.objective_bps:.6g} b/s")
        print(f"Min-residual edge: {summary.min_residual_edge[0]}->{summary.min_residual_edge[1]}")
        print(f"LP variables: {summary.variables}")
        for u, v, residual in summary.residuals:
            print(f"  {u}->{v}: {residual:.6g} b/s")
    return EXIT_OK


def cmd_run(args) -> int:
    scenario = load_scenario(args.config)
    routing = load_routing_table(args.routing) if args.routing else None
    report = _orchestrator(args).run(scenario, routing=routing, seed=args.seed, reps=args.reps)

    print("=" * 80)
    print(format_summary(report))
    print("=" * 80)
    if args.format == "json":
        _emit(reports_to_json([report]), args.out)
    else:
        appending = args.out is not None and Path(args.out).exists() and Path(args.out).stat().st_size > 0
        _emit(to_csv(run_rows(report), RUN_COLUMNS, header=not appending), args.out, append=appending)
    return EXIT_OK


def cmd_sweep(args) -> int:
    base = load_scenario(args.config)
    values = [float(item) for item in args.values.split(",") if item.strip()] if args.values else []
    if not values and args.dimension == "lambda":
        values = list(REFERENCE_LAMBDAS_PPS)
    spec = SweepSpec(base=base, dimension=args.dimension, values=values, output_path=args.out)
    reports = _orchestrator(args).sweep(spec, seed=args.seed, reps=args.reps)

    failed = sum(1 for report in reports if report.error is not None)
    print("=" * 80)
    print(f"Sweep over {spec.dimension}: {len(reports)} points, {failed} failed")
    print("=" * 80)
    if args.format == "json":
        _emit(reports_to_json(reports), spec.output_path)
    else:
        _emit(to_csv((sweep_row(report) for report in reports), SWEEP_COLUMNS), spec.output_path)
    return EXIT_OK


def cmd_validate(args) -> int:
    scenario = load_scenario(args.config)
    report = validate(scenario)
    if args.format == "json":
        print(json.dumps({"ok": report.ok, **report.model_dump()}, indent=2))
    else:
        for violation in report.violations:
            print(f"violation: {violation}")
        for warning in report.warnings:
            print(f"warning: {warning}")
        print("OK" if report.ok else f"{len(report.violations)} violation(s)")
    return EXIT_OK if report.ok else EXIT_VALIDATION


def cmd_preset(args) -> int:
    scenario = reference_preset(args.buffer, args.link_rate, args.lam, allow_custom_lambda=args.custom_lambda)
    if args.mode == "baseline":
        scenario = baseline_single(args.multiplier, scenario)
    if args.out:
        save_scenario(scenario, args.out)
        print(f"Scenario saved to: {args.out}")
    else:
        print(serialize_scenario(scenario), end="")
    return EXIT_OK


def build_parser():
    import argparse

    parser = argparse.ArgumentParser(description="Payload traffic engineering: max-min LP routing and queueing simulation")
    commands = parser.add_subparsers(dest="command", required=True)

    def common(sub, with_routing: bool = False, with_run: bool = False):
        sub.add_argument("--config", required=True, help="Scenario file")
        if with_routing:
            sub.add_argument("--routing", help="Routing table written by 'solve' (solved inline when omitted)")
        if with_run:
            sub.add_argument("--seed", type=int, help="Base seed (overrides the scenario seed)")
            sub.add_argument("--reps", type=int, help="Replication count (overrides the scenario reps)")
            sub.add_argument("--db", help="SQLAlchemy URL of the results store")
            sub.add_argument("--workers", type=int, help="Process pool size for replications")
        sub.add_argument("--out", help="Output file (stdout when omitted)")
        sub.add_argument("--format", choices=("csv", "json"), default="csv", help="Output format")

    common(commands.add_parser("solve", help="Optimize routing and write the routing table"))
    common(commands.add_parser("run", help="Simulate a scenario"), with_routing=True, with_run=True)
    sweep = commands.add_parser("sweep", help="Run a scenario over values of one dimension")
    common(sweep, with_run=True)
    sweep.add_argument(
        "--dimension",
        choices=("lambda", "buffer", "link_rate", "baseline_multiplier"),
        default="lambda",
        help="Swept dimension",
    )
    sweep.add_argument("--values", help="Comma-separated values (reference arrival rates for a lambda sweep)")
    common(commands.add_parser("validate", help="Check a scenario file"))

    preset = commands.add_parser("preset", help="Write a reference scenario file")
    preset.add_argument("--buffer", type=int, default=1_000_000, help="Buffer size in packets")
    preset.add_argument("--link-rate", type=float, default=10e9, help="Link rate in bits/s")
    preset.add_argument("--lam", type=float, default=30_000.0, help="Per-commodity arrival rate in packets/s")
    preset.add_argument("--custom-lambda", action="store_true", help="Accept arrival rates outside the reference sweep")
    preset.add_argument("--mode", choices=("proposed", "baseline"), default="proposed")
    preset.add_argument("--multiplier", type=int, default=2, help="Baseline service-rate multiplier")
    preset.add_argument("--out", help="Scenario file to write (stdout when omitted)")
    return parser


COMMANDS = {
    "solve": cmd_solve,
    "run": cmd_run,
    "sweep": cmd_sweep,
    "validate": cmd_validate,
    "preset": cmd_preset,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    logging.basicConfig(level=LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except Exception as e:
        code = exit_code_for(e)
        print(f"Error: {e}", file=sys.stderr)
        if code == EXIT_RUNTIME:
            logger.exception("%s failed", args.command)
        return code


if __name__ == "__main__":
    sys.exit(main())
