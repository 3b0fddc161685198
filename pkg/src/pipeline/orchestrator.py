"""
Pipeline orchestrator that coordinates the whole workflow.
Manages the flow: Validation -> Path enumeration -> Max-min LP -> Routing table -> Simulation -> Report
"""

import logging
from dataclasses import dataclass
from typing import Optional

from src.database import ResultsDatabase
from src.network.pathgen import enumerate_all
from src.network.topology import PayloadGraph
from src.optimization.maxmin_lp import RoutingSolution, flows_to_routing_table, solve_maxmin, summarize
from src.parsers.routing_file import canonical_routing_table
from src.scenario.assembly import build_commodities, build_graph
from src.scenario.validation import ensure_valid
from src.schemas.models import MetricsReport, RoutingTable, Scenario, SolverSummary, SweepSpec
from src.simulation.queuesim import run_replications
from src.utils.errors import PayloadTEError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveOutcome:
    """Everything ``solve`` produces for one scenario."""
    graph: PayloadGraph
    solution: RoutingSolution
    table: RoutingTable
    summary: SolverSummary


def apply_sweep_value(base: Scenario, dimension: str, value: float) -> Scenario:
    """The base scenario with one swept dimension set to ``value``."""
    if dimension == "lambda":
        update = {"lambda_pps": float(value), "rates_pps": None}
    elif dimension == "buffer":
        update = {"buffer_pkts": int(value)}
    elif dimension == "link_rate":
        update = {"link_rate_bps": float(value)}
    elif dimension == "baseline_multiplier":
        update = {"mode": "baseline", "baseline_multiplier": int(value)}
    else:
        raise ValueError(f"unknown sweep dimension {dimension!r}")
    update["name"] = f"{base.name}-{dimension}{value:g}"
    return base.model_copy(update=update)


class PipelineOrchestrator:
    """Runs optimization, simulation and reporting for scenarios and sweeps."""

    def __init__(self, results_db: Optional[ResultsDatabase] = None, workers: int = 1):
        """
        Initialize the orchestrator.

        Args:
            results_db: Store every aggregated report here when given
            workers: Process pool size for replications
        """
        self.results_db = results_db
        self.workers = workers

    def solve(self, scenario: Scenario) -> SolveOutcome:
        """
        Optimize routing for a proposed-payload scenario.

        Raises:
            InvalidScenario: scenario fails validation
            NoPathFound: a commodity has no path within max_hops
            Infeasible: demands exceed capacity
        """
        ensure_valid(scenario)
        graph = build_graph(scenario)
        commodities = build_commodities(scenario, graph)
        pathsets = enumerate_all(graph, commodities, scenario.max_hops)
        solution = solve_maxmin(graph, commodities, pathsets)
        table = flows_to_routing_table(solution, commodities)
        return SolveOutcome(graph=graph, solution=solution, table=table, summary=summarize(solution))

    def run(
        self,
        scenario: Scenario,
        routing: Optional[RoutingTable] = None,
        seed: Optional[int] = None,
        reps: Optional[int] = None,
    ) -> MetricsReport:
        """
        Simulate ``reps`` replications of a scenario.

        A proposed scenario without a routing table is solved inline; the
        table then goes through the text format so the run matches one fed
        from a file written by ``solve``.
        """
        if scenario.mode == "baseline":
            routing = None
        elif routing is None:
            routing = canonical_routing_table(self.solve(scenario).table)
        report = run_replications(
            scenario,
            routing,
            reps if reps is not None else scenario.reps,
            seed if seed is not None else scenario.seed,
            workers=self.workers,
        )
        if self.results_db is not None:
            self.results_db.record_report(report, scenario)
        return report

    def sweep(self, spec: SweepSpec, seed: Optional[int] = None, reps: Optional[int] = None) -> list[MetricsReport]:
        """
        Run every point of a sweep in value order.

        A failing point is logged and recorded with its error; the sweep
        carries on with the next value.
        """
        reports: list[MetricsReport] = []
        for value in spec.values:
            point = apply_sweep_value(spec.base, spec.dimension, value)
            try:
                report = self.run(point, seed=seed, reps=reps)
                report = report.model_copy(update={"sweep_dimension": spec.dimension, "sweep_value": float(value)})
            except PayloadTEError as e:
                logger.error("Sweep point %s=%g failed: %s", spec.dimension, value, e)
                report = MetricsReport(
                    scenario_id=point.name,
                    mode=point.mode,
                    baseline_multiplier=point.baseline_multiplier,
                    lambda_pps=point.lambda_pps,
                    buffer_pkts=point.buffer_pkts,
                    link_rate_bps=point.link_rate_bps,
                    replications=0,
                    sweep_dimension=spec.dimension,
                    sweep_value=float(value),
                    error=f"{type(e).__name__}: {e}",
                )
                if self.results_db is not None:
                    self.results_db.record_report(report, point)
            reports.append(report)
        return reports
