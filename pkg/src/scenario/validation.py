"""Semantic checks on a Scenario."""

import logging

from src.network.topology import validate_graph
from src.optimization.maxmin_lp import binding_cut_hint
from src.scenario.assembly import build_commodities, build_graph, commodity_endpoints
from src.schemas.models import Scenario, ValidationReport
from src.utils.errors import InvalidScenario, PayloadTEError

logger = logging.getLogger(__name__)

_MAX_SEED = 2 ** 64


def validate(scenario: Scenario, allow_idle: bool = False) -> ValidationReport:
    """
    Check every Scenario invariant.

    Violations make the scenario unusable; warnings flag overloads the
    scenario may be meant to show (a demand above a min cut, a baseline
    station with utilization >= 1).

    Args:
        scenario: Scenario to check
        allow_idle: Accept zero arrival rates (an idle run offers no packets)
    """
    violations: list[str] = []
    warnings: list[str] = []

    def positive(name: str, value: float) -> None:
        if not value > 0:
            violations.append(f"nonpositive {name}: {value}")

    rates = scenario.commodity_rates()
    for k, rate in enumerate(rates):
        if rate < 0 or (rate == 0 and not allow_idle):
            violations.append(f"nonpositive rate: commodity {k} lambda = {rate}")
    positive("packet size", scenario.packet_bytes)
    positive("service rate", scenario.mu_pps)
    positive("buffer size", scenario.buffer_pkts)
    positive("max_hops", scenario.max_hops)
    positive("horizon", scenario.horizon_s)
    if not 0.0 <= scenario.warmup_frac <= 0.5:
        violations.append(f"warm-up fraction {scenario.warmup_frac} outside [0, 0.5]")
    if scenario.reps < 2:
        violations.append(f"replication count {scenario.reps} below 2")
    if not 0 <= scenario.seed < _MAX_SEED:
        violations.append(f"seed {scenario.seed} is not an unsigned 64-bit integer")
    if scenario.mode == "baseline" and scenario.baseline_multiplier < 1:
        violations.append(f"baseline multiplier {scenario.baseline_multiplier} below 1")
    if scenario.rates_pps is not None and scenario.pairs is None and len(scenario.rates_pps) != scenario.commodity_count:
        violations.append(f"{len(scenario.rates_pps)} rates for {scenario.commodity_count} commodities")

    if scenario.edge_list is None:
        if scenario.rows < 2 or scenario.cols < 2:
            violations.append(f"torus dimensions {scenario.rows}x{scenario.cols} below 2")
        positive("link rate", scenario.link_rate_bps)
    if violations:
        return ValidationReport(violations=violations, warnings=warnings)

    try:
        graph = build_graph(scenario)
    except (OSError, PayloadTEError) as e:
        return ValidationReport(violations=[f"graph: {e}"], warnings=warnings)
    graph_report = validate_graph(graph)
    violations.extend(graph_report.violations)

    try:
        pairs = commodity_endpoints(scenario, graph.node_count)
    except InvalidScenario as e:
        violations.extend(e.violations)
        pairs = []
    if scenario.pairs is not None and scenario.rates_pps is not None and len(scenario.rates_pps) != len(pairs):
        violations.append(f"{len(scenario.rates_pps)} rates for {len(pairs)} commodities")
    for k, (s, t) in enumerate(pairs):
        for node in (s, t):
            if not 0 <= node < graph.node_count:
                violations.append(f"unknown node: commodity {k} endpoint {node} not in {graph.node_count}-node graph")
        if s == t:
            violations.append(f"commodity {k}: source equals destination ({s})")

    if not violations:
        if scenario.mode == "baseline":
            rho = sum(rates) / (scenario.baseline_multiplier * scenario.mu_pps)
            if rho >= 1.0:
                warnings.append(f"baseline station overloaded: utilization {rho:.3f}")
        elif all(rate > 0 for rate in rates):
            hint = binding_cut_hint(graph, build_commodities(scenario, graph))
            if hint:
                warnings.append(f"LP demand exceeds cut capacity: {hint}")

    for warning in warnings:
        logger.warning("Scenario %s: %s", scenario.name, warning)
    return ValidationReport(violations=violations, warnings=warnings)


def ensure_valid(scenario: Scenario, allow_idle: bool = False) -> ValidationReport:
    """Validate and raise InvalidScenario on any violation."""
    report = validate(scenario, allow_idle=allow_idle)
    if not report.ok:
        raise InvalidScenario(report.violations)
    return report
