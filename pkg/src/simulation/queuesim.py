"""
Discrete-event simulation of packets crossing the payload.

Every station is a single FIFO server with a tail-drop buffer of B packets
(the one in service included). Because service is FIFO, a packet's departure
time is fixed the moment it is admitted: max(arrival, previous departure) +
service time. A station therefore only keeps the departure times of the
packets it holds, and each packet costs one calendar event per station it
visits plus its generation.

Proposed payload: the source modem bank serves the packet, each link on its
path transmits it (deterministic, packet_bits / c(u,v)), and the destination
modem bank serves it. With ``transit_service`` on, intermediate modem banks
serve it too. Baseline: a single modem station at multiplier x mu receives
every commodity.
"""

import bisect
import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence

from src.metrics.confidence import confidence_interval
from src.network.topology import PayloadGraph
from src.scenario.assembly import build_graph, commodity_endpoints
from src.scenario.validation import ensure_valid
from src.schemas.models import FlowCounts, MetricsReport, RoutingTable, RunMetrics, Scenario
from src.simulation.events import EventCalendar
from src.simulation.streams import RandomStream, spawn_streams, split_seed
from src.utils.errors import InsufficientSamples, RoutingMismatch, SimulationInvariantError

logger = logging.getLogger(__name__)

GENERATE, ARRIVE, DELIVER = 0, 1, 2


@dataclass(slots=True)
class Station:
    """Single-server FIFO queue with a tail-drop buffer."""
    name: str
    kind: Literal["modem", "link"]
    service_time: float
    buffer: int
    stream: Optional[RandomStream] = None
    departures: deque = field(default_factory=deque)
    last_departure: float = 0.0
    max_occupancy: int = 0

    def admit(self, now: float) -> Optional[float]:
        """Departure time of a packet arriving at ``now``, or None if it is dropped."""
        departures = self.departures
        while departures and departures[0] <= now:
            departures.popleft()
        if len(departures) >= self.buffer:
            return None
        service = self.service_time * self.stream.exponential() if self.stream is not None else self.service_time
        depart = (self.last_departure if self.last_departure > now else now) + service
        departures.append(depart)
        self.last_departure = depart
        if len(departures) > self.max_occupancy:
            self.max_occupancy = len(departures)
        return depart


@dataclass(slots=True)
class Packet:
    commodity: int
    created: float
    path: tuple[int, ...]
    stations: tuple[int, ...]
    size_bytes: int
    measured: bool
    hop: int = 0


@dataclass
class _Route:
    path: tuple[int, ...]
    stations: tuple[int, ...]


@dataclass
class NetworkPlan:
    """Stations plus, per commodity, candidate routes and cumulative probabilities."""
    stations: list[Station]
    routes: list[list[_Route]]
    cumulative: list[list[float]]


def _modem(name: str, rate: float, scenario: Scenario, stream: Optional[RandomStream]) -> Station:
    random_service = scenario.service_dist == "exponential"
    return Station(name, "modem", 1.0 / rate, scenario.buffer_pkts, stream if random_service else None)


def build_plan(
    scenario: Scenario,
    routing: Optional[RoutingTable],
    graph: Optional[PayloadGraph],
    service_streams: Sequence[RandomStream],
) -> NetworkPlan:
    """
    Raises:
        RoutingMismatch: a commodity lacks routes or a route does not fit the graph
    """
    rates = scenario.commodity_rates()
    if scenario.mode == "baseline":
        central = _modem("central", scenario.baseline_multiplier * scenario.mu_pps, scenario, service_streams[0])
        routes = [[_Route((), (0,))] for _ in rates]
        return NetworkPlan([central], routes, [[1.0] for _ in rates])

    if graph is None:
        graph = build_graph(scenario)
    if routing is None:
        raise RoutingMismatch("proposed mode needs a routing table")
    pairs = commodity_endpoints(scenario, graph.node_count)

    stations = [_modem(f"modem-{node}", scenario.mu_pps, scenario, service_streams[node]) for node in graph.nodes]
    link_index: dict[tuple[int, int], int] = {}
    for u, v in graph.edge_keys:
        link_index[(u, v)] = len(stations)
        stations.append(
            Station(f"link-{u}-{v}", "link", scenario.packet_bits / graph.capacity(u, v), scenario.buffer_pkts)
        )

    all_routes: list[list[_Route]] = []
    all_cumulative: list[list[float]] = []
    for k, (s, t) in enumerate(pairs):
        entries = routing.entries(k)
        if not entries:
            raise RoutingMismatch(f"commodity {k} has no routing entries")
        routes: list[_Route] = []
        cumulative: list[float] = []
        total = 0.0
        for entry in entries:
            nodes = entry.nodes
            if nodes[0] != s or nodes[-1] != t:
                raise RoutingMismatch(f"commodity {k}: route {nodes} does not join {s} and {t}")
            sequence = [s]
            for i, edge in enumerate(zip(nodes[:-1], nodes[1:])):
                if edge not in link_index:
                    raise RoutingMismatch(f"commodity {k}: route {nodes} uses unknown edge {edge}")
                sequence.append(link_index[edge])
                if scenario.transit_service and i < len(nodes) - 2:
                    sequence.append(edge[1])
            sequence.append(t)
            routes.append(_Route(tuple(nodes), tuple(sequence)))
            total += entry.probability
            cumulative.append(total)
        if total <= 0:
            raise RoutingMismatch(f"commodity {k}: routing probabilities sum to zero")
        all_routes.append(routes)
        all_cumulative.append([c / total for c in cumulative])
    return NetworkPlan(stations, all_routes, all_cumulative)


def _counts(offered: int, delivered: int, dropped: int, delay_sum: float) -> FlowCounts:
    return FlowCounts(
        offered=offered,
        delivered=delivered,
        dropped=dropped,
        in_flight=offered - delivered - dropped,
        mean_delay_s=delay_sum / delivered if delivered else None,
        pli=100.0 * dropped / offered if offered else 0.0,
    )


def simulate(
    scenario: Scenario,
    routing: Optional[RoutingTable],
    seed: int,
    graph: Optional[PayloadGraph] = None,
) -> RunMetrics:
    """
    Run one replication.

    Packets generated before warm-up (warmup_frac x horizon) are simulated
    but not counted. Events after the horizon are not processed; counted
    packets still queued then are reported as in flight.

    Raises:
        InvalidScenario: scenario fails validation (zero rates are allowed)
        RoutingMismatch: routing table does not cover the scenario
        SimulationInvariantError: internal check failed (check_invariants only)
    """
    ensure_valid(scenario, allow_idle=True)
    rates = scenario.commodity_rates()
    n_commodities = len(rates)
    if scenario.mode == "proposed" and graph is None:
        graph = build_graph(scenario)
    node_count = 1 if scenario.mode == "baseline" else graph.node_count
    # arrival streams, routing streams, then one service stream per modem
    streams = spawn_streams(seed, 2 * n_commodities + node_count)
    arrival_streams = streams[:n_commodities]
    routing_streams = streams[n_commodities:2 * n_commodities]
    plan = build_plan(scenario, routing, graph, streams[2 * n_commodities:])
    stations = plan.stations

    horizon = scenario.horizon_s
    warmup = scenario.warmup_frac * horizon
    check = scenario.check_invariants
    calendar = EventCalendar(check_causality=check)

    offered = [0] * n_commodities
    delivered = [0] * n_commodities
    dropped = [0] * n_commodities
    delay_sum = [0.0] * n_commodities

    for k, rate in enumerate(rates):
        if rate > 0:
            calendar.schedule(arrival_streams[k].exponential() / rate, GENERATE, k)

    def arrive(packet: Packet, now: float) -> None:
        station = stations[packet.stations[packet.hop]]
        depart = station.admit(now)
        if depart is None:
            if packet.measured:
                dropped[packet.commodity] += 1
            return
        if check and len(station.departures) > station.buffer:
            raise SimulationInvariantError(f"{station.name} holds {len(station.departures)} > {station.buffer}")
        packet.hop += 1
        calendar.schedule(depart, DELIVER if packet.hop == len(packet.stations) else ARRIVE, packet)

    while calendar.next_time() <= horizon:
        now, kind, payload = calendar.pop()
        if kind == GENERATE:
            k = payload
            calendar.schedule(now + arrival_streams[k].exponential() / rates[k], GENERATE, k)
            choices = plan.routes[k]
            if len(choices) == 1:
                route = choices[0]
            else:
                cumulative = plan.cumulative[k]
                pick = bisect.bisect_right(cumulative, routing_streams[k].uniform())
                route = choices[min(pick, len(choices) - 1)]
            packet = Packet(k, now, route.path, route.stations, scenario.packet_bytes, now >= warmup)
            if packet.measured:
                offered[k] += 1
            arrive(packet, now)
        elif kind == ARRIVE:
            arrive(payload, now)
        else:
            packet = payload
            if packet.measured:
                delay = now - packet.created
                if check and not delay > 0:
                    raise SimulationInvariantError(f"nonpositive delay {delay} for commodity {packet.commodity}")
                delivered[packet.commodity] += 1
                delay_sum[packet.commodity] += delay

    per_commodity = {
        k: _counts(offered[k], delivered[k], dropped[k], delay_sum[k]) for k in range(n_commodities)
    }
    aggregate = _counts(sum(offered), sum(delivered), sum(dropped), sum(delay_sum))
    logger.debug(
        "Run seed=%d: %d events, offered=%d delivered=%d dropped=%d",
        seed, calendar.processed, aggregate.offered, aggregate.delivered, aggregate.dropped,
    )
    return RunMetrics(
        seed=seed,
        per_commodity=per_commodity,
        aggregate=aggregate,
        event_count=calendar.processed,
        max_occupancy=max(station.max_occupancy for station in stations),
    )


def _simulate_job(args: tuple[Scenario, Optional[RoutingTable], int]) -> RunMetrics:
    scenario, routing, seed = args
    return simulate(scenario, routing, seed)


def aggregate_runs(scenario: Scenario, runs: Sequence[RunMetrics]) -> MetricsReport:
    """Mean and 95% CI over replications; PLI intervals use per-replication PLI values."""
    delays = [run.aggregate.mean_delay_s for run in runs if run.aggregate.mean_delay_s is not None]
    total_offered = sum(run.aggregate.offered for run in runs)
    total_dropped = sum(run.aggregate.dropped for run in runs)
    return MetricsReport(
        scenario_id=scenario.name,
        mode=scenario.mode,
        baseline_multiplier=scenario.baseline_multiplier,
        lambda_pps=scenario.lambda_pps,
        buffer_pkts=scenario.buffer_pkts,
        link_rate_bps=scenario.link_rate_bps,
        replications=len(runs),
        delay=confidence_interval(delays) if len(delays) >= 2 else None,
        pli=confidence_interval([run.aggregate.pli for run in runs]),
        pooled_pli=100.0 * total_dropped / total_offered if total_offered else 0.0,
        runs=list(runs),
    )


def run_replications(
    scenario: Scenario,
    routing: Optional[RoutingTable],
    n_reps: int,
    base_seed: int,
    seeds: Optional[Sequence[int]] = None,
    workers: int = 1,
) -> MetricsReport:
    """
    Run ``n_reps`` independent replications with seed_i = split_seed(base_seed, i).

    Args:
        scenario: Scenario to simulate
        routing: Routing table (proposed mode)
        n_reps: Number of replications, at least 2
        base_seed: Seed the replication seeds derive from
        seeds: Explicit per-replication seeds, overriding the derivation
        workers: Process pool size; results keep replication order

    Raises:
        InsufficientSamples: n_reps < 2
    """
    if n_reps < 2:
        raise InsufficientSamples(f"need at least 2 replications, got {n_reps}")
    if seeds is None:
        seeds = [split_seed(base_seed, i) for i in range(n_reps)]
    elif len(seeds) != n_reps:
        raise ValueError(f"{len(seeds)} seeds for {n_reps} replications")

    jobs = [(scenario, routing, int(seed)) for seed in seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_simulate_job, jobs))
    else:
        runs = []
        for i, job in enumerate(jobs):
            runs.append(_simulate_job(job))
            logger.info("Replication %d/%d of %s done", i + 1, n_reps, scenario.name)

    report = aggregate_runs(scenario, runs)
    logger.info(
        "%s: delay %s, PLI %.4f%% +/- %.4f",
        scenario.name,
        f"{report.delay.mean:.6g}s" if report.delay else "n/a",
        report.pli.mean, report.pli.half_width,
    )
    return report
