import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.metrics.queueing import md1_mean_sojourn, mm1_mean_sojourn, mm1k_blocking
from src.parsers.routing_file import canonical_routing_table
from src.pipeline.orchestrator import PipelineOrchestrator
from src.schemas.models import RouteEntry, RoutingTable, Scenario
from src.simulation.events import EventCalendar
from src.simulation.queuesim import Station, run_replications, simulate
from src.simulation.streams import split_seed
from src.testing.instance_generator import InstanceGenerator
from src.utils.errors import InsufficientSamples, RoutingMismatch, SimulationInvariantError


def single_queue(**overrides) -> Scenario:
    """One commodity into the centralized station at 1 x mu."""
    values = dict(
        name="single-queue",
        rows=2,
        cols=2,
        pairs=((0, 3),),
        lambda_pps=50_000.0,
        mu_pps=100_000.0,
        buffer_pkts=1_000_000,
        horizon_s=0.2,
        warmup_frac=0.1,
        reps=10,
        seed=11,
        mode="baseline",
        baseline_multiplier=1,
    )
    values.update(overrides)
    return Scenario(**values)


def routed(scenario: Scenario) -> RoutingTable:
    return canonical_routing_table(PipelineOrchestrator().solve(scenario).table)


def test_calendar_orders_ties_by_insertion():
    calendar = EventCalendar()
    calendar.schedule(1.0, 0, "b")
    calendar.schedule(0.5, 0, "a")
    calendar.schedule(1.0, 0, "c")
    assert [calendar.pop()[2] for _ in range(3)] == ["a", "b", "c"]
    assert calendar.next_time() == float("inf")


def test_calendar_rejects_past_events_in_check_mode():
    calendar = EventCalendar(check_causality=True)
    calendar.schedule(1.0, 0)
    calendar.pop()
    with pytest.raises(SimulationInvariantError):
        calendar.schedule(0.5, 0)


def test_station_tail_drop():
    station = Station("s", "link", service_time=1.0, buffer=3)
    assert [station.admit(0.0) for _ in range(4)] == [1.0, 2.0, 3.0, None]
    # one departure at t=1 frees a slot
    assert station.admit(1.0) == 4.0
    assert station.max_occupancy == 3


def test_split_seed():
    assert split_seed(42, 0) == split_seed(42, 0)
    assert len({split_seed(42, i) for i in range(100)}) == 100
    assert 0 <= split_seed(42, 3) < 2 ** 64


def test_zero_arrivals():
    run = simulate(single_queue(lambda_pps=0.0), None, seed=1)
    assert run.aggregate.offered == 0
    assert run.aggregate.pli == 0.0
    assert run.aggregate.mean_delay_s is None


def test_mm1_delay():
    scenario = single_queue()
    report = run_replications(scenario, None, scenario.reps, scenario.seed)
    expected = mm1_mean_sojourn(50_000, 100_000)
    assert report.delay.mean == pytest.approx(expected, rel=0.05)
    assert report.pli.mean == 0.0


def test_md1_delay():
    scenario = single_queue(service_dist="deterministic")
    report = run_replications(scenario, None, scenario.reps, scenario.seed)
    assert report.delay.mean == pytest.approx(md1_mean_sojourn(50_000, 100_000), rel=0.03)


@pytest.mark.slow
def test_mm1k_blocking():
    scenario = single_queue(lambda_pps=90_000.0, buffer_pkts=20, horizon_s=0.5)
    report = run_replications(scenario, None, 10, scenario.seed)
    expected = 100.0 * mm1k_blocking(0.9, 20)
    assert report.pli.mean == pytest.approx(expected, abs=0.3)


def test_fluid_limit_loss_small_buffer():
    # 8 x 90k into 2 x 100k; the 1000-packet buffer fills in about 2 ms
    scenario = single_queue(
        rows=4, cols=4, pairs=None, commodity_count=8, lambda_pps=90_000.0,
        buffer_pkts=1000, horizon_s=0.2, baseline_multiplier=2,
    )
    report = run_replications(scenario, None, 2, scenario.seed)
    assert report.pli.mean == pytest.approx(100 * (1 - 200_000 / 720_000), abs=5.0)


def test_large_multiplier_is_lossless():
    scenario = single_queue(
        rows=4, cols=4, pairs=None, commodity_count=8, lambda_pps=90_000.0,
        buffer_pkts=10_000, horizon_s=0.05, baseline_multiplier=8,
    )
    report = run_replications(scenario, None, 2, scenario.seed)
    assert report.pooled_pli == pytest.approx(0.0, abs=0.01)


def test_same_seed_same_run():
    scenario = single_queue(horizon_s=0.05, buffer_pkts=5)
    first = simulate(scenario, None, seed=99)
    second = simulate(scenario, None, seed=99)
    assert first == second
    assert simulate(scenario, None, seed=100) != first


def test_proposed_preset_lossless():
    scenario = Scenario(name="preset-short", lambda_pps=30_000.0, horizon_s=0.02, reps=2)
    report = run_replications(scenario, routed(scenario), 2, scenario.seed)
    assert report.pooled_pli < 0.5
    # at least modem service at both ends
    assert report.delay.mean > 2 / scenario.mu_pps


def test_transit_service_adds_delay():
    base = Scenario(
        name="transit", rows=2, cols=2, pairs=((0, 3),), lambda_pps=10_000.0,
        link_rate_bps=1e9, horizon_s=0.05, reps=2,
    )
    routing = routed(base)
    plain = simulate(base, routing, seed=5)
    transit = simulate(base.model_copy(update={"transit_service": True}), routing, seed=5)
    assert transit.aggregate.mean_delay_s > plain.aggregate.mean_delay_s


def test_heterogeneous_rates():
    scenario = single_queue(pairs=((0, 3), (1, 2)), rates_pps=(5_000.0, 20_000.0), horizon_s=0.2)
    run = simulate(scenario, None, seed=3)
    ratio = run.per_commodity[1].offered / run.per_commodity[0].offered
    assert 3.5 < ratio < 4.5


@pytest.mark.parametrize("seed", range(100))
def test_check_mode_on_random_scenarios(seed):
    scenario = InstanceGenerator(seed).scenario(check_invariants=True)
    run = simulate(scenario, routed(scenario), seed=scenario.seed)
    totals = run.aggregate
    assert totals.in_flight >= 0
    assert totals.offered == totals.delivered + totals.dropped + totals.in_flight
    assert totals.offered == sum(c.offered for c in run.per_commodity.values())
    assert run.max_occupancy <= scenario.buffer_pkts


@pytest.mark.parametrize("seed", range(1000, 1100))
def test_random_routing_tables_conserve_packets(seed):
    generator = InstanceGenerator(seed)
    lp = generator.lp_instance(max_dim=3, max_commodities=3)
    table = generator.routing_table(lp)
    scenario = Scenario(
        name="random-routing",
        rows=lp.graph.rows,
        cols=lp.graph.cols,
        link_rate_bps=lp.graph.capacity(*lp.graph.edge_keys[0]),
        pairs=tuple((c.source, c.destination) for c in lp.commodities),
        lambda_pps=5_000.0,
        buffer_pkts=3,
        horizon_s=0.01,
        check_invariants=True,
    )
    run = simulate(scenario, table, seed=1)
    for counts in run.per_commodity.values():
        assert counts.offered == counts.delivered + counts.dropped + counts.in_flight
        assert counts.in_flight >= 0
    assert run.max_occupancy <= 3


def test_missing_routes_rejected():
    scenario = Scenario(name="x", rows=2, cols=2, pairs=((0, 3), (1, 2)), lambda_pps=100.0, horizon_s=0.01)
    partial = RoutingTable(routes={0: (RouteEntry(nodes=(0, 1, 3), probability=1.0),)})
    with pytest.raises(RoutingMismatch):
        simulate(scenario, partial, seed=1)
    wrong = RoutingTable(routes={
        0: (RouteEntry(nodes=(0, 1, 3), probability=1.0),),
        1: (RouteEntry(nodes=(1, 0), probability=1.0),),
    })
    with pytest.raises(RoutingMismatch):
        simulate(scenario, wrong, seed=1)


def test_one_replication_rejected():
    with pytest.raises(InsufficientSamples):
        run_replications(single_queue(), None, 1, 0)


def test_workers_keep_replication_order():
    scenario = single_queue(horizon_s=0.02)
    serial = run_replications(scenario, None, 3, 7)
    pooled = run_replications(scenario, None, 3, 7, workers=2)
    assert serial.runs == pooled.runs


def test_forced_identical_seeds_give_zero_width():
    scenario = single_queue(horizon_s=0.05)
    report = run_replications(scenario, None, 3, scenario.seed, seeds=[5, 5, 5])
    assert [run.seed for run in report.runs] == [5, 5, 5]
    assert report.runs[0] == report.runs[1] == report.runs[2]
    assert report.delay.half_width == pytest.approx(0.0, abs=1e-12 * report.delay.mean)
    assert report.pli.half_width == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        run_replications(scenario, None, 3, scenario.seed, seeds=[5, 5])


@pytest.mark.slow
def test_mm1_interval_covers_analytic_delay():
    expected = mm1_mean_sojourn(50_000, 100_000)
    covered = 0
    for base_seed in range(10):
        scenario = single_queue(seed=base_seed)
        report = run_replications(scenario, None, scenario.reps, scenario.seed)
        if abs(report.delay.mean - expected) <= report.delay.half_width:
            covered += 1
    assert expected == pytest.approx(20e-6)
    assert covered >= 8


def test_buffer_bound_holds_in_overload():
    scenario = single_queue(lambda_pps=150_000.0, buffer_pkts=7, horizon_s=0.02, check_invariants=True)
    run = simulate(scenario, None, seed=4)
    assert run.max_occupancy == 7
    assert run.aggregate.dropped > 0


def test_stable_stations_with_large_buffer_lose_nothing():
    scenario = Scenario(
        name="stable-large-buffer", lambda_pps=60_000.0, buffer_pkts=1_000_000, horizon_s=0.02, reps=2,
    )
    report = run_replications(scenario, routed(scenario), 2, scenario.seed)
    assert report.pooled_pli < 0.1
    assert all(run.aggregate.pli < 0.1 for run in report.runs)
