"""Turn a Scenario into the graph and commodity objects the solver and simulator use."""

import numpy as np

from src.network.topology import PayloadGraph, build_torus, load_edge_list
from src.schemas.models import Commodity, Scenario
from src.utils.errors import InvalidScenario


def default_placement(count: int, node_count: int, placement_seed: int) -> list[tuple[int, int]]:
    """
    Sources are nodes 0..count-1, destinations count..2*count-1.

    Source i is matched to destination count + perm[i], where perm is the
    permutation of range(count) drawn by a PCG64 generator seeded with
    ``placement_seed``. Every node terminates at most one commodity.
    """
    if 2 * count > node_count:
        raise InvalidScenario([f"default placement needs {2 * count} nodes, graph has {node_count}"])
    perm = np.random.Generator(np.random.PCG64(placement_seed)).permutation(count)
    return [(i, count + int(perm[i])) for i in range(count)]


def build_graph(scenario: Scenario) -> PayloadGraph:
    if scenario.edge_list:
        return load_edge_list(scenario.edge_list)
    return build_torus(scenario.rows, scenario.cols, scenario.link_rate_bps)


def commodity_endpoints(scenario: Scenario, node_count: int) -> list[tuple[int, int]]:
    if scenario.pairs is not None:
        return [(int(s), int(t)) for s, t in scenario.pairs]
    return default_placement(scenario.commodity_count, node_count, scenario.placement_seed)


def build_commodities(scenario: Scenario, graph: PayloadGraph) -> list[Commodity]:
    """Commodities with d^k = lambda_k * packet_bytes * 8."""
    pairs = commodity_endpoints(scenario, graph.node_count)
    rates = scenario.commodity_rates()
    if len(rates) != len(pairs):
        raise InvalidScenario([f"{len(rates)} arrival rates for {len(pairs)} commodities"])
    if any(rate <= 0 for rate in rates):
        raise InvalidScenario(["nonpositive rate: LP demands need a positive arrival rate"])
    return [
        Commodity(id=k, source=s, destination=t, demand=scenario.demand_bps(rate))
        for k, ((s, t), rate) in enumerate(zip(pairs, rates))
    ]
