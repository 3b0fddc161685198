"""
Max-min residual-capacity multicommodity flow over pre-enumerated paths.

The objective  max min_(u,v) ( c(u,v) - sum_k sum_{p in P^k_(u,v)} x_p^k )  is
solved through its epigraph form:

    maximize z
    s.t.  z + sum_k sum_{p in P^k_(u,v)} x_p^k <= c(u,v)   for every edge
          sum_{p in P^k} x_p^k = d^k                        for every commodity
          x >= 0, z >= 0

z >= 0 together with the edge rows is exactly the capacity constraint, so the
LP is infeasible precisely when demands cannot be routed within capacity.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import networkx as nx
import numpy as np

from config import PRUNE_FRACTION
from src.network.pathgen import Path, PathSet
from src.network.topology import Edge, PayloadGraph
from src.optimization.simplex import solve_lp
from src.schemas.models import Commodity, RouteEntry, RoutingTable, SolverSummary
from src.utils.errors import EmptyPathSet, Infeasible

logger = logging.getLogger(__name__)

Variable = Union[tuple[int, int], str]


@dataclass(frozen=True)
class LPModel:
    """Epigraph LP in matrix form with its row and column labels."""
    variables: tuple[Variable, ...]
    edges: tuple[Edge, ...]
    commodity_ids: tuple[int, ...]
    c: np.ndarray
    A_ub: np.ndarray
    b_ub: np.ndarray
    A_eq: np.ndarray
    b_eq: np.ndarray

    @property
    def num_variables(self) -> int:
        return len(self.variables)


@dataclass(frozen=True)
class RoutingSolution:
    """Optimal path flows x_p^k and the resulting link loads."""
    commodities: tuple[Commodity, ...]
    pathsets: tuple[PathSet, ...]
    flows: tuple[np.ndarray, ...]
    objective: float
    edge_flow: dict[Edge, float]
    edge_residual: dict[Edge, float]
    iterations: int = 0

    def flow_of(self, commodity_id: int) -> np.ndarray:
        for commodity, flow in zip(self.commodities, self.flows):
            if commodity.id == commodity_id:
                return flow
        raise KeyError(commodity_id)


def build_lp(graph: PayloadGraph, commodities: Sequence[Commodity], pathsets: Sequence[PathSet]) -> LPModel:
    """
    Assemble the epigraph LP.

    Columns are the paths of each commodity in the given commodity order and
    path-set order, followed by z. Inequality rows follow ``graph.edge_keys``;
    equality rows follow the commodity order.

    Raises:
        EmptyPathSet: a commodity has no path
    """
    if len(commodities) != len(pathsets):
        raise ValueError(f"{len(commodities)} commodities but {len(pathsets)} path sets")
    for commodity, pathset in zip(commodities, pathsets):
        if pathset.commodity_id != commodity.id:
            raise ValueError(f"path set {pathset.commodity_id} does not belong to commodity {commodity.id}")
        if len(pathset) == 0:
            raise EmptyPathSet(f"commodity {commodity.id} has no candidate path")

    edges = graph.edge_keys
    row_of = {edge: i for i, edge in enumerate(edges)}
    variables: list[Variable] = [
        (commodity.id, i) for commodity, pathset in zip(commodities, pathsets) for i in range(len(pathset))
    ]
    variables.append("z")
    n = len(variables)

    A_ub = np.zeros((len(edges), n))
    A_eq = np.zeros((len(commodities), n))
    column = 0
    for k, pathset in enumerate(pathsets):
        for path in pathset.paths:
            for edge in path.edges:
                A_ub[row_of[edge], column] = 1.0
            A_eq[k, column] = 1.0
            column += 1
    A_ub[:, -1] = 1.0

    c = np.zeros(n)
    c[-1] = 1.0
    return LPModel(
        variables=tuple(variables),
        edges=edges,
        commodity_ids=tuple(commodity.id for commodity in commodities),
        c=c,
        A_ub=A_ub,
        b_ub=np.array([graph.capacity(u, v) for u, v in edges]),
        A_eq=A_eq,
        b_eq=np.array([commodity.demand for commodity in commodities]),
    )


def edge_loads(graph: PayloadGraph, pathsets: Sequence[PathSet], flows: Sequence[np.ndarray]) -> dict[Edge, float]:
    load = {edge: 0.0 for edge in graph.edge_keys}
    for pathset, flow in zip(pathsets, flows):
        for path, x in zip(pathset.paths, flow):
            if x == 0.0:
                continue
            for edge in path.edges:
                load[edge] += float(x)
    return load


def binding_cut_hint(graph: PayloadGraph, commodities: Sequence[Commodity]) -> Optional[str]:
    """Name a cut whose capacity is below the demand crossing it, if one is easy to find."""
    out_demand: dict[int, float] = {}
    in_demand: dict[int, float] = {}
    for commodity in commodities:
        out_demand[commodity.source] = out_demand.get(commodity.source, 0.0) + commodity.demand
        in_demand[commodity.destination] = in_demand.get(commodity.destination, 0.0) + commodity.demand
    for node, demand in sorted(out_demand.items()):
        cap = sum(graph.capacity(u, v) for u, v in graph.adjacency.get(node, ()))
        if demand > cap:
            return f"demand {demand:.6g} b/s leaving node {node} exceeds its outgoing capacity {cap:.6g} b/s"
    for node, demand in sorted(in_demand.items()):
        cap = sum(graph.capacity(u, v) for u, v in graph.edge_keys if v == node)
        if demand > cap:
            return f"demand {demand:.6g} b/s entering node {node} exceeds its incoming capacity {cap:.6g} b/s"
    for commodity in commodities:
        cut = nx.maximum_flow_value(graph.digraph, commodity.source, commodity.destination, capacity="capacity")
        if commodity.demand > cut:
            return (
                f"commodity {commodity.id}: demand {commodity.demand:.6g} b/s exceeds "
                f"the {commodity.source}-{commodity.destination} min cut {cut:.6g} b/s"
            )
    return None


def solve_maxmin(
    graph: PayloadGraph,
    commodities: Sequence[Commodity],
    pathsets: Sequence[PathSet],
) -> RoutingSolution:
    """
    Solve the max-min residual LP.

    Capacities and demands are scaled by their largest value before the
    simplex runs and scaled back afterwards. Flows are clipped at zero and each
    commodity's flows rescaled to sum to d^k exactly; z* is then recomputed as
    the minimum residual of the resulting loads.

    Raises:
        EmptyPathSet: a commodity has no path
        Infeasible: demands cannot be routed within capacity over the given paths
    """
    model = build_lp(graph, commodities, pathsets)
    scale = float(max(model.b_ub.max(initial=0.0), model.b_eq.max(initial=0.0), 1.0))

    result = solve_lp(model.c, model.A_ub, model.b_ub / scale, model.A_eq, model.b_eq / scale)
    if result.status != "optimal":
        hint = binding_cut_hint(graph, commodities)
        raise Infeasible(f"no routing satisfies demands within capacity (simplex status: {result.status})", hint)

    x = result.x * scale
    flows: list[np.ndarray] = []
    column = 0
    for commodity, pathset in zip(commodities, pathsets):
        flow = np.clip(x[column:column + len(pathset)], 0.0, None)
        column += len(pathset)
        total = flow.sum()
        if total > 0:
            flow = flow * (commodity.demand / total)
        flows.append(flow)

    load = edge_loads(graph, pathsets, flows)
    residual = {edge: graph.capacity(*edge) - load[edge] for edge in graph.edge_keys}
    objective = min(residual.values())
    logger.info(
        "Max-min LP solved: %d variables, %d pivots, z* = %.6g b/s",
        model.num_variables, result.iterations, objective,
    )
    return RoutingSolution(
        commodities=tuple(commodities),
        pathsets=tuple(pathsets),
        flows=tuple(flows),
        objective=objective,
        edge_flow=load,
        edge_residual=residual,
        iterations=result.iterations,
    )


def residuals(graph: PayloadGraph, solution: RoutingSolution) -> dict[Edge, float]:
    """c(u,v) minus total routed flow, for every edge of ``graph``."""
    load = edge_loads(graph, solution.pathsets, solution.flows)
    return {edge: graph.capacity(*edge) - load[edge] for edge in graph.edge_keys}


def flows_to_routing_table(solution: RoutingSolution, commodities: Sequence[Commodity]) -> RoutingTable:
    """
    Turn path flows into per-commodity path probabilities x_p^k / d^k.

    Paths carrying less than PRUNE_FRACTION * d^k are dropped and the rest
    renormalized.
    """
    routes: dict[int, tuple[RouteEntry, ...]] = {}
    for commodity in commodities:
        flow = solution.flow_of(commodity.id)
        pathset = next(ps for ps in solution.pathsets if ps.commodity_id == commodity.id)
        kept: list[tuple[Path, float]] = [
            (path, float(x)) for path, x in zip(pathset.paths, flow) if x >= PRUNE_FRACTION * commodity.demand
        ]
        total = sum(x for _, x in kept)
        routes[commodity.id] = tuple(
            RouteEntry(nodes=path.nodes, probability=x / total) for path, x in kept
        )
    return RoutingTable(routes=routes)


def summarize(solution: RoutingSolution) -> SolverSummary:
    edge, _ = min(solution.edge_residual.items(), key=lambda item: (item[1], item[0]))
    return SolverSummary(
        objective_bps=solution.objective,
        min_residual_edge=edge,
        residuals=[(u, v, r) for (u, v), r in sorted(solution.edge_residual.items())],
        variables=sum(len(ps) for ps in solution.pathsets) + 1,
        path_counts={ps.commodity_id: len(ps) for ps in solution.pathsets},
    )
