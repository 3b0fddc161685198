"""
Hop-bounded path enumeration per commodity.

For every commodity the full set of simple directed paths with at most
``max_hops`` edges is enumerated, and each path is indexed under every edge it
uses so the LP can look up the paths crossing a link.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import networkx as nx

from src.network.topology import Edge, PayloadGraph
from src.schemas.models import Commodity
from src.utils.errors import NoPathFound, UnknownEdge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Path:
    """Simple directed path as an ordered node sequence."""
    nodes: tuple[int, ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(zip(self.nodes[:-1], self.nodes[1:]))

    @property
    def hops(self) -> int:
        return len(self.nodes) - 1

    def __str__(self) -> str:
        return "->".join(map(str, self.nodes))


@dataclass(frozen=True)
class PathSet:
    """Candidate paths of one commodity and the edge -> path index."""
    commodity_id: int
    paths: tuple[Path, ...]
    index: Mapping[Edge, tuple[int, ...]] = field(repr=False)
    graph_edges: frozenset[Edge] = field(repr=False)

    def __len__(self) -> int:
        return len(self.paths)


def _build_index(paths: Iterable[Path]) -> dict[Edge, tuple[int, ...]]:
    index: dict[Edge, list[int]] = {}
    for i, path in enumerate(paths):
        for edge in path.edges:
            index.setdefault(edge, []).append(i)
    return {edge: tuple(ids) for edge, ids in index.items()}


def enumerate_paths(graph: PayloadGraph, commodity: Commodity, max_hops: int) -> PathSet:
    """
    Enumerate every simple path from s^k to t^k with at most ``max_hops`` edges.

    Paths are returned in lexicographic order of their node sequences.

    Raises:
        ValueError: endpoint outside the graph or max_hops < 1
        NoPathFound: no path fits the bound
    """
    if max_hops < 1:
        raise ValueError(f"max_hops must be >= 1, got {max_hops}")
    for node in (commodity.source, commodity.destination):
        if not 0 <= node < graph.node_count:
            raise ValueError(f"commodity {commodity.id}: node {node} not in graph")

    raw = nx.all_simple_paths(graph.digraph, commodity.source, commodity.destination, cutoff=max_hops)
    paths = tuple(Path(tuple(nodes)) for nodes in sorted(tuple(p) for p in raw))
    if not paths:
        raise NoPathFound(
            f"commodity {commodity.id}: no path {commodity.source}->{commodity.destination} "
            f"within {max_hops} hops"
        )

    logger.debug("Commodity %d: %d paths within %d hops", commodity.id, len(paths), max_hops)
    return PathSet(
        commodity_id=commodity.id,
        paths=paths,
        index=_build_index(paths),
        graph_edges=frozenset(graph.edge_keys),
    )


def enumerate_all(graph: PayloadGraph, commodities: Iterable[Commodity], max_hops: int) -> list[PathSet]:
    pathsets = [enumerate_paths(graph, commodity, max_hops) for commodity in commodities]
    logger.info(
        "Enumerated %d paths for %d commodities (max_hops=%d)",
        sum(len(ps) for ps in pathsets), len(pathsets), max_hops,
    )
    return pathsets


def paths_through_edge(pathset: PathSet, edge: Edge) -> list[int]:
    """Indices of the paths in ``pathset`` that use ``edge`` (P^k_(u,v))."""
    edge = (int(edge[0]), int(edge[1]))
    if edge not in pathset.graph_edges:
        raise UnknownEdge(f"edge {edge} is not in the graph")
    return list(pathset.index.get(edge, ()))


def format_pathsets(pathsets: Iterable[PathSet]) -> str:
    """Dump as ``commodity_id: n0->n1->...->nk`` lines."""
    lines = [f"{ps.commodity_id}: {path}" for ps in pathsets for path in ps.paths]
    return "\n".join(lines) + ("\n" if lines else "")
