"""
Payload graph construction and validation.

Modem banks are vertices 0..N-1; inter-modem links are directed edges with a
data rate c(u,v) in bits/s. On a torus, node (r, c) has id r * cols + c.
"""

import logging
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional

import networkx as nx

from src.schemas.models import ValidationReport
from src.utils.errors import ConfigParseError, InvalidCapacity, InvalidDimension

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class PayloadGraph:
    """Directed graph of modem banks with per-edge capacity."""

    def __init__(
        self,
        node_count: int,
        edges: Iterable[tuple[int, int, float]],
        rows: Optional[int] = None,
        cols: Optional[int] = None,
    ):
        """
        Args:
            node_count: Number of modem banks; nodes are 0..node_count-1
            edges: Directed (u, v, capacity_bits_per_s) triples, kept in the given order
            rows: Torus rows when built by ``build_torus``
            cols: Torus columns when built by ``build_torus``
        """
        self.node_count = node_count
        self.edges: tuple[tuple[int, int, float], ...] = tuple(
            (int(u), int(v), float(cap)) for u, v, cap in edges
        )
        self.rows = rows
        self.cols = cols
        self._capacity: dict[Edge, float] = {(u, v): cap for u, v, cap in self.edges}

    def __repr__(self) -> str:
        return f"PayloadGraph(nodes={self.node_count}, edges={len(self.edges)})"

    @property
    def nodes(self) -> list[int]:
        return list(range(self.node_count))

    @cached_property
    def edge_keys(self) -> tuple[Edge, ...]:
        """Distinct directed edges in sorted order; the canonical LP row order."""
        return tuple(sorted(self._capacity))

    @cached_property
    def adjacency(self) -> dict[int, tuple[Edge, ...]]:
        """Node -> outgoing edges."""
        index: dict[int, list[Edge]] = {node: [] for node in self.nodes}
        for u, v in self.edge_keys:
            index.setdefault(u, []).append((u, v))
        return {node: tuple(out) for node, out in index.items()}

    @cached_property
    def digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        for (u, v), cap in sorted(self._capacity.items()):
            graph.add_edge(u, v, capacity=cap)
        return graph

    def has_edge(self, edge: Edge) -> bool:
        return edge in self._capacity

    def capacity(self, u: int, v: int) -> float:
        return self._capacity[(u, v)]

    def out_degree(self, node: int) -> int:
        return len(self.adjacency.get(node, ()))

    def in_degree(self, node: int) -> int:
        return sum(1 for _, v in self.edge_keys if v == node)

    def node_id(self, r: int, c: int) -> int:
        if self.cols is None:
            raise ValueError("graph has no torus coordinates")
        return r * self.cols + c

    def coordinates(self, node: int) -> tuple[int, int]:
        if self.cols is None:
            raise ValueError("graph has no torus coordinates")
        return divmod(node, self.cols)

    def hop_distances(self, source: int) -> dict[int, int]:
        """BFS hop count from ``source`` to every reachable node."""
        return dict(nx.single_source_shortest_path_length(self.digraph, source))

    def diameter(self) -> int:
        return nx.diameter(self.digraph)


def build_torus(rows: int, cols: int, link_rate: float) -> PayloadGraph:
    """
    Build a rows x cols torus of modem banks.

    Each node links to its wrap-around neighbours in both dimensions with a
    directed edge pair. In a dimension of size 2 both wrap neighbours are the
    same node and the duplicate edge is merged.

    Raises:
        InvalidDimension: rows or cols below 2
        InvalidCapacity: link_rate not positive
    """
    if rows < 2 or cols < 2:
        raise InvalidDimension(f"torus dimensions must be >= 2, got {rows}x{cols}")
    if not link_rate > 0:
        raise InvalidCapacity(f"link rate must be positive, got {link_rate}")

    edges: set[Edge] = set()
    for r in range(rows):
        for c in range(cols):
            u = r * cols + c
            for nr, nc in (
                ((r - 1) % rows, c),
                ((r + 1) % rows, c),
                (r, (c - 1) % cols),
                (r, (c + 1) % cols),
            ):
                edges.add((u, nr * cols + nc))

    graph = PayloadGraph(
        rows * cols,
        ((u, v, link_rate) for u, v in sorted(edges)),
        rows=rows,
        cols=cols,
    )
    logger.debug("Built %dx%d torus: %d nodes, %d edges", rows, cols, graph.node_count, len(graph.edges))
    return graph


def validate_graph(graph: PayloadGraph) -> ValidationReport:
    """Report the first violated structural invariant, or an empty report."""
    seen: set[Edge] = set()
    for u, v, cap in graph.edges:
        if not (0 <= u < graph.node_count and 0 <= v < graph.node_count):
            return ValidationReport(violations=[f"dangling node reference: edge ({u},{v})"])
        if u == v:
            return ValidationReport(violations=[f"self-loop: edge ({u},{v})"])
        if (u, v) in seen:
            return ValidationReport(violations=[f"duplicate edge: ({u},{v})"])
        if not cap > 0:
            return ValidationReport(violations=[f"nonpositive capacity: edge ({u},{v}) has {cap}"])
        seen.add((u, v))
    return ValidationReport()


def _format_number(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def format_edge_list(graph: PayloadGraph) -> str:
    lines = [f"# {graph.node_count} nodes, {len(graph.edges)} directed edges", "# u v capacity_bits_per_s"]
    lines.extend(f"{u} {v} {_format_number(cap)}" for u, v, cap in graph.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> PayloadGraph:
    """Parse ``u v capacity`` lines; node count is the largest id plus one."""
    edges: list[tuple[int, int, float]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ConfigParseError("expected 'u v capacity'", line_no, raw)
        try:
            edges.append((int(parts[0]), int(parts[1]), float(parts[2])))
        except ValueError as e:
            raise ConfigParseError(f"bad number ({e})", line_no, raw) from e
    if not edges:
        raise ConfigParseError("edge list has no edges")
    node_count = max(max(u, v) for u, v, _ in edges) + 1
    return PayloadGraph(node_count, edges)


def load_edge_list(path: str | Path) -> PayloadGraph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def save_edge_list(graph: PayloadGraph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(graph), encoding="utf-8")
