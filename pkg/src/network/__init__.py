"""Payload graph and path enumeration."""

from src.network.topology import (
    PayloadGraph,
    build_torus,
    validate_graph,
    parse_edge_list,
    format_edge_list,
    load_edge_list,
    save_edge_list,
)
from src.network.pathgen import Path, PathSet, enumerate_paths, enumerate_all, paths_through_edge, format_pathsets

__all__ = [
    "PayloadGraph",
    "build_torus",
    "validate_graph",
    "parse_edge_list",
    "format_edge_list",
    "load_edge_list",
    "save_edge_list",
    "Path",
    "PathSet",
    "enumerate_paths",
    "enumerate_all",
    "paths_through_edge",
    "format_pathsets",
]
