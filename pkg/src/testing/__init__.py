"""Brute-force oracles and random instances for the property tests."""

from .oracles import count_paths_dfs, grid_search_maxmin
from .instance_generator import InstanceGenerator, LPInstance

__all__ = ["count_paths_dfs", "grid_search_maxmin", "InstanceGenerator", "LPInstance"]
