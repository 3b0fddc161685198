"""Max-min residual-capacity LP and its simplex solver."""

from src.optimization.simplex import solve_lp, SimplexResult
from src.optimization.maxmin_lp import (
    LPModel,
    RoutingSolution,
    build_lp,
    solve_maxmin,
    flows_to_routing_table,
    residuals,
    edge_loads,
    binding_cut_hint,
    summarize,
)

__all__ = [
    "solve_lp",
    "SimplexResult",
    "LPModel",
    "RoutingSolution",
    "build_lp",
    "solve_maxmin",
    "flows_to_routing_table",
    "residuals",
    "edge_loads",
    "binding_cut_hint",
    "summarize",
]
