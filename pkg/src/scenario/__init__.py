"""Scenario assembly, presets and validation."""

from src.scenario.assembly import default_placement, build_graph, build_commodities, commodity_endpoints
from src.scenario.presets import reference_preset, baseline_single
from src.scenario.validation import validate, ensure_valid

__all__ = [
    "default_placement",
    "build_graph",
    "build_commodities",
    "commodity_endpoints",
    "reference_preset",
    "baseline_single",
    "validate",
    "ensure_valid",
]
