"""File formats: scenario documents and routing tables."""

from src.parsers.scenario_file import parse_scenario, serialize_scenario, load_scenario, save_scenario
from src.parsers.routing_file import (
    format_routing_table,
    parse_routing_table,
    canonical_routing_table,
    save_routing_table,
    load_routing_table,
)

__all__ = [
    "parse_scenario",
    "serialize_scenario",
    "load_scenario",
    "save_scenario",
    "format_routing_table",
    "parse_routing_table",
    "canonical_routing_table",
    "save_routing_table",
    "load_routing_table",
]
