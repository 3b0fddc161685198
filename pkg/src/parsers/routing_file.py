"""
Routing-table files passed from ``solve`` to ``run``.

Text form, one route per line:

    commodity 3: 3->7->11, 0.500000000

Probabilities carry PROBABILITY_DECIMALS decimals. A ``.json`` file holds the
RoutingTable model dump instead, rounded the same way on save and on load so
both forms route a run identically.
"""

import re
from pathlib import Path

from pydantic import ValidationError

from config import PROBABILITY_DECIMALS
from src.schemas.models import RouteEntry, RoutingTable
from src.utils.errors import ConfigParseError

_LINE = re.compile(r"^commodity\s+(\d+)\s*:\s*(\d+(?:\s*->\s*\d+)+)\s*,\s*([0-9.eE+-]+)$")


def format_routing_table(table: RoutingTable) -> str:
    lines = ["# commodity k: node_seq, probability"]
    for k in table.commodity_ids():
        for entry in table.entries(k):
            nodes = "->".join(map(str, entry.nodes))
            lines.append(f"commodity {k}: {nodes}, {entry.probability:.{PROBABILITY_DECIMALS}f}")
    return "\n".join(lines) + "\n"


def parse_routing_table(text: str) -> RoutingTable:
    routes: dict[int, list[RouteEntry]] = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _LINE.match(line)
        if not match:
            raise ConfigParseError("expected 'commodity k: n0->n1->..., probability'", line_no, raw)
        k = int(match.group(1))
        nodes = tuple(int(node) for node in match.group(2).split("->"))
        try:
            entry = RouteEntry(nodes=nodes, probability=float(match.group(3)))
        except (ValueError, ValidationError) as e:
            raise ConfigParseError(f"bad route ({e})", line_no, raw) from e
        routes.setdefault(k, []).append(entry)
    return RoutingTable(routes={k: tuple(entries) for k, entries in routes.items()})


def canonical_routing_table(table: RoutingTable) -> RoutingTable:
    """The table exactly as ``run`` reads it back from a text file."""
    return parse_routing_table(format_routing_table(table))


def save_routing_table(table: RoutingTable, path: str | Path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(canonical_routing_table(table).model_dump_json(indent=2) + "\n", encoding="utf-8")
    else:
        path.write_text(format_routing_table(table), encoding="utf-8")


def load_routing_table(path: str | Path) -> RoutingTable:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        try:
            table = RoutingTable.model_validate_json(text)
        except ValidationError as e:
            raise ConfigParseError(f"bad routing JSON ({e.errors()[0]['msg']})") from e
        return canonical_routing_table(table)
    return parse_routing_table(text)
