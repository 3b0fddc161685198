"""
Key-value scenario documents.

One ``key = value`` per line, ``#`` starts a comment. Serialization writes the
mandatory keys in a fixed order, then ``name``, then optional keys only when
they differ from their defaults, so serialize -> parse -> serialize is
byte-identical.
"""

from pathlib import Path
from typing import Any, Callable

from pydantic import ValidationError

from src.schemas.models import Scenario
from src.utils.errors import ConfigParseError

# file key -> Scenario field
MANDATORY_KEYS: dict[str, str] = {
    "graph.rows": "rows",
    "graph.cols": "cols",
    "graph.link_rate_bps": "link_rate_bps",
    "commodities.count": "commodity_count",
    "commodities.placement_seed": "placement_seed",
    "lambda_pps": "lambda_pps",
    "packet_bytes": "packet_bytes",
    "mu_pps": "mu_pps",
    "service_dist": "service_dist",
    "buffer_pkts": "buffer_pkts",
    "max_hops": "max_hops",
    "horizon_s": "horizon_s",
    "warmup_frac": "warmup_frac",
    "reps": "reps",
    "seed": "seed",
    "mode": "mode",
    "baseline_multiplier": "baseline_multiplier",
}

OPTIONAL_KEYS: dict[str, str] = {
    "name": "name",
    "graph.edge_list": "edge_list",
    "commodities.pairs": "pairs",
    "commodities.rates_pps": "rates_pps",
    "transit_service": "transit_service",
    "check_invariants": "check_invariants",
}

_FLOAT_FIELDS = {"link_rate_bps", "lambda_pps", "mu_pps", "horizon_s", "warmup_frac"}
_BOOL_FIELDS = {"transit_service", "check_invariants"}


def _format_value(field: str, value: Any) -> str:
    if field in _FLOAT_FIELDS:
        return repr(float(value))
    if field in _BOOL_FIELDS:
        return "on" if value else "off"
    if field == "pairs":
        return ",".join(f"{s}-{t}" for s, t in value)
    if field == "rates_pps":
        return ",".join(repr(float(rate)) for rate in value)
    return str(value)


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("on", "true", "yes", "1"):
        return True
    if lowered in ("off", "false", "no", "0"):
        return False
    raise ValueError(f"expected on/off, got {text!r}")


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for item in text.split(","):
        source, destination = item.strip().split("-")
        pairs.append((int(source), int(destination)))
    return tuple(pairs)


def _parse_rates(text: str) -> tuple[float, ...]:
    return tuple(float(item) for item in text.split(","))


_PARSERS: dict[str, Callable[[str], Any]] = {
    "pairs": _parse_pairs,
    "rates_pps": _parse_rates,
    "transit_service": _parse_bool,
    "check_invariants": _parse_bool,
}


def serialize_scenario(scenario: Scenario) -> str:
    defaults = Scenario.model_fields
    lines = []
    for key, field in MANDATORY_KEYS.items():
        lines.append(f"{key} = {_format_value(field, getattr(scenario, field))}")
    lines.append(f"name = {scenario.name}")
    for key, field in OPTIONAL_KEYS.items():
        if field == "name":
            continue
        value = getattr(scenario, field)
        if value is None or value == defaults[field].default:
            continue
        lines.append(f"{key} = {_format_value(field, value)}")
    return "\n".join(lines) + "\n"


def parse_scenario(text: str) -> Scenario:
    """
    Raises:
        ConfigParseError: unknown or duplicate key, bad value, missing lambda_pps
    """
    known = {**MANDATORY_KEYS, **OPTIONAL_KEYS}
    values: dict[str, Any] = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError("expected 'key = value'", line_no, raw)
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise ConfigParseError(f"unknown key {key!r}", line_no, raw)
        field = known[key]
        if field in values:
            raise ConfigParseError(f"duplicate key {key!r}", line_no, raw)
        try:
            values[field] = _PARSERS[field](value) if field in _PARSERS else value
        except ValueError as e:
            raise ConfigParseError(f"bad value for {key} ({e})", line_no, raw) from e

    if "lambda_pps" not in values:
        raise ConfigParseError("missing required key 'lambda_pps'")
    try:
        return Scenario(**values)
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigParseError(f"{first['loc'][0]}: {first['msg']}") from e


def load_scenario(path: str | Path) -> Scenario:
    """Read a scenario file; a relative ``graph.edge_list`` is taken from the file's directory."""
    path = Path(path)
    scenario = parse_scenario(path.read_text(encoding="utf-8"))
    if scenario.edge_list and not Path(scenario.edge_list).is_absolute():
        scenario = scenario.model_copy(update={"edge_list": str(path.parent / scenario.edge_list)})
    return scenario


def save_scenario(scenario: Scenario, path: str | Path) -> None:
    Path(path).write_text(serialize_scenario(scenario), encoding="utf-8")
