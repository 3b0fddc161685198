import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from config import REFERENCE_BUFFERS, REFERENCE_LAMBDAS_PPS, REFERENCE_LINK_RATES_BPS
from src.parsers.routing_file import (
    canonical_routing_table,
    format_routing_table,
    load_routing_table,
    parse_routing_table,
    save_routing_table,
)
from src.parsers.scenario_file import load_scenario, parse_scenario, serialize_scenario
from src.scenario.assembly import build_commodities, build_graph, default_placement
from src.scenario.presets import baseline_single, reference_preset
from src.scenario.validation import ensure_valid, validate
from src.schemas.models import RouteEntry, RoutingTable, Scenario
from src.utils.errors import ConfigParseError, InvalidScenario


@pytest.mark.parametrize("buffer", REFERENCE_BUFFERS)
@pytest.mark.parametrize("link_rate", REFERENCE_LINK_RATES_BPS)
def test_presets_validate(buffer, link_rate):
    for lam in REFERENCE_LAMBDAS_PPS:
        report = validate(reference_preset(buffer, link_rate, lam))
        assert report.ok, report.violations


def test_preset_values():
    scenario = reference_preset(10_000, 1e9, 90_000)
    assert (scenario.rows, scenario.cols, scenario.commodity_count) == (4, 4, 8)
    assert scenario.packet_bytes == 1500
    assert scenario.mu_pps == 100_000.0
    assert scenario.name == "ref-b10000-c1G-l90000"
    graph = build_graph(scenario)
    assert all(c.demand == 90_000 * 1500 * 8 for c in build_commodities(scenario, graph))


def test_preset_rejects_unknown_lambda():
    with pytest.raises(ValueError):
        reference_preset(10_000, 10e9, 35_000)
    assert reference_preset(10_000, 10e9, 35_000, allow_custom_lambda=True).lambda_pps == 35_000


def test_baseline_single():
    scenario = baseline_single(4, reference_preset(1_000_000, 10e9, 30_000))
    assert scenario.mode == "baseline"
    assert scenario.baseline_multiplier == 4
    assert scenario.buffer_pkts == 1_000_000
    assert validate(scenario).ok
    with pytest.raises(ValueError):
        baseline_single(0, scenario)


def test_baseline_overload_is_a_warning():
    report = validate(baseline_single(2, reference_preset(1_000_000, 10e9, 90_000)))
    assert report.ok
    assert any("utilization 3.600" in w for w in report.warnings)


def test_default_placement():
    pairs = default_placement(8, 16, 0)
    assert [s for s, _ in pairs] == list(range(8))
    assert sorted(t for _, t in pairs) == list(range(8, 16))
    assert default_placement(8, 16, 0) == pairs
    with pytest.raises(InvalidScenario):
        default_placement(9, 16, 0)


@pytest.mark.parametrize(
    "update, message",
    [
        ({"lambda_pps": -5.0}, "nonpositive rate"),
        ({"lambda_pps": 0.0}, "nonpositive rate"),
        ({"pairs": ((0, 99),)}, "unknown node"),
        ({"pairs": ((3, 3),)}, "source equals destination"),
        ({"warmup_frac": 0.7}, "warm-up"),
        ({"reps": 1}, "replication count"),
        ({"rows": 1}, "torus dimensions"),
        ({"buffer_pkts": 0}, "buffer"),
        ({"commodity_count": 9}, "default placement"),
        ({"rates_pps": (1.0, 2.0)}, "rates for"),
    ],
)
def test_violations(update, message):
    scenario = Scenario(name="base", lambda_pps=30_000.0).model_copy(update=update)
    report = validate(scenario)
    assert not report.ok
    assert any(message in v for v in report.violations), report.violations
    with pytest.raises(InvalidScenario):
        ensure_valid(scenario)


def test_idle_allowed_only_on_request():
    scenario = Scenario(name="idle", lambda_pps=0.0)
    assert validate(scenario, allow_idle=True).ok


def test_cut_warning():
    scenario = Scenario(name="thin", lambda_pps=30_000.0, link_rate_bps=1e3)
    report = validate(scenario)
    assert report.ok
    assert any("cut capacity" in w for w in report.warnings)


def test_scenario_round_trip_is_byte_identical():
    scenarios = [
        reference_preset(10_000, 1e9, 60_000),
        baseline_single(8, reference_preset(1_000_000, 10e9, 90_000)),
        Scenario(
            name="custom",
            rows=3,
            cols=5,
            pairs=((0, 7), (4, 12)),
            rates_pps=(1000.0, 2500.5),
            lambda_pps=1.0,
            transit_service=True,
            check_invariants=True,
            service_dist="deterministic",
        ),
    ]
    for scenario in scenarios:
        text = serialize_scenario(scenario)
        parsed = parse_scenario(text)
        assert parsed == scenario
        assert serialize_scenario(parsed) == text


def test_scenario_key_order():
    keys = [line.split(" = ")[0] for line in serialize_scenario(reference_preset(10_000, 1e9, 60_000)).splitlines()]
    assert keys[:3] == ["graph.rows", "graph.cols", "graph.link_rate_bps"]
    assert keys.index("lambda_pps") < keys.index("buffer_pkts") < keys.index("mode")


def test_scenario_comments_and_blank_lines():
    text = "# preset\n\nlambda_pps = 30000  # per commodity\nbuffer_pkts = 10000\n"
    scenario = parse_scenario(text)
    assert scenario.lambda_pps == 30_000.0
    assert scenario.buffer_pkts == 10_000


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("lambda_pps = 1\nbogus = 3\n", 2),
        ("lambda_pps = 1\nlambda_pps = 2\n", 2),
        ("lambda_pps 30000\n", 1),
        ("lambda_pps = 1\ntransit_service = maybe\n", 2),
    ],
)
def test_scenario_parse_errors(text, line_no):
    with pytest.raises(ConfigParseError) as info:
        parse_scenario(text)
    assert info.value.line_no == line_no


def test_scenario_requires_lambda():
    with pytest.raises(ConfigParseError):
        parse_scenario("buffer_pkts = 10\n")
    with pytest.raises(ConfigParseError):
        parse_scenario("lambda_pps = 1\nmode = sideways\n")


def table() -> RoutingTable:
    return RoutingTable(routes={
        0: (RouteEntry(nodes=(0, 1, 3), probability=0.25), RouteEntry(nodes=(0, 2, 3), probability=0.75)),
        1: (RouteEntry(nodes=(1, 0), probability=1.0),),
    })


def test_routing_text_format():
    text = format_routing_table(table())
    assert "commodity 0: 0->1->3, 0.250000000" in text.splitlines()
    assert parse_routing_table(text) == table()


def test_routing_parse_error():
    with pytest.raises(ConfigParseError) as info:
        parse_routing_table("commodity 0: 0->1, 1.0\ncommodity 1 0->1, 1.0\n")
    assert info.value.line_no == 2
    with pytest.raises(ConfigParseError):
        parse_routing_table("commodity 0: 0->1, 1.5\n")


@pytest.mark.parametrize("name", ["routing.txt", "routing.json"])
def test_routing_files(tmp_path, name):
    path = tmp_path / name
    save_routing_table(table(), path)
    assert load_routing_table(path) == table()


def test_routing_json_rounds_like_text(tmp_path):
    thirds = RoutingTable(routes={
        0: (RouteEntry(nodes=(0, 1, 3), probability=1 / 3), RouteEntry(nodes=(0, 2, 3), probability=2 / 3)),
    })
    path = tmp_path / "hand.json"
    path.write_text(thirds.model_dump_json(), encoding="utf-8")
    loaded = load_routing_table(path)
    assert loaded == canonical_routing_table(thirds)
    assert loaded.entries(0)[0].probability == 0.333333333

    saved = tmp_path / "saved.json"
    save_routing_table(thirds, saved)
    assert "0.333333333" in saved.read_text()
    assert load_routing_table(saved) == load_routing_table(path)


SAMPLES = Path(__file__).parent / "data" / "scenarios"


@pytest.mark.parametrize("name", ["ref_b1e6_10g_l30k.cfg", "ref_b1e4_10g_l90k_baseline2x.cfg"])
def test_sample_presets_are_canonical(name):
    text = (SAMPLES / name).read_text(encoding="utf-8")
    scenario = parse_scenario(text)
    assert serialize_scenario(scenario) == text
    assert validate(scenario).ok


def test_sample_custom_graph(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    scenario = load_scenario(SAMPLES / "ring6_custom.cfg")
    assert Path(scenario.edge_list) == SAMPLES / "ring6.edges"
    assert scenario.transit_service
    assert validate(scenario).ok
    graph = build_graph(scenario)
    assert graph.node_count == 6
    commodities = build_commodities(scenario, graph)
    assert [(c.source, c.destination) for c in commodities] == [(1, 4), (2, 5)]
    assert commodities[1].demand == 40_000 * 12_000
