import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from acceptance_runner import AcceptanceRunner
from config import COMMODITY_COUNT, MODEM_SERVICE_RATE_PPS, OVERLOAD_HORIZON_S, OVERLOAD_WARMUP_FRAC
from src.metrics.queueing import fluid_limit_loss, fluid_window_loss


def test_large_buffer_window_starts_after_fill():
    runner = AcceptanceRunner(reps=2)
    scenario = runner._scenario(1_000_000, 10e9, 90_000, 2, long_window=True)
    assert scenario.horizon_s == OVERLOAD_HORIZON_S
    assert scenario.warmup_frac == OVERLOAD_WARMUP_FRAC
    assert scenario.mode == "baseline"

    arrival, service = COMMODITY_COUNT * 90_000, 2 * MODEM_SERVICE_RATE_PPS
    start = scenario.warmup_frac * scenario.horizon_s
    assert start > scenario.buffer_pkts / (arrival - service)
    window = fluid_window_loss(arrival, service, scenario.buffer_pkts, start, scenario.horizon_s)
    assert window == pytest.approx(fluid_limit_loss(arrival / service))
    assert 100 * window == pytest.approx(72.2, abs=0.1)


def test_long_window_runs_are_cached_apart():
    runner = AcceptanceRunner(reps=2)
    short = runner._scenario(1_000_000, 10e9, 90_000, 2)
    long = runner._scenario(1_000_000, 10e9, 90_000, 2, long_window=True)
    assert short.name != long.name
    assert short.horizon_s == runner.horizon_s


@pytest.mark.slow
def test_large_buffer_checks_pass_on_scaled_window():
    # 20k-packet buffer fills within 0.1 s at both rates for 2x, so [0.1, 0.2] sees steady loss
    runner = AcceptanceRunner(
        horizon_s=0.05,
        reps=2,
        lambdas=[60_000.0, 90_000.0],
        large_buffer=20_000,
        overload_horizon_s=0.2,
        overload_warmup_frac=0.5,
    )
    result = runner.check_large_buffer()
    assert all(result["checks"].values()), result["checks"]
    assert result["fluid_measured_pli"] == pytest.approx(72.2, abs=5.0)
