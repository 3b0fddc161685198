"""Reference-sweep presets and the centralized single-modem-bank baseline."""

from config import (
    COMMODITY_COUNT,
    DEFAULT_HORIZON_S,
    DEFAULT_MAX_HOPS,
    DEFAULT_PLACEMENT_SEED,
    DEFAULT_REPS,
    DEFAULT_SEED,
    DEFAULT_WARMUP_FRAC,
    MODEM_SERVICE_RATE_PPS,
    PACKET_BYTES,
    REFERENCE_LAMBDAS_PPS,
    REFERENCE_TORUS,
)
from src.schemas.models import Scenario


def _rate_label(link_rate: float) -> str:
    return f"{link_rate / 1e9:g}G"


def reference_preset(
    buffer: int,
    link_rate: float,
    lam: float,
    allow_custom_lambda: bool = False,
) -> Scenario:
    """
    4x4 torus, 8 commodities, 1500-byte packets, modem rate 100 000 packets/s.

    Args:
        buffer: Buffer size in packets (10^4 or 10^6 in the reference sweeps)
        link_rate: Inter-modem link rate in bits/s (10 or 1 Gbit/s)
        lam: Per-commodity arrival rate in packets/s
        allow_custom_lambda: Accept arrival rates outside the reference sweep
    """
    if not allow_custom_lambda and float(lam) not in REFERENCE_LAMBDAS_PPS:
        raise ValueError(
            f"lambda {lam} is not a reference sweep value {REFERENCE_LAMBDAS_PPS}; pass allow_custom_lambda=True"
        )
    rows, cols = REFERENCE_TORUS
    return Scenario(
        name=f"ref-b{buffer}-c{_rate_label(link_rate)}-l{int(lam)}",
        rows=rows,
        cols=cols,
        link_rate_bps=float(link_rate),
        commodity_count=COMMODITY_COUNT,
        placement_seed=DEFAULT_PLACEMENT_SEED,
        lambda_pps=float(lam),
        packet_bytes=PACKET_BYTES,
        mu_pps=MODEM_SERVICE_RATE_PPS,
        service_dist="exponential",
        buffer_pkts=int(buffer),
        max_hops=DEFAULT_MAX_HOPS,
        horizon_s=DEFAULT_HORIZON_S,
        warmup_frac=DEFAULT_WARMUP_FRAC,
        reps=DEFAULT_REPS,
        seed=DEFAULT_SEED,
        mode="proposed",
        baseline_multiplier=1,
    )


def baseline_single(multiplier: int, base: Scenario) -> Scenario:
    """
    Centralized payload: every commodity arrives at one modem station serving
    at multiplier x mu with the base buffer. There is a single path, so no
    routing table is involved.
    """
    if multiplier < 1:
        raise ValueError(f"baseline multiplier must be >= 1, got {multiplier}")
    return base.model_copy(
        update={
            "name": f"{base.name}-baseline{multiplier}x",
            "mode": "baseline",
            "baseline_multiplier": int(multiplier),
        }
    )
