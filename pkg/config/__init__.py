from .config import (
    PACKET_BYTES,
    COMMODITY_COUNT,
    MODEM_SERVICE_RATE_PPS,
    REFERENCE_LINK_RATES_BPS,
    REFERENCE_BUFFERS,
    REFERENCE_LAMBDAS_PPS,
    REFERENCE_TORUS,
    BASELINE_MULTIPLIERS,
    DEFAULT_MAX_HOPS,
    PRUNE_FRACTION,
    PROBABILITY_DECIMALS,
    DEFAULT_HORIZON_S,
    DEFAULT_WARMUP_FRAC,
    DEFAULT_REPS,
    DEFAULT_SEED,
    DEFAULT_PLACEMENT_SEED,
    CONFIDENCE_LEVEL,
    OVERLOAD_HORIZON_S,
    OVERLOAD_WARMUP_FRAC,
    LOG_LEVEL,
    RESULTS_DB_URL,
    WORKERS,
)

__all__ = [
    "PACKET_BYTES",
    "COMMODITY_COUNT",
    "MODEM_SERVICE_RATE_PPS",
    "REFERENCE_LINK_RATES_BPS",
    "REFERENCE_BUFFERS",
    "REFERENCE_LAMBDAS_PPS",
    "REFERENCE_TORUS",
    "BASELINE_MULTIPLIERS",
    "DEFAULT_MAX_HOPS",
    "PRUNE_FRACTION",
    "PROBABILITY_DECIMALS",
    "DEFAULT_HORIZON_S",
    "DEFAULT_WARMUP_FRAC",
    "DEFAULT_REPS",
    "DEFAULT_SEED",
    "DEFAULT_PLACEMENT_SEED",
    "CONFIDENCE_LEVEL",
    "OVERLOAD_HORIZON_S",
    "OVERLOAD_WARMUP_FRAC",
    "LOG_LEVEL",
    "RESULTS_DB_URL",
    "WORKERS",
]
