import os

from dotenv import load_dotenv

load_dotenv()

# Reference sweep parameters
PACKET_BYTES = 1500
COMMODITY_COUNT = 8
MODEM_SERVICE_RATE_PPS = 100_000.0
REFERENCE_LINK_RATES_BPS = (10e9, 1e9)
REFERENCE_BUFFERS = (10_000, 1_000_000)
REFERENCE_LAMBDAS_PPS = (30_000.0, 40_000.0, 50_000.0, 60_000.0, 70_000.0, 80_000.0, 90_000.0)
REFERENCE_TORUS = (4, 4)
BASELINE_MULTIPLIERS = (2, 4, 8)

# Optimization
DEFAULT_MAX_HOPS = 6
PRUNE_FRACTION = 1e-12
PROBABILITY_DECIMALS = 9

# Simulation
DEFAULT_HORIZON_S = 1.0
DEFAULT_WARMUP_FRAC = 0.1
DEFAULT_REPS = 10
DEFAULT_SEED = 20240901
DEFAULT_PLACEMENT_SEED = 0
CONFIDENCE_LEVEL = 0.95

# Large-buffer overload runs measure after the baseline buffer has filled
OVERLOAD_HORIZON_S = 20.0
OVERLOAD_WARMUP_FRAC = 0.5

# Optional environment overrides; nothing here is required
LOG_LEVEL = os.getenv("PAYLOAD_TE_LOG_LEVEL", "INFO")
RESULTS_DB_URL = os.getenv("PAYLOAD_TE_RESULTS_DB")
WORKERS = int(os.getenv("PAYLOAD_TE_WORKERS", "1"))
