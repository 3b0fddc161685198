"""Statistics and analytic queueing oracles."""

from src.metrics.confidence import confidence_interval, t_quantile
from src.metrics.queueing import (
    mm1_mean_sojourn,
    md1_mean_sojourn,
    mm1k_blocking,
    fluid_limit_loss,
    fluid_window_loss,
)

__all__ = [
    "confidence_interval",
    "t_quantile",
    "mm1_mean_sojourn",
    "md1_mean_sojourn",
    "mm1k_blocking",
    "fluid_limit_loss",
    "fluid_window_loss",
]
