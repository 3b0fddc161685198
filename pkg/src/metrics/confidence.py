"""Replication statistics with Student-t confidence intervals."""

import math
from typing import Sequence

import numpy as np
from scipy import stats

from config import CONFIDENCE_LEVEL
from src.schemas.models import SampleStats
from src.utils.errors import InsufficientSamples

# two-sided 95% quantiles for 1..120 degrees of freedom; normal value beyond
_T_TABLE: dict[int, float] = {
    df: float(stats.t.ppf(0.5 + CONFIDENCE_LEVEL / 2, df)) for df in range(1, 121)
}
_Z_QUANTILE = 1.96


def t_quantile(df: int) -> float:
    if df < 1:
        raise InsufficientSamples(f"need at least 1 degree of freedom, got {df}")
    return _T_TABLE.get(df, _Z_QUANTILE)


def confidence_interval(samples: Sequence[float]) -> SampleStats:
    """
    Sample mean with half-width t_{0.975, n-1} * s / sqrt(n).

    Raises:
        InsufficientSamples: fewer than two samples
    """
    values = np.asarray(samples, dtype=float)
    n = values.size
    if n < 2:
        raise InsufficientSamples(f"confidence interval needs >= 2 samples, got {n}")
    mean = float(values.mean())
    std = float(values.std(ddof=1))
    half_width = t_quantile(n - 1) * std / math.sqrt(n)
    return SampleStats(n=n, mean=mean, std=std, half_width=max(half_width, 0.0))
