"""Closed-form single-queue results used to validate the simulator."""

import math

from src.utils.errors import UnstableQueue


def mm1_mean_sojourn(lam: float, mu: float) -> float:
    """M/M/1 mean time in system, 1 / (mu - lambda)."""
    if lam >= mu:
        raise UnstableQueue(f"lambda {lam} >= mu {mu}")
    return 1.0 / (mu - lam)


def md1_mean_sojourn(lam: float, mu: float) -> float:
    """M/D/1 mean time in system (Pollaczek-Khinchine): (1/mu)(1 + rho / (2(1 - rho)))."""
    if lam >= mu:
        raise UnstableQueue(f"lambda {lam} >= mu {mu}")
    rho = lam / mu
    return (1.0 / mu) * (1.0 + rho / (2.0 * (1.0 - rho)))


def mm1k_blocking(rho: float, K: int) -> float:
    """
    M/M/1/K blocking probability (1 - rho) rho^K / (1 - rho^(K+1)).

    K counts the packet in service. For rho > 1 the algebraically equal form in
    1/rho is used so large K does not overflow.
    """
    if rho <= 0:
        return 0.0
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if abs(rho - 1.0) < 1e-12:
        return 1.0 / (K + 1)
    if rho < 1.0:
        return (1.0 - rho) * rho ** K / (1.0 - rho ** (K + 1))
    inv = 1.0 / rho
    return (1.0 - inv) / (1.0 - math.pow(inv, K + 1))


def fluid_limit_loss(rho: float) -> float:
    """Long-run loss fraction of an overloaded single server, 1 - 1/rho (0 when stable)."""
    return max(0.0, 1.0 - 1.0 / rho) if rho > 0 else 0.0


def fluid_window_loss(arrival: float, service: float, buffer: int, start: float, end: float) -> float:
    """
    Fluid-model loss fraction of packets offered in [start, end] to a queue that
    starts empty at t = 0.

    The queue grows at arrival - service until it holds ``buffer`` packets and
    drops the excess from then on. Approaches fluid_limit_loss as the window
    grows past the fill time.
    """
    if end <= start:
        raise ValueError(f"empty window [{start}, {end}]")
    excess = arrival - service
    if excess <= 0:
        return 0.0
    full_at = buffer / excess
    dropping = max(0.0, end - max(start, full_at))
    return excess * dropping / (arrival * (end - start))
