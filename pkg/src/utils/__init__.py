"""Shared utilities."""

from src.utils.errors import (
    PayloadTEError,
    InvalidDimension,
    InvalidCapacity,
    NoPathFound,
    UnknownEdge,
    EmptyPathSet,
    Infeasible,
    InvalidScenario,
    RoutingMismatch,
    InsufficientSamples,
    UnstableQueue,
    ConfigParseError,
    SimulationInvariantError,
)

__all__ = [
    "PayloadTEError",
    "InvalidDimension",
    "InvalidCapacity",
    "NoPathFound",
    "UnknownEdge",
    "EmptyPathSet",
    "Infeasible",
    "InvalidScenario",
    "RoutingMismatch",
    "InsufficientSamples",
    "UnstableQueue",
    "ConfigParseError",
    "SimulationInvariantError",
]
