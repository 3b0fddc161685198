"""Schemas module for Pydantic models."""

from src.schemas.models import (
    Commodity,
    RouteEntry,
    RoutingTable,
    Scenario,
    ValidationReport,
    FlowCounts,
    RunMetrics,
    SampleStats,
    MetricsReport,
    SolverSummary,
    SweepSpec,
)

__all__ = [
    "Commodity",
    "RouteEntry",
    "RoutingTable",
    "Scenario",
    "ValidationReport",
    "FlowCounts",
    "RunMetrics",
    "SampleStats",
    "MetricsReport",
    "SolverSummary",
    "SweepSpec",
]
