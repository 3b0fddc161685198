"""Exception hierarchy for the payload traffic-engineering engine."""

from typing import Optional


class PayloadTEError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDimension(PayloadTEError, ValueError):
    """Torus dimension below 2."""


class InvalidCapacity(PayloadTEError, ValueError):
    """Link capacity not strictly positive."""


class NoPathFound(PayloadTEError, ValueError):
    """No simple path within the hop bound joins a commodity's endpoints."""


class UnknownEdge(PayloadTEError, ValueError):
    """Edge queried on a path set is not part of the graph."""


class EmptyPathSet(PayloadTEError, ValueError):
    """A commodity reached the LP builder without any candidate path."""


class Infeasible(PayloadTEError):
    """No flow assignment satisfies demand, capacity and non-negativity."""

    def __init__(self, message: str, cut_hint: Optional[str] = None):
        super().__init__(message if cut_hint is None else f"{message} ({cut_hint})")
        self.cut_hint = cut_hint


class InvalidScenario(PayloadTEError, ValueError):
    """Scenario failed validation."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations) or "invalid scenario")
        self.violations = list(violations)


class RoutingMismatch(PayloadTEError, ValueError):
    """Routing table does not cover the scenario's commodities."""


class InsufficientSamples(PayloadTEError, ValueError):
    """Fewer than two samples for a confidence interval."""


class UnstableQueue(PayloadTEError, ValueError):
    """Arrival rate at or above service rate for a steady-state formula."""


class ConfigParseError(PayloadTEError, ValueError):
    """Malformed scenario, edge-list or routing file."""

    def __init__(self, message: str, line_no: Optional[int] = None, line: Optional[str] = None):
        where = f" at line {line_no}: {line!r}" if line_no is not None else ""
        super().__init__(f"{message}{where}")
        self.line_no = line_no
        self.line = line


class SimulationInvariantError(PayloadTEError, RuntimeError):
    """Internal simulation check failed (check mode only)."""
