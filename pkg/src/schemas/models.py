"""Pydantic models for the payload traffic-engineering engine."""

from typing import Optional, Literal
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Commodity(BaseModel):
    """Source-destination traffic demand (s^k, t^k, d^k)."""
    model_config = ConfigDict(frozen=True)

    id: int = Field(..., ge=0, description="Commodity index k")
    source: int = Field(..., ge=0, description="Source modem bank s^k")
    destination: int = Field(..., ge=0, description="Destination modem bank t^k")
    demand: float = Field(..., gt=0, description="Required data flow d^k in bits/s")

    @model_validator(mode="after")
    def _distinct_endpoints(self) -> "Commodity":
        if self.source == self.destination:
            raise ValueError(f"commodity {self.id}: source equals destination ({self.source})")
        return self


class RouteEntry(BaseModel):
    """One source route and the probability a packet takes it."""
    model_config = ConfigDict(frozen=True)

    nodes: tuple[int, ...] = Field(..., min_length=2, description="Node sequence from source to destination")
    probability: float = Field(..., ge=0.0, le=1.0)


class RoutingTable(BaseModel):
    """Per-commodity path split probabilities derived from LP flows."""
    model_config = ConfigDict(frozen=True)

    routes: dict[int, tuple[RouteEntry, ...]] = Field(default_factory=dict)

    def commodity_ids(self) -> list[int]:
        return sorted(self.routes)

    def entries(self, commodity_id: int) -> tuple[RouteEntry, ...]:
        return self.routes.get(commodity_id, ())


class Scenario(BaseModel):
    """
    Full simulation configuration.

    Field types are enforced on construction; semantic checks (positive rates,
    endpoints inside the graph, warm-up range) are reported by
    ``src.scenario.validation.validate`` so that a bad scenario can be inspected
    rather than rejected outright.
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field("scenario", description="Scenario identifier used in reports")

    # graph
    rows: int = Field(4, description="Torus rows")
    cols: int = Field(4, description="Torus columns")
    link_rate_bps: float = Field(10e9, description="Inter-modem link data rate c(u,v)")
    edge_list: Optional[str] = Field(None, description="Edge-list file replacing the torus")

    # commodities
    commodity_count: int = Field(8, description="Number of commodities k")
    placement_seed: int = Field(0, description="Seed of the default endpoint permutation")
    pairs: Optional[tuple[tuple[int, int], ...]] = Field(None, description="Explicit (source, destination) pairs")
    rates_pps: Optional[tuple[float, ...]] = Field(None, description="Per-commodity arrival rates")

    # traffic and service
    lambda_pps: float = Field(..., description="Per-commodity Poisson arrival rate")
    packet_bytes: int = Field(1500, description="Average packet size")
    mu_pps: float = Field(100_000.0, description="Modem service rate")
    service_dist: Literal["exponential", "deterministic"] = "exponential"
    buffer_pkts: int = Field(1_000_000, description="Buffer capacity per station, including the one in service")

    # optimization and run control
    max_hops: int = 6
    horizon_s: float = 1.0
    warmup_frac: float = 0.1
    reps: int = 10
    seed: int = 20240901
    mode: Literal["proposed", "baseline"] = "proposed"
    baseline_multiplier: int = 1
    transit_service: bool = False
    check_invariants: bool = False

    @property
    def packet_bits(self) -> int:
        return self.packet_bytes * 8

    @property
    def node_count(self) -> int:
        return self.rows * self.cols

    def commodity_rates(self) -> list[float]:
        """Arrival rate of every commodity in packets/s."""
        if self.rates_pps is not None:
            return list(self.rates_pps)
        count = len(self.pairs) if self.pairs is not None else self.commodity_count
        return [self.lambda_pps] * count

    def demand_bps(self, rate_pps: float) -> float:
        """d^k = arrival rate x packet size x 8."""
        return rate_pps * self.packet_bits


class ValidationReport(BaseModel):
    """Outcome of a structural or semantic check."""
    violations: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class FlowCounts(BaseModel):
    """Packet accounting for one commodity or for the aggregate of a run."""
    offered: int = 0
    delivered: int = 0
    dropped: int = 0
    in_flight: int = 0
    mean_delay_s: Optional[float] = Field(None, description="Absent when nothing was delivered")
    pli: float = Field(0.0, description="100 x dropped / offered")


class RunMetrics(BaseModel):
    """Metrics of one simulation run."""
    seed: int
    per_commodity: dict[int, FlowCounts]
    aggregate: FlowCounts
    event_count: int = 0
    max_occupancy: int = Field(0, description="Largest queue occupancy seen at any station")


class SampleStats(BaseModel):
    """Mean and Student-t confidence half-width of replication samples."""
    n: int
    mean: float
    std: float
    half_width: float = Field(..., ge=0.0)


class MetricsReport(BaseModel):
    """Replication-aggregated delay and loss for one scenario point."""
    scenario_id: str
    mode: str
    baseline_multiplier: int
    lambda_pps: float
    buffer_pkts: int
    link_rate_bps: float
    replications: int
    delay: Optional[SampleStats] = None
    pli: Optional[SampleStats] = None
    pooled_pli: Optional[float] = None
    runs: list[RunMetrics] = Field(default_factory=list)
    sweep_dimension: Optional[str] = None
    sweep_value: Optional[float] = None
    error: Optional[str] = None


class SolverSummary(BaseModel):
    """What ``solve`` reports next to the routing table."""
    objective_bps: float
    min_residual_edge: tuple[int, int]
    residuals: list[tuple[int, int, float]]
    variables: int
    path_counts: dict[int, int]


SweepDimension = Literal["lambda", "buffer", "link_rate", "baseline_multiplier"]


class SweepSpec(BaseModel):
    """A base scenario and the values of one swept dimension."""
    base: Scenario
    dimension: SweepDimension
    values: list[float]
    output_path: Optional[str] = None

    @field_validator("values")
    @classmethod
    def _non_empty(cls, values: list[float]) -> list[float]:
        if not values:
            raise ValueError("sweep value list is empty")
        return values

    @model_validator(mode="after")
    def _values_fit_dimension(self) -> "SweepSpec":
        for value in self.values:
            if self.dimension in ("buffer", "baseline_multiplier"):
                if value < 1 or value != int(value):
                    raise ValueError(f"{self.dimension} value {value} is not a positive integer")
            elif value <= 0:
                raise ValueError(f"{self.dimension} value {value} is not positive")
        return self
