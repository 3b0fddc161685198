from sqlalchemy import Column, Integer, String, Float, ForeignKey, Index
from sqlalchemy.orm import declarative_base, relationship

Base = declarative_base()


class ScenarioRun(Base):
    __tablename__ = "scenario_runs"

    id = Column(Integer, primary_key=True)
    scenario_id = Column(String, nullable=False, index=True)
    mode = Column(String, nullable=False)
    baseline_multiplier = Column(Integer, default=1)

    lambda_pps = Column(Float, nullable=False)
    buffer_pkts = Column(Integer, nullable=False)
    link_rate_bps = Column(Float, nullable=False)
    reps = Column(Integer, default=0)
    base_seed = Column(String, nullable=True)

    delay_mean_s = Column(Float, nullable=True)
    delay_ci_s = Column(Float, nullable=True)
    pli_mean = Column(Float, nullable=True)
    pli_ci = Column(Float, nullable=True)
    pooled_pli = Column(Float, nullable=True)

    sweep_dimension = Column(String, nullable=True)
    sweep_value = Column(Float, nullable=True)
    error = Column(String, nullable=True)

    replications = relationship(
        "Replication", back_populates="scenario_run", cascade="all, delete-orphan", order_by="Replication.index"
    )


class Replication(Base):
    __tablename__ = "replications"

    id = Column(Integer, primary_key=True)
    scenario_run_id = Column(Integer, ForeignKey("scenario_runs.id"), index=True)
    index = Column(Integer, nullable=False)

    # seeds are u64, beyond SQLite's signed INTEGER
    seed = Column(String, nullable=False)
    offered = Column(Integer, default=0)
    delivered = Column(Integer, default=0)
    dropped = Column(Integer, default=0)
    in_flight = Column(Integer, default=0)
    mean_delay_s = Column(Float, nullable=True)
    pli = Column(Float, default=0.0)
    event_count = Column(Integer, default=0)

    scenario_run = relationship("ScenarioRun", back_populates="replications")


Index("idx_scenario_mode", ScenarioRun.scenario_id, ScenarioRun.mode)
