import logging
from typing import Optional

from sqlalchemy import create_engine, select
from sqlalchemy.orm import Session

from .db_models import Base, Replication, ScenarioRun
from src.schemas.models import MetricsReport, Scenario

logger = logging.getLogger(__name__)


class ResultsDatabase:
    def __init__(self, db_url: str, echo: bool = False):
        self.engine = create_engine(db_url, echo=echo)
        self.init_db()

    def init_db(self):
        # earlier results are kept
        Base.metadata.create_all(self.engine)

    def record_report(self, report: MetricsReport, scenario: Optional[Scenario] = None) -> int:
        """Store one aggregated report and its replications; returns the scenario_runs id."""
        with Session(self.engine) as session:
            row = ScenarioRun(
                scenario_id=report.scenario_id,
                mode=report.mode,
                baseline_multiplier=report.baseline_multiplier,
                lambda_pps=report.lambda_pps,
                buffer_pkts=report.buffer_pkts,
                link_rate_bps=report.link_rate_bps,
                reps=report.replications,
                base_seed=str(scenario.seed) if scenario is not None else None,
                delay_mean_s=report.delay.mean if report.delay else None,
                delay_ci_s=report.delay.half_width if report.delay else None,
                pli_mean=report.pli.mean if report.pli else None,
                pli_ci=report.pli.half_width if report.pli else None,
                pooled_pli=report.pooled_pli,
                sweep_dimension=report.sweep_dimension,
                sweep_value=report.sweep_value,
                error=report.error,
            )
            for i, run in enumerate(report.runs):
                row.replications.append(
                    Replication(
                        index=i,
                        seed=str(run.seed),
                        offered=run.aggregate.offered,
                        delivered=run.aggregate.delivered,
                        dropped=run.aggregate.dropped,
                        in_flight=run.aggregate.in_flight,
                        mean_delay_s=run.aggregate.mean_delay_s,
                        pli=run.aggregate.pli,
                        event_count=run.event_count,
                    )
                )
            session.add(row)
            session.commit()
            logger.debug("Stored %s with %d replications as row %d", report.scenario_id, len(report.runs), row.id)
            return row.id

    def fetch_reports(self, scenario_id: Optional[str] = None) -> list[dict]:
        with Session(self.engine) as session:
            stmt = select(ScenarioRun).order_by(ScenarioRun.id)
            if scenario_id is not None:
                stmt = stmt.where(ScenarioRun.scenario_id == scenario_id)

            result = []
            for row in session.scalars(stmt).all():
                result.append({
                    "id": row.id,
                    "scenario_id": row.scenario_id,
                    "mode": row.mode,
                    "baseline_multiplier": row.baseline_multiplier,
                    "lambda_pps": row.lambda_pps,
                    "buffer_pkts": row.buffer_pkts,
                    "link_rate_bps": row.link_rate_bps,
                    "reps": row.reps,
                    "base_seed": int(row.base_seed) if row.base_seed is not None else None,
                    "delay_mean_s": row.delay_mean_s,
                    "delay_ci_s": row.delay_ci_s,
                    "pli_mean": row.pli_mean,
                    "pli_ci": row.pli_ci,
                    "pooled_pli": row.pooled_pli,
                    "sweep_dimension": row.sweep_dimension,
                    "sweep_value": row.sweep_value,
                    "error": row.error,
                    "replications": [
                        {
                            "seed": int(rep.seed),
                            "offered": rep.offered,
                            "delivered": rep.delivered,
                            "dropped": rep.dropped,
                            "in_flight": rep.in_flight,
                            "mean_delay_s": rep.mean_delay_s,
                            "pli": rep.pli,
                        }
                        for rep in row.replications
                    ],
                })
            return result
