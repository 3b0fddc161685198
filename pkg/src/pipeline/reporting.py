"""
CSV and JSON emission for run and sweep results.

Column orders below are the documented schema; new columns may only be
appended.
"""

import csv
import io
import json
from typing import Iterable, Optional, Sequence

from src.schemas.models import MetricsReport, SampleStats

RUN_COLUMNS: tuple[str, ...] = (
    "scenario_id",
    "seed",
    "lambda_pps",
    "buffer_pkts",
    "link_rate_bps",
    "mean_delay_s",
    "pli",
    "offered",
    "delivered",
    "dropped",
)

SWEEP_COLUMNS: tuple[str, ...] = (
    "sweep_dimension",
    "sweep_value",
    "scenario_id",
    "mode",
    "baseline_multiplier",
    "lambda_pps",
    "buffer_pkts",
    "link_rate_bps",
    "replications",
    "delay_mean_s",
    "delay_ci_s",
    "pli_mean",
    "pli_ci",
    "pooled_pli",
    "error",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def run_rows(report: MetricsReport) -> list[dict]:
    """One row per replication."""
    return [
        {
            "scenario_id": report.scenario_id,
            "seed": run.seed,
            "lambda_pps": report.lambda_pps,
            "buffer_pkts": report.buffer_pkts,
            "link_rate_bps": report.link_rate_bps,
            "mean_delay_s": run.aggregate.mean_delay_s,
            "pli": run.aggregate.pli,
            "offered": run.aggregate.offered,
            "delivered": run.aggregate.delivered,
            "dropped": run.aggregate.dropped,
        }
        for run in report.runs
    ]


def _stat(stats: Optional[SampleStats], attr: str):
    return getattr(stats, attr) if stats is not None else None


def sweep_row(report: MetricsReport) -> dict:
    """One aggregated row for a sweep point; failed points carry only ids and the error."""
    return {
        "sweep_dimension": report.sweep_dimension,
        "sweep_value": report.sweep_value,
        "scenario_id": report.scenario_id,
        "mode": report.mode,
        "baseline_multiplier": report.baseline_multiplier,
        "lambda_pps": report.lambda_pps,
        "buffer_pkts": report.buffer_pkts,
        "link_rate_bps": report.link_rate_bps,
        "replications": report.replications if report.error is None else None,
        "delay_mean_s": _stat(report.delay, "mean"),
        "delay_ci_s": _stat(report.delay, "half_width"),
        "pli_mean": _stat(report.pli, "mean"),
        "pli_ci": _stat(report.pli, "half_width"),
        "pooled_pli": report.pooled_pli if report.error is None else None,
        "error": report.error,
    }


def to_csv(rows: Iterable[dict], columns: Sequence[str], header: bool = True) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


def reports_to_json(reports: Sequence[MetricsReport]) -> str:
    return json.dumps([report.model_dump(mode="json") for report in reports], indent=2) + "\n"


def format_summary(report: MetricsReport) -> str:
    """Human-readable lines for stdout."""
    lines = [
        f"Scenario: {report.scenario_id} ({report.mode}"
        + (f", {report.baseline_multiplier}x" if report.mode == "baseline" else "")
        + ")",
        f"Replications: {report.replications}",
    ]
    if report.delay is not None:
        lines.append(f"Mean delay: {report.delay.mean:.6g} s +/- {report.delay.half_width:.3g} (95% CI)")
    else:
        lines.append("Mean delay: n/a (no delivered packets)")
    if report.pli is not None:
        lines.append(f"PLI: {report.pli.mean:.4f}% +/- {report.pli.half_width:.4f} (95% CI)")
    if report.pooled_pli is not None:
        lines.append(f"Pooled PLI: {report.pooled_pli:.4f}%")
    return "\n".join(lines)
