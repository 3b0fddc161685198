"""Optimize -> simulate -> report pipeline."""

from src.pipeline.orchestrator import PipelineOrchestrator, SolveOutcome, apply_sweep_value
from src.pipeline.reporting import (
    RUN_COLUMNS,
    SWEEP_COLUMNS,
    run_rows,
    sweep_row,
    to_csv,
    reports_to_json,
    format_summary,
)

__all__ = [
    "PipelineOrchestrator",
    "SolveOutcome",
    "apply_sweep_value",
    "RUN_COLUMNS",
    "SWEEP_COLUMNS",
    "run_rows",
    "sweep_row",
    "to_csv",
    "reports_to_json",
    "format_summary",
]
