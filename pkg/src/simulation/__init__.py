"""Discrete-event queueing simulation of the payload."""

from src.simulation.streams import split_seed, spawn_streams, RandomStream
from src.simulation.events import EventCalendar
from src.simulation.queuesim import Station, Packet, simulate, run_replications, aggregate_runs, build_plan

__all__ = [
    "split_seed",
    "spawn_streams",
    "RandomStream",
    "EventCalendar",
    "Station",
    "Packet",
    "simulate",
    "run_replications",
    "aggregate_runs",
    "build_plan",
]
