"""Event calendar: a binary heap ordered by (time, insertion order)."""

import heapq
from typing import Any

from src.utils.errors import SimulationInvariantError


class EventCalendar:
    """Future event list with a total order on simultaneous events."""

    def __init__(self, check_causality: bool = False):
        self._queue: list[tuple[float, int, int, Any]] = []
        self._entry_order = 0
        self.now = 0.0
        self.processed = 0
        self.check_causality = check_causality

    def __len__(self) -> int:
        return len(self._queue)

    def schedule(self, time: float, kind: int, payload: Any = None) -> None:
        if self.check_causality and time < self.now:
            raise SimulationInvariantError(f"event at {time} scheduled in the past (now {self.now})")
        heapq.heappush(self._queue, (time, self._entry_order, kind, payload))
        self._entry_order += 1

    def next_time(self) -> float:
        return self._queue[0][0] if self._queue else float("inf")

    def pop(self) -> tuple[float, int, Any]:
        time, _, kind, payload = heapq.heappop(self._queue)
        self.now = time
        self.processed += 1
        return time, kind, payload
