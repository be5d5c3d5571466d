from __future__ import annotations

import threading
import time
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator

from gaussian_ideals.errors import BudgetExceededError

# deadline is only consulted every this many steps
_CLOCK_STRIDE = 256


class EffortBudget:
    """Caps the work of one scenario: reduction steps plus an optional wall-clock deadline."""

    def __init__(self, max_steps: int = 10_000_000, deadline_seconds: float | None = None) -> None:
        if max_steps <= 0:
            raise ValueError("max_steps must be positive")
        if deadline_seconds is not None and deadline_seconds <= 0:
            deadline_seconds = None
        self._max_steps = max_steps
        self._deadline_seconds = deadline_seconds
        self._lock = threading.Lock()
        self._steps = 0
        self._started = time.monotonic()

    @property
    def steps(self) -> int:
        return self._steps

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._started

    def spend(self, steps: int = 1) -> None:
        with self._lock:
            before = self._steps
            self._steps += steps
            if self._steps > self._max_steps:
                raise BudgetExceededError("reduction steps", self._max_steps)
            if self._deadline_seconds is None:
                return
            if before // _CLOCK_STRIDE != self._steps // _CLOCK_STRIDE:
                if time.monotonic() - self._started > self._deadline_seconds:
                    raise BudgetExceededError("wall-clock seconds", self._deadline_seconds)

    def check_clock(self) -> None:
        if self._deadline_seconds is not None and self.elapsed > self._deadline_seconds:
            raise BudgetExceededError("wall-clock seconds", self._deadline_seconds)


_ACTIVE: ContextVar[EffortBudget | None] = ContextVar("gaussian_ideals_budget", default=None)


def active_budget() -> EffortBudget | None:
    return _ACTIVE.get()


@contextmanager
def use_budget(budget: EffortBudget) -> Iterator[EffortBudget]:
    """Make ``budget`` the one charged by every Groebner computation inside the block."""
    token = _ACTIVE.set(budget)
    try:
        yield budget
    finally:
        _ACTIVE.reset(token)
