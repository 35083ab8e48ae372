"""Clock abstraction shared by the dialogue executor and the controller sim.

A Clock provides monotonically nondecreasing time in seconds.  VirtualClock
advances only when told to, which makes timeline execution and controller
stepping fully deterministic in tests.  WallClock wraps the real monotonic
clock and sleeps with a short busy-wait tail so dispatch deadlines are hit
well inside the 10 ms scheduler tick.
"""

from __future__ import annotations

import time
from typing import Protocol


class Clock(Protocol):
    def now(self) -> float: ...

    def sleep_until(self, t: float) -> None: ...


class VirtualClock:
    """Deterministic clock: time moves only via sleep_until/advance."""

    def __init__(self, start: float = 0.0):
        self._t = float(start)

    def now(self) -> float:
        return self._t

    def sleep_until(self, t: float) -> None:
        if t > self._t:
            self._t = t

    def advance(self, dt: float) -> float:
        if dt < 0:
            raise ValueError("cannot move a clock backwards")
        self._t += dt
        return self._t


class WallClock:
    """Real monotonic clock with sub-millisecond sleep_until."""

    # Sleep in coarse chunks, then spin for the final stretch.  Plain
    # time.sleep overshoots by ~1ms on a loaded box, which would eat most
    # of the scheduler tick budget.
    _SPIN_WINDOW = 0.002

    def __init__(self):
        self._origin = time.monotonic()

    def now(self) -> float:
        return time.monotonic() - self._origin

    def sleep_until(self, t: float) -> None:
        while True:
            remaining = t - self.now()
            if remaining <= 0:
                return
            if remaining > self._SPIN_WINDOW:
                time.sleep(remaining - self._SPIN_WINDOW)
            else:
                # busy-wait tail
                while self.now() < t:
                    pass
                return
