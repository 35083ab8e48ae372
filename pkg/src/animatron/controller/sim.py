"""Simulated six-servo motor controller.

Models the board as a latched state machine: commanded ticks, actual ticks
that slew toward them at a fixed rate, a torque-enable flag, and an e-stop
latch.  The simulation advances in fixed 1 ms steps driven externally
(advance_to), so tests under a virtual clock are bit-for-bit reproducible.

E-stop semantics: engaging latches the stop and cuts torque immediately
(actual ticks freeze within one step); the board keeps acknowledging every
frame while stopped, because the control channel is independent of motor
power.  Releasing the latch does not restore motion; an explicit "enable"
is required.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from animatron.controller.calibration import ServoCalibration
from animatron.controller.protocol import FramingError, decode_frame, encode_frame

SIM_STEP = 0.001  # seconds


@dataclass(frozen=True)
class ControllerState:
    commanded_ticks: tuple[int, ...]
    actual_ticks: tuple[float, ...]
    torque_enabled: bool
    estop_latched: bool
    slew_rate: float
    sim_time: float

    def to_dict(self) -> dict:
        return {
            "commanded_ticks": list(self.commanded_ticks),
            "actual_ticks": list(self.actual_ticks),
            "torque_enabled": self.torque_enabled,
            "estop_latched": self.estop_latched,
            "slew_rate": self.slew_rate,
            "sim_time": self.sim_time,
        }


class ServoControllerSim:
    """One controller instance per robot; thread-safe command ingestion."""

    def __init__(
        self,
        calibration: ServoCalibration | None = None,
        slew_rate: float = 600.0,
        torque_enabled: bool = True,
    ):
        self.calibration = calibration or ServoCalibration.default()
        if slew_rate <= 0:
            raise ValueError("slew_rate must be positive")
        self.slew_rate = float(slew_rate)
        self._lock = threading.Lock()
        center = float(self.calibration.center_tick)
        self._commanded = [self.calibration.center_tick] * 6
        self._actual = [center] * 6
        self._torque = torque_enabled
        self._latched = False
        self._sim_time = 0.0
        self.transcript: list[tuple[float, str, dict]] = []

    # -- simulation stepping ------------------------------------------------

    def advance_to(self, t: float) -> None:
        """Run whole 1 ms steps up to time t (never past it)."""
        with self._lock:
            self._advance_locked(t)

    def _advance_locked(self, t: float) -> None:
        steps = int((t - self._sim_time) / SIM_STEP + 1e-9)
        if steps <= 0:
            return
        # Motion toward a fixed target is linear, so N unit steps collapse
        # to one bounded move; e-stop/torque flags gate it entirely.
        if self._torque and not self._latched:
            limit = self.slew_rate * steps * SIM_STEP
            for i in range(6):
                delta = self._commanded[i] - self._actual[i]
                if delta > limit:
                    delta = limit
                elif delta < -limit:
                    delta = -limit
                self._actual[i] += delta
        self._sim_time += steps * SIM_STEP

    # -- frame handling -----------------------------------------------------

    def handle_line(self, line: str) -> str:
        """Process one wire frame, returning the reply line."""
        try:
            frame = decode_frame(line)
        except FramingError as e:
            with self._lock:
                self.transcript.append((self._sim_time, "error", {"line": line, "error": str(e)}))
            return encode_frame({"ok": False, "error": str(e)})
        return encode_frame(self.handle_frame(frame))

    def handle_frame(self, frame: dict) -> dict:
        cmd = frame["cmd"]
        with self._lock:
            self.transcript.append((self._sim_time, "rx", frame))
            if cmd == "move":
                lo, hi = self.calibration.min_tick, self.calibration.max_tick
                self._commanded = [min(hi, max(lo, t)) for t in frame["ticks"]]
                reply = {"ok": True, "cmd": "move", "commanded": list(self._commanded)}
            elif cmd == "estop":
                if frame["engaged"]:
                    self._latched = True
                    self._torque = False
                else:
                    self._latched = False  # torque stays off until "enable"
                reply = {"ok": True, "cmd": "estop", "latched": self._latched}
            elif cmd == "enable":
                if not self._latched:
                    self._torque = True
                reply = {"ok": True, "cmd": "enable", "torque": self._torque}
            else:  # state
                reply = {"ok": True, "cmd": "state", "state": self._state_locked().to_dict()}
            self.transcript.append((self._sim_time, "tx", reply))
            return reply

    # -- direct API (used by the engine; same semantics as frames) ----------

    def command(self, ticks) -> dict:
        return self.handle_frame({"cmd": "move", "ticks": [int(t) for t in ticks]})

    def estop(self, engaged: bool) -> dict:
        return self.handle_frame({"cmd": "estop", "engaged": engaged})

    def enable(self) -> dict:
        return self.handle_frame({"cmd": "enable"})

    def snapshot(self) -> ControllerState:
        with self._lock:
            return self._state_locked()

    def _state_locked(self) -> ControllerState:
        return ControllerState(
            commanded_ticks=tuple(self._commanded),
            actual_ticks=tuple(self._actual),
            torque_enabled=self._torque,
            estop_latched=self._latched,
            slew_rate=self.slew_rate,
            sim_time=self._sim_time,
        )

    def move_frames_sent(self) -> int:
        """Count of accepted move frames (test/assertion helper)."""
        with self._lock:
            return sum(1 for _, d, f in self.transcript if d == "rx" and f.get("cmd") == "move")
