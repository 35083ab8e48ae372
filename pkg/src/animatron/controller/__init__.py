from animatron.controller.calibration import ServoCalibration, angles_to_ticks, ticks_to_angles
from animatron.controller.protocol import FramingError, decode_frame, encode_frame
from animatron.controller.sim import ControllerState, ServoControllerSim

__all__ = [
    "ServoCalibration",
    "angles_to_ticks",
    "ticks_to_angles",
    "FramingError",
    "decode_frame",
    "encode_frame",
    "ControllerState",
    "ServoControllerSim",
]
