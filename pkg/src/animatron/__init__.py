"""animatron: control stack for a tabletop expressive robot.

Subpackages:
  kinematics  - pose model, rotary Stewart-platform IK/FK, workspace analysis
  animation   - JSON keyframe clips with cubic Bezier interpolation
  dialogue    - tagged speech scripts, TTS + cache, visemes, timeline executor
  controller  - simulated six-servo motor controller (tick protocol, e-stop)
  server      - FastAPI bridge: REST control surface + per-robot WebSocket feed
"""

__version__ = "0.1.0"

from animatron.kinematics.pose import Pose6

__all__ = ["Pose6", "__version__"]
