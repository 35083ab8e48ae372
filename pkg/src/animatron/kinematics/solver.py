"""Closed-form inverse kinematics, Newton forward kinematics, pose validation.

Per leg the IK problem is the intersection of the circle swept by the horn
tip with the sphere of rod length around the platform anchor.  Writing
L = anchor - shaft for the leg vector and expanding |L - horn_tip|^2 = rod^2
gives a single harmonic equation in the horn angle,

    e sin(a) + f cos(a) = g
    e = 2 h s Lz          (s: horn direction, +/-1)
    f = 2 h (Lx cos(beta) + Ly sin(beta))
    g = |L|^2 + h^2 - rod^2

solved by a = asin(g / hypot(e, f)) - atan2(f, e).  The equation has two
mathematical branches; the one continuous with the home solution (horn near
horizontal) is the asin branch for +1 servos and its reflection for -1
servos, assuming the platform anchor stays above the horn plane, which
holds for this robot class throughout the workspace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from animatron.kinematics.geometry import PlatformGeometry
from animatron.kinematics.pose import Pose6, normalize_angle, rotation_matrix, rotation_partials


class KinematicsError(Exception):
    """Base class for kinematic solver failures."""


class UnreachableError(KinematicsError):
    """No real horn angle puts the rod on the platform anchor."""

    def __init__(self, leg: int, detail: str = ""):
        self.leg = leg
        super().__init__(f"leg {leg} unreachable" + (f": {detail}" if detail else ""))


class OutOfRangeError(KinematicsError):
    """The solution exists but falls outside the servo range."""

    def __init__(self, leg: int, angle: float, lo: float, hi: float):
        self.leg = leg
        self.angle = angle
        super().__init__(
            f"leg {leg} angle {math.degrees(angle):.1f} deg outside "
            f"[{math.degrees(lo):.1f}, {math.degrees(hi):.1f}] deg"
        )


class NoConvergenceError(KinematicsError):
    """Newton iteration failed; angle set unreachable or guess too far off."""


def platform_anchors_at(pose: Pose6, geom: PlatformGeometry) -> np.ndarray:
    """Platform anchor positions in the base frame for a given pose."""
    r = rotation_matrix(pose.roll, pose.pitch, pose.yaw)
    center = np.array([pose.x, pose.y, geom.home_height + pose.z])
    return center + geom.platform_anchors @ r.T


def horn_tip(geom: PlatformGeometry, leg: int, alpha: float) -> np.ndarray:
    """Horn tip position in the base frame for one leg at horn angle alpha."""
    beta = geom.servo_axis_angles[leg]
    s = geom.horn_directions[leg]
    c = math.cos(alpha)
    return geom.base_anchors[leg] + geom.horn_length * np.array(
        [c * math.cos(beta), c * math.sin(beta), s * math.sin(alpha)]
    )


def inverse_kinematics(pose: Pose6, geom: PlatformGeometry) -> np.ndarray:
    """Horn angles (radians, one per leg) that realize the pose.

    Raises UnreachableError / OutOfRangeError for the first failing leg.
    """
    anchors = platform_anchors_at(pose, geom)
    h = geom.horn_length
    d2 = geom.rod_length**2
    alphas = np.empty(6)
    for i in range(6):
        lvec = anchors[i] - geom.base_anchors[i]
        beta = geom.servo_axis_angles[i]
        s = geom.horn_directions[i]
        e = 2.0 * h * s * lvec[2]
        f = 2.0 * h * (lvec[0] * math.cos(beta) + lvec[1] * math.sin(beta))
        g = float(lvec @ lvec) + h * h - d2
        rho = math.hypot(e, f)
        if rho == 0.0 or abs(g) > rho:
            raise UnreachableError(i, f"|{g:.5f}| > {rho:.5f}")
        core = math.asin(g / rho)
        if s < 0:
            core = math.pi - core
        alpha = normalize_angle(core - math.atan2(f, e))
        if not (geom.servo_min <= alpha <= geom.servo_max):
            raise OutOfRangeError(i, alpha, geom.servo_min, geom.servo_max)
        alphas[i] = alpha
    return alphas


def leg_residuals(pose: Pose6, alpha: np.ndarray, geom: PlatformGeometry) -> np.ndarray:
    """Squared-distance residuals |anchor - tip|^2 - rod^2, one per leg."""
    anchors = platform_anchors_at(pose, geom)
    res = np.empty(6)
    for i in range(6):
        v = anchors[i] - horn_tip(geom, i, float(alpha[i]))
        res[i] = float(v @ v) - geom.rod_length**2
    return res


def forward_kinematics(
    alpha,
    geom: PlatformGeometry,
    guess: Pose6 | None = None,
    max_iter: int = 100,
    tol: float = 1e-10,
) -> tuple[Pose6, int]:
    """Solve the pose from horn angles by damped Newton iteration.

    Iterates on the six squared-distance residuals; the step is halved
    whenever the residual norm would increase.  Returns (pose, iterations).
    The home pose is an adequate guess everywhere in the operating
    envelope.  Like any parallel platform, the forward map has multiple
    assembly modes; far outside the envelope (all six DOFs stacked at
    their extremes) two modes can coincide in angle space, in which case
    the solve returns whichever mode its basin reaches.  Residuals are
    satisfied either way.
    """
    alpha = np.asarray(alpha, dtype=float)
    if alpha.shape != (6,):
        raise ValueError(f"expected 6 horn angles, got shape {alpha.shape}")
    tips = np.array([horn_tip(geom, i, float(alpha[i])) for i in range(6)])
    d2 = geom.rod_length**2
    x = np.array(guess.as_tuple()) if guess is not None else np.zeros(6)

    def residual(v: np.ndarray) -> np.ndarray:
        r = rotation_matrix(v[3], v[4], v[5])
        center = np.array([v[0], v[1], geom.home_height + v[2]])
        anchors = center + geom.platform_anchors @ r.T
        diff = anchors - tips
        return np.einsum("ij,ij->i", diff, diff) - d2

    res = residual(x)
    norm = float(np.linalg.norm(res))
    for it in range(1, max_iter + 1):
        if norm < tol:
            return Pose6.from_sequence(x), it - 1
        r = rotation_matrix(x[3], x[4], x[5])
        dr = rotation_partials(x[3], x[4], x[5])
        center = np.array([x[0], x[1], geom.home_height + x[2]])
        anchors = center + geom.platform_anchors @ r.T
        diff = anchors - tips
        jac = np.empty((6, 6))
        jac[:, 0:3] = 2.0 * diff
        for k in range(3):
            jac[:, 3 + k] = 2.0 * np.einsum(
                "ij,ij->i", diff, geom.platform_anchors @ dr[k].T
            )
        try:
            step = np.linalg.solve(jac, -res)
        except np.linalg.LinAlgError:
            raise NoConvergenceError("singular Jacobian in Newton iteration") from None
        scale = 1.0
        for _ in range(40):
            trial = x + scale * step
            trial_res = residual(trial)
            trial_norm = float(np.linalg.norm(trial_res))
            if trial_norm < norm or trial_norm < tol:
                break
            scale *= 0.5
        else:
            raise NoConvergenceError(f"damping stalled at iteration {it}")
        x, res, norm = trial, trial_res, trial_norm
    if norm < tol:
        return Pose6.from_sequence(x), max_iter
    raise NoConvergenceError(f"residual norm {norm:.3e} after {max_iter} iterations")


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of the kinematic-level software limit check."""

    valid: bool
    angles: np.ndarray | None = None
    failures: tuple[tuple[int, str], ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.valid

    @property
    def reason(self) -> str:
        return "; ".join(msg for _, msg in self.failures) if self.failures else ""


def validate_pose(pose: Pose6, geom: PlatformGeometry) -> ValidationResult:
    """Valid iff inverse kinematics succeeds with every angle in range.

    Failures never raise; they come back in the result so callers can
    refuse to send anything to the motor controller.
    """
    try:
        angles = inverse_kinematics(pose, geom)
    except UnreachableError as e:
        return ValidationResult(valid=False, failures=((e.leg, f"unreachable: {e}"),))
    except OutOfRangeError as e:
        return ValidationResult(valid=False, failures=((e.leg, f"out of range: {e}"),))
    return ValidationResult(valid=True, angles=angles)
