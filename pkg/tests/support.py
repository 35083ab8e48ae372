"""Independent oracles used across the test suite.

Everything here is deliberately written from scratch rather than imported
from the package: the rotation matrices are composed explicitly, the horn
tip is re-derived from the geometry definition, roots are located by scan
plus bisection, and Bezier curves are evaluated with de Casteljau's
algorithm.  Tests compare the production code against these.
"""

from __future__ import annotations

import math

import numpy as np

from animatron.kinematics.geometry import PlatformGeometry
from animatron.kinematics.pose import Pose6
from animatron.kinematics.solver import validate_pose


# -- kinematics oracle --------------------------------------------------------

def oracle_rotation(roll: float, pitch: float, yaw: float) -> np.ndarray:
    """Intrinsic x-y-z rotation, composed step by step on body axes."""
    cr, sr = math.cos(roll), math.sin(roll)
    cp, sp = math.cos(pitch), math.sin(pitch)
    cy, sy = math.cos(yaw), math.sin(yaw)
    rx = np.array([[1, 0, 0], [0, cr, -sr], [0, sr, cr]], dtype=float)
    ry = np.array([[cp, 0, sp], [0, 1, 0], [-sp, 0, cp]], dtype=float)
    rz = np.array([[cy, -sy, 0], [sy, cy, 0], [0, 0, 1]], dtype=float)
    # intrinsic sequence: each subsequent rotation in the already-rotated frame
    return rx @ ry @ rz


def oracle_anchor(pose: Pose6, geom: PlatformGeometry, leg: int) -> np.ndarray:
    r = oracle_rotation(pose.roll, pose.pitch, pose.yaw)
    center = np.array([pose.x, pose.y, geom.home_height + pose.z])
    return center + r @ geom.platform_anchors[leg]


def oracle_horn_tip(geom: PlatformGeometry, leg: int, alpha: float) -> np.ndarray:
    beta = float(geom.servo_axis_angles[leg])
    s = float(geom.horn_directions[leg])
    return geom.base_anchors[leg] + geom.horn_length * np.array(
        [math.cos(alpha) * math.cos(beta), math.cos(alpha) * math.sin(beta), s * math.sin(alpha)]
    )


def oracle_leg_roots(pose: Pose6, geom: PlatformGeometry, leg: int, scan: int = 4096) -> list[float]:
    """All horn angles in [servo_min, servo_max] satisfying the rod constraint.

    Scans the range for sign changes of |anchor - tip(a)|^2 - rod^2 (the
    grid evaluation is vectorized for speed; the math is still the leg
    geometry written out from scratch), then bisects each bracket down to
    ~1e-13 rad with scalar evaluations.
    """
    anchor = oracle_anchor(pose, geom, leg)
    rod2 = geom.rod_length**2
    bx, by, bz = geom.base_anchors[leg]
    beta = float(geom.servo_axis_angles[leg])
    s = float(geom.horn_directions[leg])
    h = geom.horn_length

    def resid(a: float) -> float:
        tx = bx + h * math.cos(a) * math.cos(beta)
        ty = by + h * math.cos(a) * math.sin(beta)
        tz = bz + h * s * math.sin(a)
        return (anchor[0] - tx) ** 2 + (anchor[1] - ty) ** 2 + (anchor[2] - tz) ** 2 - rod2

    xs = np.linspace(geom.servo_min, geom.servo_max, scan + 1)
    tips_x = bx + h * np.cos(xs) * math.cos(beta)
    tips_y = by + h * np.cos(xs) * math.sin(beta)
    tips_z = bz + h * s * np.sin(xs)
    vals = (
        (anchor[0] - tips_x) ** 2 + (anchor[1] - tips_y) ** 2 + (anchor[2] - tips_z) ** 2 - rod2
    )
    roots: list[float] = []
    for i in np.nonzero((vals[:-1] == 0.0) | (vals[:-1] * vals[1:] < 0.0))[0]:
        a, b = float(xs[i]), float(xs[i + 1])
        fa = float(vals[i])
        if fa == 0.0:
            roots.append(a)
            continue
        for _ in range(100):
            m = 0.5 * (a + b)
            fm = resid(m)
            if fm == 0.0:
                a = b = m
                break
            if fa * fm < 0.0:
                b = m
            else:
                a, fa = m, fm
        roots.append(0.5 * (a + b))
    if vals[-1] == 0.0:
        roots.append(float(xs[-1]))
    return roots


def random_reachable_poses(
    geom: PlatformGeometry,
    n: int,
    seed: int,
    translation: float = 0.045,
    angle: float = math.radians(30.0),
    tilt_cap: float = math.radians(32.0),
) -> list[Pose6]:
    """Rejection-sample n valid poses across the operating envelope.

    The envelope is the advertised motion range: up to 4.5 cm per
    translation axis and 30 deg per angle, with total tilt from vertical
    capped at 32 deg.  Stacking all six DOFs at their extremes leaves the
    envelope and enters a region where distinct poses can share one servo
    solution (the platform nears a fold of its forward map), so identity
    round trips are only meaningful inside it.
    """
    rng = np.random.default_rng(seed)
    poses: list[Pose6] = []
    while len(poses) < n:
        vals = rng.uniform(
            [-translation] * 3 + [-angle] * 3, [translation] * 3 + [angle] * 3
        )
        pose = Pose6(*vals)
        tilt = math.acos(max(-1.0, min(1.0, float(pose.rotation()[2, 2]))))
        if tilt > tilt_cap:
            continue
        if validate_pose(pose, geom).valid:
            poses.append(pose)
    return poses


# -- Bezier oracle ------------------------------------------------------------

def decasteljau(points: list[tuple[float, float]], u: float) -> tuple[float, float]:
    """Evaluate a Bezier curve by repeated linear interpolation."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    w = 1.0 - u
    while len(xs) > 1:
        xs = [w * a + u * b for a, b in zip(xs[:-1], xs[1:])]
        ys = [w * a + u * b for a, b in zip(ys[:-1], ys[1:])]
    return xs[0], ys[0]


def oracle_bezier_value(
    p0: tuple[float, float],
    p1: tuple[float, float],
    p2: tuple[float, float],
    p3: tuple[float, float],
    t: float,
) -> float:
    """Value of the 2D (time, value) cubic at time t.

    Bisects the curve parameter on the de-Casteljau-evaluated time
    component (monotone by construction of valid segments).
    """
    pts = [p0, p1, p2, p3]
    lo, hi = 0.0, 1.0
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        if decasteljau(pts, mid)[0] < t:
            lo = mid
        else:
            hi = mid
    return decasteljau(pts, 0.5 * (lo + hi))[1]
