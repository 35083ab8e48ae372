from animatron.kinematics.pose import Pose6, normalize_angle, rotation_matrix
from animatron.kinematics.geometry import (
    GeometryError,
    PlatformGeometry,
    build_paired_geometry,
    default_geometry,
    load_geometry,
)
from animatron.kinematics.solver import (
    KinematicsError,
    NoConvergenceError,
    OutOfRangeError,
    UnreachableError,
    ValidationResult,
    forward_kinematics,
    inverse_kinematics,
    validate_pose,
)
from animatron.kinematics.workspace import WorkspaceReport, sample_workspace

__all__ = [
    "Pose6",
    "normalize_angle",
    "rotation_matrix",
    "GeometryError",
    "PlatformGeometry",
    "build_paired_geometry",
    "default_geometry",
    "load_geometry",
    "KinematicsError",
    "NoConvergenceError",
    "OutOfRangeError",
    "UnreachableError",
    "ValidationResult",
    "forward_kinematics",
    "inverse_kinematics",
    "validate_pose",
    "WorkspaceReport",
    "sample_workspace",
]
