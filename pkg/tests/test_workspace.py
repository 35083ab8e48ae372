import csv
import json
import math

import pytest

from animatron.kinematics.geometry import build_paired_geometry
from animatron.kinematics.solver import validate_pose
from animatron.kinematics.workspace import sample_workspace


@pytest.fixture(scope="module")
def report(geom):
    # coarse grid keeps unit tests fast; the acceptance suite runs 2mm/1deg
    return sample_workspace(
        geom, translation_resolution=0.004, tilt_resolution=math.radians(2), azimuth_count=8
    )


def test_translation_claims(report):
    for axis in ("x", "y", "z"):
        assert report.max_translation[axis] >= 0.04


def test_tilt_claim(report):
    assert report.max_tilt >= math.radians(40)
    assert report.min_tilt_over_azimuth <= report.max_tilt


def test_extents_bracket_max_translation(report):
    for axis, (neg, pos) in report.extents.items():
        assert neg <= 0 <= pos
        assert report.max_translation[axis] == pytest.approx(min(-neg, pos))


def test_reported_reachable_samples_all_validate(geom, report):
    reachable = [s for s in report.samples if s.reachable]
    assert reachable
    for s in reachable:
        assert validate_pose(s.pose, geom).valid


def test_degenerate_geometry_small_but_consistent():
    # rod barely clears the horizontal tip-to-anchor span: home sits ~1cm
    # above the base and every motion range collapses
    tiny = build_paired_geometry(
        0.09, math.radians(12), 0.06, math.radians(12), horn_length=0.06, rod_length=0.068
    )
    r = sample_workspace(
        tiny, translation_resolution=0.002, tilt_resolution=math.radians(2), azimuth_count=6
    )
    assert max(r.max_translation.values()) < 0.02
    assert r.max_tilt < math.radians(16)
    for s in r.samples:
        assert s.reachable == validate_pose(s.pose, tiny).valid


def test_rejects_nonpositive_resolution(geom):
    with pytest.raises(ValueError):
        sample_workspace(geom, translation_resolution=0.0)


def test_json_and_csv_outputs(tmp_path, report):
    data = json.loads(report.to_json())
    assert set(data["geometry_claims"]["max_translation_m"]) == {"x", "y", "z"}
    assert data["sample_count"] == len(report.samples)

    path = tmp_path / "samples.csv"
    report.write_csv(path)
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["kind", "x", "y", "z", "roll", "pitch", "yaw", "reachable"]
    assert len(rows) == len(report.samples) + 1
