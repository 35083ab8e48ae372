import pytest

from animatron.kinematics.geometry import default_geometry


@pytest.fixture(scope="session")
def geom():
    return default_geometry()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one PASS/FAIL line per acceptance criterion."""
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    label = getattr(getattr(item, "function", None), "_criterion", None)
    if label:
        status = "PASS" if report.passed else "FAIL"
        capman = item.config.pluginmanager.getplugin("capturemanager")
        if capman:
            with capman.global_and_fixture_disabled():
                print(f"\n[{status}] {label}")
        else:
            print(f"\n[{status}] {label}")
