import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from symcurve import Isometry2, TrigCurve

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_criteria: list[tuple[int, str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        num, title = mark.args
        status = "PASS" if rep.outcome == "passed" else "FAIL"
        _criteria.append((num, title, status, item.name))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, status, name in sorted(_criteria):
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {title} ({name})")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


coords = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
angles = st.floats(0, 2 * math.pi, allow_nan=False)


@st.composite
def isometries(draw):
    angle = draw(angles)
    t = (draw(coords), draw(coords))
    base = Isometry2.rotation(angle) if draw(st.booleans()) else Isometry2.reflection(angle)
    return Isometry2(base.matrix, np.array(t))


@st.composite
def polylines(draw, min_n=3, max_n=16):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return np.random.default_rng(seed).uniform(-1, 1, (n, 2))


@st.composite
def trig_curves(draw, max_degree=5):
    seed = draw(st.integers(0, 2**32 - 1))
    N = draw(st.integers(1, max_degree))
    r = np.random.default_rng(seed)
    return TrigCurve(r.uniform(-2, 2, 2), r.uniform(-1, 1, (N, 2)), r.uniform(-1, 1, (N, 2)))
